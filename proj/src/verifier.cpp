#include "scc/verifier.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "scc/criteria.hpp"

namespace scc {

namespace {

constexpr double kDenominatorFloor = 1e-14;
constexpr double kNumericSlack = 1e-9;

std::string complex_to_string(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
         ")";
}

}  // namespace

SingularityError::SingularityError(Complex z)
    : std::runtime_error("phi denominator vanishes at z = " +
                         complex_to_string(z)),
      z_(z) {}

SeriesJet eval_series(const SignedPowerSeries& series, Complex z) {
  if (std::abs(z) >= 1.0) {
    throw std::domain_error("series evaluation requires |z| < 1");
  }
  const auto& a = series.coefficients();
  const double sign = series.sign();
  // h0 = sum a_n z^{n-2}, h1 = sum n a_n z^{n-2}, h2 = sum n(n-1) a_n z^{n-2}
  Complex h0 = 0.0;
  Complex h1 = 0.0;
  Complex h2 = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) {
    const double n = static_cast<double>(i + 2);
    h0 = h0 * z + a[i];
    h1 = h1 * z + n * a[i];
    h2 = h2 * z + n * (n - 1.0) * a[i];
  }
  return {z + sign * z * z * h0, 1.0 + sign * z * h1, sign * h2};
}

Complex phi_ratio(const SignedPowerSeries& series, const ClassParams& params,
                  Complex z) {
  if (z == Complex{0.0, 0.0}) {
    // numerator and denominator are both ~ z; the limit is 1
    return {1.0, 0.0};
  }
  const SeriesJet jet = eval_series(series, z);
  const double beta = params.beta();
  const double gamma = params.gamma();
  const Complex numerator = z * jet.f1 + gamma * z * z * jet.f2;
  const Complex denominator =
      gamma * z * (jet.f1 + beta * z * jet.f2) +
      (1.0 - gamma) * (beta * z * jet.f1 + (1.0 - beta) * jet.f);
  if (std::abs(denominator) < kDenominatorFloor) {
    throw SingularityError(z);
  }
  if (numerator == denominator) {
    return {1.0, 0.0};  // exact, keeps grid ties deterministic
  }
  return numerator / denominator;
}

PhiSample sample_phi(const SignedPowerSeries& series, const ClassParams& params,
                     Complex z) {
  const Complex phi = phi_ratio(series, params, z);
  return {z, phi, phi.real()};
}

MinRePhi min_re_phi(const SignedPowerSeries& series, const ClassParams& params,
                    const DiskGrid& grid) {
  double best = std::numeric_limits<double>::infinity();
  Complex argmin{0.0, 0.0};
  const int angle_count = grid.angles_per_radius();
  const double step = 2.0 * M_PI / static_cast<double>(angle_count);
  for (double r : grid.radii()) {
    for (int j = 0; j < angle_count; ++j) {
      const Complex z = std::polar(r, step * static_cast<double>(j));
      const double re = phi_ratio(series, params, z).real();
      if (re < best) {
        best = re;
        argmin = z;
      }
    }
  }
  return {best, argmin};
}

VerificationReport cross_validate(const SignedPowerSeries& series,
                                  const ClassParams& params,
                                  const DiskGrid& grid) {
  const CriterionResult criterion = criterion_sum(series, params);
  const MinRePhi sampled = min_re_phi(series, params, grid);
  VerificationReport report;
  report.criterion_value = criterion.value;
  report.criterion_budget = criterion.budget;
  report.margin = criterion.budget - criterion.value;
  report.min_re_phi = sampled.min;
  report.argmin_z = sampled.argmin;
  report.passed_criterion = criterion.satisfied;
  report.passed_numeric = sampled.min > params.alpha() - kNumericSlack;
  if (report.passed_criterion && !report.passed_numeric) {
    // the criterion is sufficient for Re(phi) > alpha on the whole disk,
    // so this combination indicates a bug in the criteria or the evaluator
    throw std::logic_error(
        "criterion satisfied but sampled min Re(phi) fell below alpha");
  }
  return report;
}

}  // namespace scc
