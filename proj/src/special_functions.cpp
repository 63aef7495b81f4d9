#include "scc/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace scc {

namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

// Lanczos coefficients, g = 7.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

double ln_gamma_lanczos(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (x - 1.0 + static_cast<double>(i));
  }
  const double t = x + 6.5;  // x + g - 0.5
  return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

// n! for n <= 20, exact in double.
constexpr std::array<double, 21> kFactorial = {
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0};

}  // namespace

double ln_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("ln_gamma requires x > 0, got " +
                            std::to_string(x));
  }
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(M_PI / std::sin(M_PI * x)) - ln_gamma_lanczos(1.0 - x);
  }
  return ln_gamma_lanczos(x);
}

double pochhammer(double mu, int k) {
  if (!(mu > 0.0)) {
    throw std::domain_error("pochhammer requires mu > 0, got " +
                            std::to_string(mu));
  }
  if (k < 0) {
    throw std::domain_error("pochhammer requires k >= 0, got " +
                            std::to_string(k));
  }
  if (k <= 30) {
    double prod = 1.0;
    for (int j = 0; j < k; ++j) {
      prod *= mu + static_cast<double>(j);
    }
    return prod;
  }
  return std::exp(ln_gamma(mu + static_cast<double>(k)) - ln_gamma(mu));
}

double wright_coefficient(const WrightParams& params, int n) {
  if (n < 2) {
    throw std::domain_error("wright_coefficient requires n >= 2, got " +
                            std::to_string(n));
  }
  const double mu = params.mu();
  const double arg = params.lambda() * static_cast<double>(n - 1) + mu;
  // arg <= 0 can only happen for lambda in (-1, 0); ln_gamma rejects it.
  const double log_ratio = ln_gamma(mu) - ln_gamma(arg) - 1.0 / mu;
  if (n - 1 <= 20) {
    return std::exp(log_ratio) / kFactorial[static_cast<std::size_t>(n - 1)];
  }
  return std::exp(log_ratio - ln_gamma(static_cast<double>(n)));
}

WrightCoefficientTable wright_coefficient_table(const WrightParams& params,
                                                int truncation) {
  if (truncation < 1) {
    throw std::domain_error("truncation must be >= 1, got " +
                            std::to_string(truncation));
  }
  WrightCoefficientTable table{params, {}};
  table.values.reserve(static_cast<std::size_t>(truncation - 1));
  for (int n = 2; n <= truncation; ++n) {
    table.values.push_back(wright_coefficient(params, n));
  }
  return table;
}

SignedPowerSeries wright_series(const WrightParams& params, int truncation,
                                Convention convention) {
  return SignedPowerSeries(convention,
                           wright_coefficient_table(params, truncation).values);
}

SignedPowerSeries integral_transform(const SignedPowerSeries& series) {
  std::vector<double> transformed = series.coefficients();
  for (std::size_t i = 0; i < transformed.size(); ++i) {
    transformed[i] /= static_cast<double>(i + 2);
  }
  return SignedPowerSeries(series.convention(), std::move(transformed));
}

}  // namespace scc
