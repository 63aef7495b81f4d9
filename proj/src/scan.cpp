#include "scc/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <thread>

#include "scc/criteria.hpp"
#include "scc/special_functions.hpp"

namespace scc {

namespace {

struct ConditionTraits {
  bool integrated;            // apply the integral transform
  Convention convention;      // convention of the criterion series
};

ConditionTraits traits_of(ScanCondition c) {
  switch (c) {
    case ScanCondition::WrightClosedForm:
      return {false, Convention::ClassA};
    case ScanCondition::IntegralClosedForm:
      return {true, Convention::ClassA};
    case ScanCondition::CriterionA:
      return {false, Convention::ClassA};
    case ScanCondition::CriterionT:
      return {false, Convention::ClassT};
    case ScanCondition::CriterionAIntegral:
      return {true, Convention::ClassA};
    case ScanCondition::CriterionTIntegral:
      return {true, Convention::ClassT};
  }
  throw std::logic_error("unreachable scan condition");
}

void validate_axis(const AxisSpec& axis, const char* name, double lo_limit,
                   double hi_limit, bool lo_open, bool hi_open) {
  if (axis.steps < 1) {
    throw std::invalid_argument(std::string(name) + ": steps must be >= 1");
  }
  if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi) || axis.lo > axis.hi) {
    throw std::invalid_argument(std::string(name) + ": need lo <= hi, finite");
  }
  const bool lo_ok = lo_open ? axis.lo > lo_limit : axis.lo >= lo_limit;
  const bool hi_ok = hi_open ? axis.hi < hi_limit : axis.hi <= hi_limit;
  if (!lo_ok || !hi_ok) {
    throw std::invalid_argument(std::string(name) + ": range [" +
                                std::to_string(axis.lo) + ", " +
                                std::to_string(axis.hi) +
                                "] violates the parameter domain");
  }
}

}  // namespace

ScanCondition parse_scan_condition(const std::string& name) {
  if (name == "wright") return ScanCondition::WrightClosedForm;
  if (name == "integral") return ScanCondition::IntegralClosedForm;
  if (name == "criterion-a") return ScanCondition::CriterionA;
  if (name == "criterion-t") return ScanCondition::CriterionT;
  if (name == "criterion-a-integral") return ScanCondition::CriterionAIntegral;
  if (name == "criterion-t-integral") return ScanCondition::CriterionTIntegral;
  throw std::invalid_argument(
      "unknown scan condition '" + name +
      "' (expected wright, integral, criterion-a, criterion-t, "
      "criterion-a-integral or criterion-t-integral)");
}

const char* to_string(ScanCondition condition) {
  switch (condition) {
    case ScanCondition::WrightClosedForm: return "wright";
    case ScanCondition::IntegralClosedForm: return "integral";
    case ScanCondition::CriterionA: return "criterion-a";
    case ScanCondition::CriterionT: return "criterion-t";
    case ScanCondition::CriterionAIntegral: return "criterion-a-integral";
    case ScanCondition::CriterionTIntegral: return "criterion-t-integral";
  }
  return "?";
}

double AxisSpec::value_at(int i) const {
  if (steps == 1 || i == 0) {
    return lo;
  }
  if (i == steps - 1) {
    return hi;  // exact endpoints regardless of rounding
  }
  return lo + (hi - lo) * (static_cast<double>(i) /
                           static_cast<double>(steps - 1));
}

std::size_t ScanSpec::total_points() const {
  return static_cast<std::size_t>(alpha.steps) *
         static_cast<std::size_t>(beta.steps) *
         static_cast<std::size_t>(gamma.steps) *
         static_cast<std::size_t>(lambda.steps) *
         static_cast<std::size_t>(mu.steps);
}

void ScanSpec::validate() const {
  validate_axis(alpha, "alpha", 0.0, 1.0, false, true);
  validate_axis(beta, "beta", 0.0, 1.0, false, true);
  validate_axis(gamma, "gamma", 0.0, 1.0, false, false);
  validate_axis(lambda, "lambda", 1.0, std::numeric_limits<double>::infinity(),
                false, true);
  validate_axis(mu, "mu", kClosedFormMuLowerBound,
                std::numeric_limits<double>::infinity(), true, true);
  if (truncation < 1) {
    throw std::invalid_argument("truncation must be >= 1");
  }
  if (total_points() > kMaxScanPoints) {
    throw std::invalid_argument("grid has " + std::to_string(total_points()) +
                                " points, exceeding the guard of " +
                                std::to_string(kMaxScanPoints));
  }
}

ScanResult run_scan(const ScanSpec& spec, unsigned threads) {
  spec.validate();
  const ConditionTraits traits = traits_of(spec.condition);
  const std::size_t total = spec.total_points();

  ScanResult result;
  result.rows.resize(total);
  result.summary.total = total;

  const std::size_t mu_n = static_cast<std::size_t>(spec.mu.steps);
  const std::size_t lambda_n = static_cast<std::size_t>(spec.lambda.steps);
  const std::size_t gamma_n = static_cast<std::size_t>(spec.gamma.steps);
  const std::size_t beta_n = static_cast<std::size_t>(spec.beta.steps);

  auto compute = [&](std::size_t begin, std::size_t end) {
    // cache the coefficient table across points sharing (lambda, mu)
    double cached_lambda = std::numeric_limits<double>::quiet_NaN();
    double cached_mu = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> cached_coeffs;

    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      const int mu_i = static_cast<int>(rest % mu_n);
      rest /= mu_n;
      const int lambda_i = static_cast<int>(rest % lambda_n);
      rest /= lambda_n;
      const int gamma_i = static_cast<int>(rest % gamma_n);
      rest /= gamma_n;
      const int beta_i = static_cast<int>(rest % beta_n);
      rest /= beta_n;
      const int alpha_i = static_cast<int>(rest);

      ScanRow& row = result.rows[idx];
      row.alpha = spec.alpha.value_at(alpha_i);
      row.beta = spec.beta.value_at(beta_i);
      row.gamma = spec.gamma.value_at(gamma_i);
      row.lambda = spec.lambda.value_at(lambda_i);
      row.mu = spec.mu.value_at(mu_i);

      const ClassParams params(row.alpha, row.beta, row.gamma);
      const WrightParams w(row.lambda, row.mu);

      row.closed_form = traits.integrated
                            ? closed_form_integral_condition(w, params)
                            : closed_form_wright_condition(w, params);

      if (row.lambda != cached_lambda || row.mu != cached_mu) {
        cached_coeffs =
            wright_coefficient_table(w, spec.truncation).values;
        cached_lambda = row.lambda;
        cached_mu = row.mu;
      }
      SignedPowerSeries series(traits.convention, cached_coeffs);
      if (traits.integrated) {
        series = integral_transform(series);
      }
      row.criterion = criterion_sum(series, params).satisfied;
    }
  };

  unsigned worker_count = threads == 0
                              ? std::max(1u, std::thread::hardware_concurrency())
                              : threads;
  worker_count = static_cast<unsigned>(
      std::min<std::size_t>(worker_count, std::max<std::size_t>(total, 1)));

  if (worker_count <= 1 || total < 2) {
    compute(0, total);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::size_t chunk = (total + worker_count - 1) / worker_count;
    for (unsigned t = 0; t < worker_count; ++t) {
      const std::size_t begin = static_cast<std::size_t>(t) * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) {
        break;
      }
      workers.emplace_back(compute, begin, end);
    }
    for (auto& worker : workers) {
      worker.join();
    }
  }

  for (const ScanRow& row : result.rows) {
    result.summary.closed_form_true += row.closed_form ? 1 : 0;
    result.summary.criterion_true += row.criterion ? 1 : 0;
    result.summary.agreement += row.closed_form == row.criterion ? 1 : 0;
    result.summary.implication_violations +=
        (row.closed_form && !row.criterion) ? 1 : 0;
  }
  return result;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) {
    throw std::runtime_error("double formatting failed");
  }
  return std::string(buf, res.ptr);
}

void write_scan_csv(std::ostream& out, const ScanResult& result) {
  out << "alpha,beta,gamma,lambda,mu,closed_form,criterion,agree\n";
  for (const ScanRow& row : result.rows) {
    out << format_double(row.alpha) << ',' << format_double(row.beta) << ','
        << format_double(row.gamma) << ',' << format_double(row.lambda) << ','
        << format_double(row.mu) << ',' << (row.closed_form ? '1' : '0') << ','
        << (row.criterion ? '1' : '0') << ','
        << (row.closed_form == row.criterion ? '1' : '0') << '\n';
  }
}

}  // namespace scc
