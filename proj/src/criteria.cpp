#include "scc/criteria.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace scc {

double criterion_weight(const ClassParams& params, int n) {
  if (n < 2) {
    throw std::domain_error("criterion_weight requires n >= 2, got " +
                            std::to_string(n));
  }
  const double k = static_cast<double>(n - 1);
  return (1.0 + k * params.gamma()) *
         (static_cast<double>(n) - params.alpha() -
          k * params.alpha() * params.beta());
}

CriterionResult criterion_sum(const SignedPowerSeries& series,
                              const ClassParams& params, bool with_terms) {
  CriterionResult result;
  result.budget = params.budget();
  if (with_terms) {
    result.per_term.emplace();
    result.per_term->reserve(series.coefficients().size());
  }
  const auto& coeffs = series.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int n = static_cast<int>(i) + 2;
    const double weight = criterion_weight(params, n);
    const double contribution = weight * coeffs[i];
    result.value += contribution;
    if (with_terms) {
      result.per_term->push_back({n, weight, contribution});
    }
  }
  result.satisfied = result.value <= result.budget + kMembershipTolerance;
  return result;
}

bool is_member_sufficient(const SignedPowerSeries& series,
                          const ClassParams& params) {
  if (series.convention() != Convention::ClassA) {
    throw std::invalid_argument(
        "is_member_sufficient takes a ClassA series; use is_member_iff for "
        "ClassT");
  }
  return criterion_sum(series, params).satisfied;
}

bool is_member_iff(const SignedPowerSeries& series, const ClassParams& params) {
  if (series.convention() != Convention::ClassT) {
    throw std::invalid_argument(
        "is_member_iff takes a ClassT series; use is_member_sufficient for "
        "ClassA");
  }
  return criterion_sum(series, params).satisfied;
}

SignedPowerSeries extremal_function(const ClassParams& params, int n,
                                    Convention convention) {
  if (n < 2) {
    throw std::domain_error("extremal_function requires n >= 2, got " +
                            std::to_string(n));
  }
  std::vector<double> coeffs(static_cast<std::size_t>(n - 1), 0.0);
  coeffs.back() = params.budget() / criterion_weight(params, n);
  return SignedPowerSeries(convention, std::move(coeffs));
}

double coefficient_bound(const ClassParams& params, int n) {
  return params.budget() / criterion_weight(params, n);
}

double closed_form_wright_lhs(const WrightParams& w, const ClassParams& p) {
  require_closed_form_hypothesis(w);
  const double mu = w.mu();
  const double ab = p.alpha() * p.beta();
  const double linear =
      1.0 - ab + (2.0 - (1.0 + p.beta()) * p.alpha()) * p.gamma();
  return ((1.0 - ab) * p.gamma() + linear * mu) * std::exp(1.0 / mu) /
         (mu * mu);
}

bool closed_form_wright_condition(const WrightParams& w, const ClassParams& p) {
  return closed_form_wright_lhs(w, p) <= p.budget();
}

double closed_form_integral_lhs(const WrightParams& w, const ClassParams& p) {
  require_closed_form_hypothesis(w);
  const double mu = w.mu();
  const double ab = p.alpha() * p.beta();
  const double inv = 1.0 / mu;
  return ((1.0 - ab) * p.gamma() * inv +
          (1.0 - p.beta()) * (1.0 - p.gamma()) * p.alpha() *
              (1.0 - std::exp(-inv))) *
         std::exp(inv);
}

bool closed_form_integral_condition(const WrightParams& w,
                                    const ClassParams& p) {
  return closed_form_integral_lhs(w, p) <= p.budget();
}

}  // namespace scc
