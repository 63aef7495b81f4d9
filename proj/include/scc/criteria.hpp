#pragma once

#include <optional>
#include <vector>

#include "scc/core.hpp"

// Coefficient criteria for the unified starlike-convex classes.
//
// A series z + sum a_n z^n is in the class when
//
//   sum_{n>=2} (1 + (n-1)*gamma) * (n - alpha - (n-1)*alpha*beta) * |a_n|
//     <= 1 - alpha.
//
// For ClassA series the condition is sufficient; for ClassT series (negative
// coefficients) it characterizes membership. The closed-form conditions at
// the bottom decide the same question for Wright-type series directly from
// (lambda, mu, alpha, beta, gamma).

namespace scc {

// Ties at value == budget count as satisfied; the sharp extremal series sit
// exactly on the boundary.
inline constexpr double kMembershipTolerance = 1e-12;

struct TermContribution {
  int n;
  double weight;
  double contribution;  // weight * a_n
};

struct CriterionResult {
  double value = 0.0;   // sum of weight * a_n over stored coefficients
  double budget = 0.0;  // 1 - alpha
  bool satisfied = false;
  std::optional<std::vector<TermContribution>> per_term;
};

// (1 + (n-1)*gamma) * (n - alpha - (n-1)*alpha*beta); strictly positive for
// every n >= 2 under the ClassParams invariants.
double criterion_weight(const ClassParams& params, int n);

// Weighted coefficient sum against the budget 1 - alpha. The sum runs over
// the stored coefficients only, which is exact for polynomials.
CriterionResult criterion_sum(const SignedPowerSeries& series,
                              const ClassParams& params,
                              bool with_terms = false);

// ClassA series: true implies membership; false is inconclusive (the
// condition is one-directional). Rejects ClassT input.
bool is_member_sufficient(const SignedPowerSeries& series,
                          const ClassParams& params);

// ClassT series: satisfied criterion is equivalent to membership.
// Rejects ClassA input.
bool is_member_iff(const SignedPowerSeries& series, const ClassParams& params);

// The single-term series z +/- (1-alpha)/weight(n) * z^n attaining equality
// in the criterion.
SignedPowerSeries extremal_function(const ClassParams& params, int n,
                                    Convention convention);

// Largest admissible |a_n|: (1-alpha)/criterion_weight(params, n). Equals
// the extremal function's coefficient.
double coefficient_bound(const ClassParams& params, int n);

// Left-hand side of the closed-form condition for the direct Wright-type
// series:
//   {(1-alpha*beta)*gamma + [1-alpha*beta + (2-(1+beta)*alpha)*gamma]*mu}
//     * mu^{-2} * e^{1/mu}
// Requires lambda >= 1, mu > 0.462.
double closed_form_wright_lhs(const WrightParams& w, const ClassParams& p);

// True iff the closed-form inequality lhs <= 1 - alpha holds. True implies
// that the Wright-type series (either convention, any truncation) passes
// the coefficient criterion.
bool closed_form_wright_condition(const WrightParams& w, const ClassParams& p);

// Left-hand side of the closed-form condition for the integrated series:
//   {(1-alpha*beta)*gamma/mu + (1-beta)*(1-gamma)*alpha*(1-e^{-1/mu})}
//     * e^{1/mu}
double closed_form_integral_lhs(const WrightParams& w, const ClassParams& p);

// True iff lhs <= 1 - alpha; true implies the integral transform of the
// Wright-type series passes the coefficient criterion.
bool closed_form_integral_condition(const WrightParams& w,
                                    const ClassParams& p);

}  // namespace scc
