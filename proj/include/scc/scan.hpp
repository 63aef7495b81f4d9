#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "scc/core.hpp"

// Parameter-region scans: evaluate a closed-form condition and the matching
// coefficient-criterion verdict over a grid of (alpha, beta, gamma, lambda,
// mu) points. The closed form is an upper bound, so "closed form true but
// criterion false" is an implication violation and must never occur.

namespace scc {

// What to evaluate per grid point. Every target pairs a closed-form column
// with the criterion of the matching series; the A/T variants of one series
// carry identical magnitudes, so their criterion columns coincide by
// construction and the distinction only labels the report.
enum class ScanCondition {
  WrightClosedForm,    // closed form for the direct series + ClassA criterion
  IntegralClosedForm,  // closed form for the integrated series + ClassA criterion
  CriterionA,          // direct series, ClassA
  CriterionT,          // direct series, ClassT
  CriterionAIntegral,  // integrated series, ClassA
  CriterionTIntegral,  // integrated series, ClassT
};

ScanCondition parse_scan_condition(const std::string& name);
const char* to_string(ScanCondition condition);

// One grid axis: steps values evenly spaced over [lo, hi]; steps == 1 pins
// the axis at lo.
struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  double value_at(int i) const;
};

inline constexpr std::size_t kMaxScanPoints = 10'000'000;

struct ScanSpec {
  // fixed axis order: alpha, beta, gamma, lambda, mu (alpha outermost)
  AxisSpec alpha{0.0, 0.0, 1};
  AxisSpec beta{0.0, 0.0, 1};
  AxisSpec gamma{0.0, 0.0, 1};
  AxisSpec lambda{1.0, 1.0, 1};
  AxisSpec mu{1.0, 1.0, 1};
  ScanCondition condition = ScanCondition::WrightClosedForm;
  int truncation = 40;

  std::size_t total_points() const;

  // Axis ranges must respect the type invariants (alpha, beta in [0,1),
  // gamma in [0,1], lambda >= 1, mu > 0.462), steps >= 1 per axis, and the
  // total grid size must stay within kMaxScanPoints.
  void validate() const;
};

struct ScanRow {
  double alpha;
  double beta;
  double gamma;
  double lambda;
  double mu;
  bool closed_form;
  bool criterion;
};

struct ScanSummary {
  std::size_t total = 0;
  std::size_t closed_form_true = 0;
  std::size_t criterion_true = 0;
  std::size_t agreement = 0;
  std::size_t implication_violations = 0;  // closed form true, criterion false
};

struct ScanResult {
  std::vector<ScanRow> rows;  // grid order: row-major over the axis order
  ScanSummary summary;
};

// threads == 0 picks the hardware concurrency. Rows are computed
// independently and stored by grid index, so the result is identical for
// any worker count.
ScanResult run_scan(const ScanSpec& spec, unsigned threads = 0);

// CSV with header alpha,beta,gamma,lambda,mu,closed_form,criterion,agree.
// Doubles use the shortest round-trip representation, booleans 0/1; output
// is byte-deterministic for a given spec.
void write_scan_csv(std::ostream& out, const ScanResult& result);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

}  // namespace scc
