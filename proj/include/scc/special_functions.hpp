#pragma once

#include <vector>

#include "scc/core.hpp"

// Self-contained evaluation of log-gamma, Pochhammer symbols and the
// coefficients of Wright-type series
//
//   c_n = Gamma(mu) / Gamma(lambda*(n-1) + mu) * exp(-1/mu) / (n-1)!
//
// together with the series builders and the Alexander-type integral
// transform f -> int_0^z f(t)/t dt (coefficient a_n -> a_n/n).

namespace scc {

// Default truncation for Wright-type series. The coefficients decay faster
// than 1/(mu^{n-1} (n-1)!), so at N = 40 the dropped tail is below 1e-30
// for every mu > 0.462.
inline constexpr int kDefaultWrightTruncation = 40;

// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms) with the
// reflection formula below x = 0.5; relative error <= 1e-12 on [0.1, 200].
double ln_gamma(double x);

// Rising factorial (mu)_k = mu (mu+1) ... (mu+k-1), (mu)_0 = 1.
// Direct product for k <= 30, ln_gamma difference above that.
double pochhammer(double mu, int k);

// Series coefficient c_n, assembled as exp of summed logs so that
// Gamma(lambda*(n-1)+mu) never overflows. Requires n >= 2 and
// lambda*(n-1) + mu > 0 (always true for lambda >= 0).
double wright_coefficient(const WrightParams& params, int n);

// Coefficients c_2..c_N of a Wright-type series.
struct WrightCoefficientTable {
  WrightParams params;
  std::vector<double> values;  // values[i] = c_{i+2}

  int truncation() const { return 1 + static_cast<int>(values.size()); }
};

// N >= 1; N = 1 yields an empty table (the bare series z).
WrightCoefficientTable wright_coefficient_table(const WrightParams& params,
                                                int truncation);

// The Wright-type series z + sum c_n z^n (ClassA) or its reflection
// z - sum c_n z^n (ClassT). Both conventions carry bitwise-identical
// coefficient magnitudes.
SignedPowerSeries wright_series(const WrightParams& params, int truncation,
                                Convention convention);

// Term-wise primitive of (f(t) - t)/t + 1: coefficient a_n maps to a_n/n,
// the leading z term and the convention are preserved.
SignedPowerSeries integral_transform(const SignedPowerSeries& series);

}  // namespace scc
