#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "scc/core.hpp"
#include "scc/criteria.hpp"

// Shared generators and comparison helpers for the test suites.

namespace scc::test {

// |actual - expected| <= tol * max(1, |expected|); absolute near zero,
// relative elsewhere.
inline bool close_rel(double actual, double expected, double tol) {
  return std::abs(actual - expected) <= tol * std::max(1.0, std::abs(expected));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline ClassParams random_params(std::mt19937_64& rng, double alpha_max = 0.95,
                                 double beta_max = 0.95) {
  return ClassParams(uniform(rng, 0.0, alpha_max), uniform(rng, 0.0, beta_max),
                     uniform(rng, 0.0, 1.0));
}

// A random series scaled so that the criterion sum lands at a random
// fraction of the budget; always passes the coefficient criterion.
inline SignedPowerSeries random_member_series(std::mt19937_64& rng,
                                              const ClassParams& params,
                                              Convention convention,
                                              int max_truncation = 12) {
  const int count = uniform_int(rng, 1, max_truncation - 1);
  std::vector<double> coeffs(static_cast<std::size_t>(count));
  double weighted = 0.0;
  for (int i = 0; i < count; ++i) {
    coeffs[static_cast<std::size_t>(i)] = uniform(rng, 0.0, 1.0);
    weighted += criterion_weight(params, i + 2) *
                coeffs[static_cast<std::size_t>(i)];
  }
  if (weighted > 0.0) {
    const double scale =
        uniform(rng, 0.1, 1.0) * params.budget() / weighted;
    for (double& c : coeffs) {
      c *= scale;
    }
  }
  return SignedPowerSeries(convention, std::move(coeffs));
}

// Modest coefficients (a_n <= 0.5/n^2), no membership constraint; keeps
// f' bounded away from zero on |z| <= 0.9.
inline SignedPowerSeries random_small_series(std::mt19937_64& rng,
                                             Convention convention,
                                             int max_truncation = 12) {
  const int count = uniform_int(rng, 1, max_truncation - 1);
  std::vector<double> coeffs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double n = static_cast<double>(i + 2);
    coeffs[static_cast<std::size_t>(i)] =
        uniform(rng, 0.0, 0.5) / (n * n);
  }
  return SignedPowerSeries(convention, std::move(coeffs));
}

inline Complex random_disk_point(std::mt19937_64& rng, double r_max = 0.9) {
  const double r = uniform(rng, 0.0, r_max);
  const double theta = uniform(rng, 0.0, 2.0 * M_PI);
  return std::polar(r, theta);
}

}  // namespace scc::test
