#include "scc/core.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace scc {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

}  // namespace

const char* to_string(Convention c) {
  return c == Convention::ClassA ? "A" : "T";
}

ClassParams::ClassParams(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  if (alpha < 0.0 || alpha >= 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1), got " +
                                std::to_string(alpha));
  }
  if (beta < 0.0 || beta >= 1.0) {
    throw std::invalid_argument("beta must lie in [0, 1), got " +
                                std::to_string(beta));
  }
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("gamma must lie in [0, 1], got " +
                                std::to_string(gamma));
  }
}

SignedPowerSeries::SignedPowerSeries(Convention convention,
                                     std::vector<double> coefficients)
    : convention_(convention), coefficients_(std::move(coefficients)) {
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const double a = coefficients_[i];
    if (!std::isfinite(a) || a < 0.0) {
      throw std::invalid_argument(
          "coefficient a_" + std::to_string(i + 2) +
          " must be a nonnegative magnitude, got " + std::to_string(a));
    }
  }
}

SignedPowerSeries SignedPowerSeries::identity(Convention convention) {
  return SignedPowerSeries(convention, {});
}

double SignedPowerSeries::coefficient(int n) const {
  if (n < 2 || n > truncation()) {
    throw std::out_of_range("coefficient index n=" + std::to_string(n) +
                            " outside [2, " + std::to_string(truncation()) +
                            "]");
  }
  return coefficients_[static_cast<std::size_t>(n - 2)];
}

WrightParams::WrightParams(double lambda, double mu)
    : lambda_(lambda), mu_(mu) {
  require_finite(lambda, "lambda");
  require_finite(mu, "mu");
  if (lambda <= -1.0) {
    throw std::invalid_argument("lambda must be > -1, got " +
                                std::to_string(lambda));
  }
  if (mu <= 0.0) {
    throw std::invalid_argument("mu must be > 0, got " + std::to_string(mu));
  }
}

void require_closed_form_hypothesis(const WrightParams& params) {
  if (!params.meets_closed_form_hypothesis()) {
    throw std::domain_error(
        "closed-form conditions require lambda >= 1 and mu > 0.462, got "
        "lambda=" +
        std::to_string(params.lambda()) + ", mu=" +
        std::to_string(params.mu()));
  }
}

DiskGrid::DiskGrid(std::vector<double> radii, int angles_per_radius)
    : radii_(std::move(radii)), angles_per_radius_(angles_per_radius) {
  if (radii_.empty()) {
    throw std::invalid_argument("grid needs at least one radius");
  }
  double prev = 0.0;
  for (double r : radii_) {
    if (!std::isfinite(r) || r <= 0.0 || r >= 1.0) {
      throw std::invalid_argument("radius " + std::to_string(r) +
                                  " outside (0, 1)");
    }
    if (r <= prev) {
      throw std::invalid_argument("radii must be strictly increasing");
    }
    prev = r;
  }
  if (angles_per_radius_ < 8) {
    throw std::invalid_argument("angles_per_radius must be >= 8, got " +
                                std::to_string(angles_per_radius_));
  }
}

DiskGrid DiskGrid::geometric(std::size_t radius_count, double r_max,
                             int angles_per_radius, double r_min) {
  if (radius_count == 0) {
    throw std::invalid_argument("radius_count must be positive");
  }
  if (!(r_min > 0.0) || !(r_min < 1.0) || !(r_max > 0.0) || !(r_max < 1.0) ||
      r_min > r_max) {
    throw std::invalid_argument("need 0 < r_min <= r_max < 1");
  }
  std::vector<double> radii;
  radii.reserve(radius_count);
  if (radius_count == 1) {
    radii.push_back(r_max);
    return DiskGrid(std::move(radii), angles_per_radius);
  }
  const double d0 = 1.0 - r_min;
  const double d1 = 1.0 - r_max;
  const double ratio = std::log(d1 / d0);
  for (std::size_t k = 0; k < radius_count; ++k) {
    const double t = static_cast<double>(k) /
                     static_cast<double>(radius_count - 1);
    radii.push_back(1.0 - d0 * std::exp(ratio * t));
  }
  radii.front() = r_min;
  radii.back() = r_max;
  return DiskGrid(std::move(radii), angles_per_radius);
}

DiskGrid DiskGrid::standard() { return geometric(64, 0.999, 256); }

}  // namespace scc
