#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

// Domain types shared by the whole library. All of them are immutable value
// objects once constructed and therefore safe to share between threads.

namespace scc {

using Complex = std::complex<double>;

// Sign convention of a normalized power series z +/- sum a_n z^n.
// ClassA: f(z) = z + sum_{n>=2} a_n z^n  (a_n stored as magnitudes)
// ClassT: f(z) = z - sum_{n>=2} a_n z^n  (a_n >= 0)
enum class Convention { ClassA, ClassT };

const char* to_string(Convention c);

// Closed-form conditions on Wright-type series require mu above this
// constant; bare series construction only needs mu > 0.
inline constexpr double kClosedFormMuLowerBound = 0.462;

// The (alpha, beta, gamma) triple parameterizing the unified
// starlike-convex class. alpha, beta in [0,1), gamma in [0,1].
// Out-of-range values are rejected at construction, never clamped.
class ClassParams {
 public:
  ClassParams(double alpha, double beta, double gamma);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  // Right-hand side of every coefficient criterion.
  double budget() const { return 1.0 - alpha_; }

 private:
  double alpha_;
  double beta_;
  double gamma_;
};

// Truncated normalized power series z +/- sum_{n=2}^{N} a_n z^n.
// Stores the coefficient magnitudes a_2..a_N; the sign is carried by the
// convention. The leading z coefficient is implicitly 1.
class SignedPowerSeries {
 public:
  // coefficients[i] is the magnitude of a_{i+2}. Negative or non-finite
  // entries are rejected (coefficients are magnitudes by construction).
  SignedPowerSeries(Convention convention, std::vector<double> coefficients);

  // The bare series f(z) = z.
  static SignedPowerSeries identity(Convention convention);

  Convention convention() const { return convention_; }
  const std::vector<double>& coefficients() const { return coefficients_; }

  // Truncation order N = 1 + number of stored coefficients.
  int truncation() const { return 1 + static_cast<int>(coefficients_.size()); }

  // Magnitude of a_n for n in [2, truncation()].
  double coefficient(int n) const;

  // +1 for ClassA, -1 for ClassT.
  double sign() const { return convention_ == Convention::ClassA ? 1.0 : -1.0; }

 private:
  Convention convention_;
  std::vector<double> coefficients_;
};

// The (lambda, mu) pair of a Wright-type series. Construction accepts
// lambda > -1, mu > 0; the closed-form conditions additionally require
// lambda >= 1 and mu > 0.462 (see meets_closed_form_hypothesis).
class WrightParams {
 public:
  WrightParams(double lambda, double mu);

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }

  bool meets_closed_form_hypothesis() const {
    return lambda_ >= 1.0 && mu_ > kClosedFormMuLowerBound;
  }

 private:
  double lambda_;
  double mu_;
};

// Throws std::domain_error unless lambda >= 1 and mu > 0.462.
void require_closed_form_hypothesis(const WrightParams& params);

// Polar sampling of the open unit disk: a strictly increasing list of radii
// in (0,1), each sampled at angles_per_radius uniform angles over [0, 2*pi).
class DiskGrid {
 public:
  DiskGrid(std::vector<double> radii, int angles_per_radius);

  // radius_count radii with 1-r log-spaced from 1-r_min down to 1-r_max,
  // concentrating samples toward the boundary where the extrema live.
  static DiskGrid geometric(std::size_t radius_count, double r_max,
                            int angles_per_radius, double r_min = 0.05);

  // 64 radii up to 0.999, 256 angles.
  static DiskGrid standard();

  const std::vector<double>& radii() const { return radii_; }
  int angles_per_radius() const { return angles_per_radius_; }
  std::size_t sample_count() const {
    return radii_.size() * static_cast<std::size_t>(angles_per_radius_);
  }

 private:
  std::vector<double> radii_;
  int angles_per_radius_;
};

// Outcome of cross-validating a coefficient-criterion verdict against the
// sampled defining inequality Re(phi) > alpha.
struct VerificationReport {
  double criterion_value = 0.0;
  double criterion_budget = 0.0;  // 1 - alpha
  double margin = 0.0;            // budget - value
  double min_re_phi = 0.0;
  Complex argmin_z{0.0, 0.0};
  bool passed_criterion = false;
  bool passed_numeric = false;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

}  // namespace scc
