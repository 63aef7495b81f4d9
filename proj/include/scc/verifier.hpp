#pragma once

#include <stdexcept>

#include "scc/core.hpp"

// Independent numerical check of the defining inequality. The class is the
// set of series for which
//
//   Re(phi(z)) > alpha  on |z| < 1,  with
//
//             z f'(z) + gamma z^2 f''(z)
//   phi(z) = --------------------------------------------------------------
//            gamma z (f'(z) + beta z f''(z))
//              + (1-gamma) (beta z f'(z) + (1-beta) f(z))
//
// Sampling can falsify a membership claim but never prove one; the criterion
// side is authoritative for ClassT and for positive ClassA verdicts.

namespace scc {

// Series value together with first and second derivative at one point.
struct SeriesJet {
  Complex f;
  Complex f1;
  Complex f2;
};

// One evaluated grid point.
struct PhiSample {
  Complex z;
  Complex phi;
  double re_phi;
};

// Denominator of phi collapsed (modulus < 1e-14) at the carried point.
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(Complex z);
  Complex where() const { return z_; }

 private:
  Complex z_;
};

// f, f', f'' by Horner evaluation of the truncated series, accumulated from
// the highest degree down. Requires |z| < 1.
SeriesJet eval_series(const SignedPowerSeries& series, Complex z);

// The ratio phi(z); phi(0) = 1 by the removable-singularity limit.
Complex phi_ratio(const SignedPowerSeries& series, const ClassParams& params,
                  Complex z);

PhiSample sample_phi(const SignedPowerSeries& series, const ClassParams& params,
                     Complex z);

struct MinRePhi {
  double min;
  Complex argmin;
};

// Minimum of Re(phi) over the grid. Iteration order is fixed (radii
// ascending, angles ascending); the first point attaining the minimum wins.
MinRePhi min_re_phi(const SignedPowerSeries& series, const ClassParams& params,
                    const DiskGrid& grid);

// Runs the coefficient criterion and the grid minimum together.
// passed_numeric = min Re(phi) > alpha - 1e-9. A satisfied criterion with a
// failed numeric check is impossible for a correct evaluator and raises
// std::logic_error.
VerificationReport cross_validate(const SignedPowerSeries& series,
                                  const ClassParams& params,
                                  const DiskGrid& grid);

}  // namespace scc
