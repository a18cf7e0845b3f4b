#pragma once

#include <cstdint>
#include <vector>

#include "sigsurf/numeric.hpp"
#include "sigsurf/projector_field.hpp"
#include "sigsurf/rational.hpp"

namespace sigsurf {

// Polynomial coefficient sign * sqrt(mag2).  The squared magnitude is kept
// exact because cross terms in Z^dagger Z pair the surds back to rationals;
// numeric evaluation takes the square root once.
struct SqrtCoeff {
  int sign = 0;       // -1, 0, +1
  Rational mag2 = 0;  // squared magnitude

  double value() const;
};

struct SqrtPoly {
  std::vector<SqrtCoeff> coeffs;  // by ascending power
  Complex eval(Complex x) const;
  Complex eval_derivative(Complex x) const;
};

// Holomorphic n x m frame Z(x) with entries of SqrtPoly form.
struct HoloFrame {
  int n = 0;
  int m = 0;
  std::vector<SqrtPoly> entries;  // row-major

  const SqrtPoly& entry(int row, int col) const;
  Eigen::MatrixXcd eval(Complex x) const;
  Eigen::MatrixXcd eval_derivative(Complex x) const;  // entrywise d/dx
};

// The two rank-2 holomorphic frames in C^5 whose surfaces share K = 4/5
// and r = 5 but carry different non-constant mean curvature.
HoloFrame frame_z1();
HoloFrame frame_z2();

// P = Z (Z^dagger Z)^{-1} Z^dagger computed from a thin QR of Z (no
// explicit inverse).  Rejects points where rcond(Z^dagger Z) < 1e-10.
Eigen::MatrixXcd projector_from_frame(const HoloFrame& frame, Complex x);

class FrameField final : public ProjectorField {
 public:
  explicit FrameField(HoloFrame frame);
  int dim() const override { return frame_.n; }
  int rank() const override { return frame_.m; }
  Eigen::MatrixXcd eval(Complex x) const override;

  // Exact evaluation through del_+ P = (I - P) Z' (Z^dagger Z)^{-1} Z^dagger,
  // valid because Z is holomorphic; the params are not consulted.
  double metric_density(Complex x, const DiffParams& params) const override;

  const HoloFrame& frame() const { return frame_; }

 private:
  HoloFrame frame_;
};

// Degree-6 palindromic pair with (H_1/H_2)^2 = P1(|x|^2)/P2(|x|^2)
// and P1(y) = y^6 P2(1/y): P1's coefficient list is P2's reversed.
struct RatioPolynomial {
  std::vector<Integer> p2;  // ascending; fixed reference data
  std::vector<Integer> p1;  // reversed copy

  Rational eval_p1(const Rational& y) const;
  Rational eval_p2(const Rational& y) const;
  double ratio(double y) const;  // P1(y)/P2(y)
};

RatioPolynomial g25_ratio_polynomial();

struct G25Report {
  int samples = 0;
  double kappa_tol = 0.0;
  double ratio_tol = 0.0;
  double max_kappa_resid = 0.0;    // |K - 4/5| over both frames
  double max_density_resid = 0.0;  // |2(1+|x|^2)^2 g_{+-} - 5| / 5, both frames
  double max_lq_gap = 0.0;         // |Q - g_{+-}| / g_{+-}, both frames (holomorphic)
  double max_ratio_resid = 0.0;    // |H1^2/H2^2 - P1(y)/P2(y)|
  double h2_spread_1 = 0.0;        // max - min of H^2 over the samples, frame 1
  double h2_spread_2 = 0.0;
  bool pass = false;
};

// Dual-route verification at seeded sample points: curvature against the
// constant 4/5, and the finite-difference mean-curvature ratio against the
// exact polynomial ratio.  Non-constancy requires both H^2 spreads to
// exceed 10 * ratio_tol.
G25Report verify_g25(int samples, double kappa_tol, double ratio_tol, const DiffParams& diff,
                     std::uint64_t seed);

}  // namespace sigsurf
