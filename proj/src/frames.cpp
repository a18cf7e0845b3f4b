#include "sigsurf/frames.hpp"

#include <cmath>
#include <stdexcept>

#include "sigsurf/errors.hpp"
#include "sigsurf/sweep.hpp"

namespace sigsurf {

namespace {

constexpr double kRcondMin = 1e-10;

}  // namespace

double SqrtCoeff::value() const {
  if (sign == 0) return 0.0;
  return static_cast<double>(sign) * std::sqrt(to_double(mag2));
}

Complex SqrtPoly::eval(Complex x) const {
  Complex acc(0.0, 0.0);
  for (std::size_t p = coeffs.size(); p-- > 0;) {
    acc = acc * x + coeffs[p].value();
  }
  return acc;
}

Complex SqrtPoly::eval_derivative(Complex x) const {
  Complex acc(0.0, 0.0);
  for (std::size_t p = coeffs.size(); p-- > 1;) {
    acc = acc * x + static_cast<double>(p) * coeffs[p].value();
  }
  return acc;
}

const SqrtPoly& HoloFrame::entry(int row, int col) const {
  if (row < 0 || row >= n || col < 0 || col >= m) {
    throw std::out_of_range("HoloFrame::entry: index outside frame");
  }
  return entries[static_cast<std::size_t>(row * m + col)];
}

Eigen::MatrixXcd HoloFrame::eval(Complex x) const {
  Eigen::MatrixXcd z(n, m);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < m; ++col) {
      z(row, col) = entry(row, col).eval(x);
    }
  }
  return z;
}

Eigen::MatrixXcd HoloFrame::eval_derivative(Complex x) const {
  Eigen::MatrixXcd z(n, m);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < m; ++col) {
      z(row, col) = entry(row, col).eval_derivative(x);
    }
  }
  return z;
}

namespace {

// Entry helper: sqrt-coefficient with squared magnitude p/q and given sign.
SqrtCoeff sq(int sign, long p, long q = 1) {
  SqrtCoeff c;
  c.sign = sign;
  c.mag2 = Rational(p, q);
  c.mag2.canonicalize();
  return c;
}

SqrtPoly poly(std::vector<SqrtCoeff> coeffs) {
  SqrtPoly p;
  p.coeffs = std::move(coeffs);
  return p;
}

SqrtCoeff zero() { return SqrtCoeff{}; }
SqrtCoeff one() { return sq(1, 1); }

}  // namespace

HoloFrame frame_z1() {
  HoloFrame f;
  f.n = 5;
  f.m = 2;
  f.entries.assign(10, SqrtPoly{});
  // column 0: (1, 0, sqrt5 x, sqrt5 x^2, 0)
  f.entries[0 * 2 + 0] = poly({one()});
  f.entries[2 * 2 + 0] = poly({zero(), sq(1, 5)});
  f.entries[3 * 2 + 0] = poly({zero(), zero(), sq(1, 5)});
  // column 1: (0, 1, sqrt5 x^2, (7/sqrt5) x^3, (1/sqrt5) x^3)
  f.entries[1 * 2 + 1] = poly({one()});
  f.entries[2 * 2 + 1] = poly({zero(), zero(), sq(1, 5)});
  f.entries[3 * 2 + 1] = poly({zero(), zero(), zero(), sq(1, 49, 5)});
  f.entries[4 * 2 + 1] = poly({zero(), zero(), zero(), sq(1, 1, 5)});
  return f;
}

HoloFrame frame_z2() {
  HoloFrame f;
  f.n = 5;
  f.m = 2;
  f.entries.assign(10, SqrtPoly{});
  // column 0: (1, 0, x, (1/sqrt5) x^2, 0)
  f.entries[0 * 2 + 0] = poly({one()});
  f.entries[2 * 2 + 0] = poly({zero(), one()});
  f.entries[3 * 2 + 0] = poly({zero(), zero(), sq(1, 1, 5)});
  // column 1: (0, 1, 2x, (7/sqrt5) x^2, sqrt5 x^3)
  f.entries[1 * 2 + 1] = poly({one()});
  f.entries[2 * 2 + 1] = poly({zero(), sq(1, 4)});
  f.entries[3 * 2 + 1] = poly({zero(), zero(), sq(1, 49, 5)});
  f.entries[4 * 2 + 1] = poly({zero(), zero(), zero(), sq(1, 5)});
  return f;
}

namespace {

Eigen::HouseholderQR<Eigen::MatrixXcd> checked_frame_qr(const HoloFrame& frame, Complex x) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(frame.eval(x));
  const Eigen::VectorXcd diag = qr.matrixQR().diagonal().head(frame.m);
  double dmin = std::abs(diag[0]);
  double dmax = dmin;
  for (int j = 1; j < frame.m; ++j) {
    dmin = std::min(dmin, std::abs(diag[j]));
    dmax = std::max(dmax, std::abs(diag[j]));
  }
  // rcond(Z^dagger Z) in the spectral sense is (sigma_min/sigma_max)^2;
  // the R diagonal bounds it well enough for rejection purposes.
  if (!(dmax > 0.0) || (dmin / dmax) * (dmin / dmax) < kRcondMin) {
    throw singular_point_error("frame gram matrix ill-conditioned at sample point");
  }
  return qr;
}

Eigen::MatrixXcd thin_q(const Eigen::HouseholderQR<Eigen::MatrixXcd>& qr, int n, int m) {
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, m);
}

}  // namespace

Eigen::MatrixXcd projector_from_frame(const HoloFrame& frame, Complex x) {
  const auto qr = checked_frame_qr(frame, x);
  const Eigen::MatrixXcd q = thin_q(qr, frame.n, frame.m);
  return q * q.adjoint();
}

FrameField::FrameField(HoloFrame frame) : frame_(std::move(frame)) {
  if (frame_.n < 2 || frame_.m < 1 || frame_.m >= frame_.n) {
    throw std::invalid_argument("FrameField: bad frame shape");
  }
}

Eigen::MatrixXcd FrameField::eval(Complex x) const { return projector_from_frame(frame_, x); }

double FrameField::metric_density(Complex x, const DiffParams&) const {
  const auto qr = checked_frame_qr(frame_, x);
  const Eigen::MatrixXcd q = thin_q(qr, frame_.n, frame_.m);
  // With Z = QR the derivative becomes (I - QQ^dagger) Z' R^{-1} Q^dagger,
  // and the right factor Q^dagger drops out of the Frobenius norm.
  const Eigen::MatrixXcd r_adj = qr.matrixQR().topRows(frame_.m).adjoint();
  const Eigen::MatrixXcd m_adj = r_adj.triangularView<Eigen::Lower>().solve(
      Eigen::MatrixXcd(frame_.eval_derivative(x).adjoint()));
  const Eigen::MatrixXcd m = m_adj.adjoint();
  const Eigen::MatrixXcd rej = m - q * (q.adjoint() * m);
  return 0.5 * rej.squaredNorm();
}

RatioPolynomial g25_ratio_polynomial() {
  RatioPolynomial ratio;
  ratio.p2 = {Integer(25), Integer(110), Integer(285), Integer(428),
              Integer(355), Integer(150), Integer(25)};
  ratio.p1.assign(ratio.p2.rbegin(), ratio.p2.rend());
  return ratio;
}

namespace {

Rational eval_poly(const std::vector<Integer>& coeffs, const Rational& y) {
  Rational acc = 0;
  for (std::size_t p = coeffs.size(); p-- > 0;) {
    acc = acc * y + Rational(coeffs[p]);
  }
  return acc;
}

}  // namespace

Rational RatioPolynomial::eval_p1(const Rational& y) const { return eval_poly(p1, y); }

Rational RatioPolynomial::eval_p2(const Rational& y) const { return eval_poly(p2, y); }

double RatioPolynomial::ratio(double y) const {
  double acc1 = 0.0;
  double acc2 = 0.0;
  for (std::size_t p = p1.size(); p-- > 0;) acc1 = acc1 * y + p1[p].get_d();
  for (std::size_t p = p2.size(); p-- > 0;) acc2 = acc2 * y + p2[p].get_d();
  return acc1 / acc2;
}

G25Report verify_g25(int samples, double kappa_tol, double ratio_tol, const DiffParams& diff,
                     std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("verify_g25: need at least 2 samples");

  const FrameField field1(frame_z1());
  const FrameField field2(frame_z2());
  const RatioPolynomial ratio = g25_ratio_polynomial();

  SamplePlan plan;
  plan.seed = seed;
  plan.count = samples;
  const std::vector<Complex> points = sample_points(field1, plan);

  G25Report report;
  report.samples = samples;
  report.kappa_tol = kappa_tol;
  report.ratio_tol = ratio_tol;

  double h2_min_1 = 0.0, h2_max_1 = 0.0, h2_min_2 = 0.0, h2_max_2 = 0.0;
  bool first = true;
  for (const Complex x : points) {
    const double weight = 2.0 * std::pow(1.0 + std::norm(x), 2);

    for (const ProjectorField* field : {static_cast<const ProjectorField*>(&field1),
                                        static_cast<const ProjectorField*>(&field2)}) {
      const double g = lagrangian_density(*field, x, diff);
      const double q = topological_density(*field, x, diff);
      const double kappa = gaussian_curvature(*field, x, diff);
      report.max_kappa_resid = std::max(report.max_kappa_resid, std::abs(kappa - 0.8));
      report.max_density_resid = std::max(report.max_density_resid, std::abs(weight * g - 5.0) / 5.0);
      report.max_lq_gap = std::max(report.max_lq_gap, std::abs(q - g) / g);
    }

    const double h2_1 = mean_curvature_sq(field1, x, diff);
    const double h2_2 = mean_curvature_sq(field2, x, diff);
    const double exact_ratio = ratio.ratio(std::norm(x));
    report.max_ratio_resid = std::max(report.max_ratio_resid, std::abs(h2_1 / h2_2 - exact_ratio));

    if (first) {
      h2_min_1 = h2_max_1 = h2_1;
      h2_min_2 = h2_max_2 = h2_2;
      first = false;
    } else {
      h2_min_1 = std::min(h2_min_1, h2_1);
      h2_max_1 = std::max(h2_max_1, h2_1);
      h2_min_2 = std::min(h2_min_2, h2_2);
      h2_max_2 = std::max(h2_max_2, h2_2);
    }
  }

  report.h2_spread_1 = h2_max_1 - h2_min_1;
  report.h2_spread_2 = h2_max_2 - h2_min_2;
  report.pass = report.max_kappa_resid <= kappa_tol && report.max_ratio_resid <= ratio_tol &&
                report.h2_spread_1 > 10.0 * ratio_tol && report.h2_spread_2 > 10.0 * ratio_tol;
  return report;
}

}  // namespace sigsurf
