#include <doctest.h>

#include <cmath>
#include <sigsurf/errors.hpp>
#include <sigsurf/frames.hpp>
#include <sigsurf/rational.hpp>
#include <vector>

using namespace sigsurf;

namespace {

Rational rat(long num, long den = 1) {
  Rational v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace

TEST_CASE("frame coefficient fixtures") {
  const HoloFrame z1 = frame_z1();
  CHECK(z1.n == 5);
  CHECK(z1.m == 2);
  CHECK(z1.entry(0, 0).coeffs.at(0).sign == 1);
  CHECK(z1.entry(0, 0).coeffs.at(0).mag2 == 1);
  CHECK(z1.entry(1, 0).coeffs.empty());
  CHECK(z1.entry(2, 0).coeffs.at(1).mag2 == 5);
  CHECK(z1.entry(3, 0).coeffs.at(2).mag2 == 5);
  CHECK(z1.entry(2, 1).coeffs.at(2).mag2 == 5);
  CHECK(z1.entry(3, 1).coeffs.at(3).mag2 == rat(49, 5));
  CHECK(z1.entry(4, 1).coeffs.at(3).mag2 == rat(1, 5));

  const HoloFrame z2 = frame_z2();
  CHECK(z2.entry(2, 0).coeffs.at(1).mag2 == 1);
  CHECK(z2.entry(3, 0).coeffs.at(2).mag2 == rat(1, 5));
  CHECK(z2.entry(2, 1).coeffs.at(1).mag2 == 4);
  CHECK(z2.entry(3, 1).coeffs.at(2).mag2 == rat(49, 5));
  CHECK(z2.entry(4, 1).coeffs.at(3).mag2 == 5);

  CHECK_THROWS_AS(z1.entry(5, 0), std::out_of_range);
  CHECK_THROWS_AS(z1.entry(0, 2), std::out_of_range);

  const double r5 = std::sqrt(5.0);
  const Eigen::MatrixXcd at_one = z1.eval(Complex(1.0, 0.0));
  CHECK(at_one(2, 0).real() == doctest::Approx(r5));
  CHECK(at_one(3, 1).real() == doctest::Approx(7.0 / r5));
  CHECK(at_one(4, 1).real() == doctest::Approx(1.0 / r5));
  CHECK(at_one(4, 0).real() == doctest::Approx(0.0));
}

TEST_CASE("frame projectors are rank-2 hermitian idempotents") {
  for (const HoloFrame& frame : {frame_z1(), frame_z2()}) {
    const FrameField field(frame);
    CHECK(field.dim() == 5);
    CHECK(field.rank() == 2);
    for (Complex x : {Complex(0.0, 0.0), Complex(0.8, -0.6), Complex(-1.7, 1.1)}) {
      const Eigen::MatrixXcd p = field.eval(x);
      CHECK((p - p.adjoint()).norm() <= 1e-10);
      CHECK((p * p - p).norm() <= 1e-10);
      CHECK(std::abs(p.trace().real() - 2.0) <= 1e-10);
    }
  }
}

TEST_CASE("frame derivatives and the exact metric hook") {
  const HoloFrame z2 = frame_z2();
  // Entry (2, 1) is 2x, so its derivative is the constant 2.
  const Complex d21 = z2.entry(2, 1).eval_derivative(Complex(0.7, 0.2));
  CHECK(d21.real() == doctest::Approx(2.0));
  CHECK(d21.imag() == doctest::Approx(0.0));
  CHECK(z2.entry(1, 1).eval_derivative(Complex(0.3, -0.4)) == Complex(0.0, 0.0));

  const DiffParams diff{1e-3, true};
  for (const HoloFrame& frame : {frame_z1(), frame_z2()}) {
    for (Complex x : {Complex(0.45, 0.2), Complex(-0.7, 0.9)}) {
      // Entrywise d/dx against central differences along both real axes;
      // holomorphy makes the two directions agree.
      const double h = 1e-5;
      const Eigen::MatrixXcd deriv = frame.eval_derivative(x);
      const Eigen::MatrixXcd fd_re =
          (frame.eval(x + Complex(h, 0.0)) - frame.eval(x - Complex(h, 0.0))) / (2.0 * h);
      const Eigen::MatrixXcd fd_im =
          (frame.eval(x + Complex(0.0, h)) - frame.eval(x - Complex(0.0, h))) / Complex(0.0, 2.0 * h);
      CHECK((deriv - fd_re).norm() <= 1e-8);
      CHECK((deriv - fd_im).norm() <= 1e-8);

      const FrameField field(frame);
      const double exact = field.metric_density(x, diff);
      const double fd = lagrangian_density(field, x, diff);
      CHECK(std::abs(exact - fd) <= 1e-8 * std::max(1.0, fd));
    }
  }
}

TEST_CASE("shared curvature and density of the two frames") {
  const DiffParams diff{1e-3, true};
  for (const HoloFrame& frame : {frame_z1(), frame_z2()}) {
    const FrameField field(frame);
    for (Complex x : {Complex(0.45, 0.2), Complex(-0.7, 0.9)}) {
      const double w = 2.0 * std::pow(1.0 + std::norm(x), 2);
      const double g = lagrangian_density(field, x, diff);
      CHECK(std::abs(w * g - 5.0) <= 1e-5 * 5.0);
      // Holomorphic: the topological density equals the Lagrangian one.
      CHECK(std::abs(topological_density(field, x, diff) - g) <= 1e-6 * g);
      CHECK(std::abs(gaussian_curvature(field, x, diff) - 0.8) <= 1e-5);
      CHECK(el_residual(field, x, diff) <= 1e-6);
    }
  }
}

TEST_CASE("mean curvature ratio polynomial") {
  const RatioPolynomial ratio = g25_ratio_polynomial();
  REQUIRE(ratio.p1.size() == 7);
  REQUIRE(ratio.p2.size() == 7);
  for (std::size_t t = 0; t < 7; ++t) CHECK(ratio.p1[t] == ratio.p2[6 - t]);

  CHECK(ratio.eval_p1(1) == 1378);
  CHECK(ratio.eval_p2(1) == 1378);
  CHECK(ratio.eval_p2(0) == 25);
  CHECK(ratio.eval_p1(rat(1, 4)) == rat(379297, 4096));
  CHECK(ratio.eval_p2(rat(1, 4)) == rat(321697, 4096));
  CHECK(ratio.ratio(0.25) == doctest::Approx(379297.0 / 321697.0).epsilon(1e-12));
  CHECK(ratio.ratio(1.0) == doctest::Approx(1.0).epsilon(1e-12));

  // y^6 P2(1/y) = P1(y).
  for (const Rational& y : {rat(1, 3), rat(2), rat(7, 5)}) {
    Rational pow6 = y * y * y * y * y * y;
    CHECK(pow6 * ratio.eval_p2(1 / y) == ratio.eval_p1(y));
  }
}

TEST_CASE("numeric curvature ratio follows the polynomial") {
  const DiffParams diff{1e-3, true};
  const FrameField f1(frame_z1());
  const FrameField f2(frame_z2());
  const RatioPolynomial ratio = g25_ratio_polynomial();
  for (Complex x : {Complex(0.5, 0.0), Complex(0.3, -0.4), Complex(0.0, 1.2)}) {
    const double h2_1 = mean_curvature_sq(f1, x, diff);
    const double h2_2 = mean_curvature_sq(f2, x, diff);
    CHECK(std::abs(h2_1 / h2_2 - ratio.ratio(std::norm(x))) <= 1e-6);
  }
  // The surfaces are distinct: away from |x| = 1 the ratio leaves 1.
  const double away = mean_curvature_sq(f1, Complex(0.5, 0.0), diff) /
                      mean_curvature_sq(f2, Complex(0.5, 0.0), diff);
  CHECK(std::abs(away - 1.0) > 0.05);
}

TEST_CASE("mean curvature is not constant along either frame") {
  const DiffParams diff{1e-3, true};
  for (const HoloFrame& frame : {frame_z1(), frame_z2()}) {
    const FrameField field(frame);
    const double near = mean_curvature_sq(field, Complex(0.35, 0.0), diff);
    const double far = mean_curvature_sq(field, Complex(1.6, 0.0), diff);
    CHECK(std::abs(near - far) > 1e-3);
  }
}

TEST_CASE("full verification report") {
  const G25Report report = verify_g25(8, 1e-4, 1e-6, DiffParams{1e-3, true}, 421);
  CHECK(report.samples == 8);
  CHECK(report.pass);
  CHECK(report.max_kappa_resid <= 1e-4);
  CHECK(report.max_density_resid <= 1e-4);
  CHECK(report.max_lq_gap <= 1e-4);
  CHECK(report.max_ratio_resid <= 1e-6);
  CHECK(report.h2_spread_1 > 1e-5);
  CHECK(report.h2_spread_2 > 1e-5);
  CHECK_THROWS_AS(verify_g25(1, 1e-4, 1e-6, DiffParams{}, 1), std::invalid_argument);
}

TEST_CASE("degenerate frames are rejected") {
  HoloFrame bad;
  bad.n = 3;
  bad.m = 2;
  bad.entries.assign(6, SqrtPoly{});
  // Two identical columns: the gram matrix is singular everywhere.
  bad.entries[0 * 2 + 0] = SqrtPoly{{SqrtCoeff{1, 1}}};
  bad.entries[1 * 2 + 0] = SqrtPoly{{SqrtCoeff{0, 0}, SqrtCoeff{1, 1}}};
  bad.entries[0 * 2 + 1] = SqrtPoly{{SqrtCoeff{1, 1}}};
  bad.entries[1 * 2 + 1] = SqrtPoly{{SqrtCoeff{0, 0}, SqrtCoeff{1, 1}}};
  CHECK_THROWS_AS(projector_from_frame(bad, Complex(0.4, 0.1)), singular_point_error);

  HoloFrame shape = frame_z1();
  shape.m = 5;
  CHECK_THROWS_AS(FrameField{shape}, std::invalid_argument);
}
