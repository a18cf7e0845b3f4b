#include "sigsurf/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "sigsurf/errors.hpp"

namespace sigsurf {

namespace {

void require_step(const DiffParams& params) {
  if (!(params.h > 0.0) || !std::isfinite(params.h)) {
    throw step_size_error("finite differences need a positive finite step");
  }
}

void require_finite(const Eigen::MatrixXcd& m) {
  if (!m.allFinite()) throw step_size_error("finite differences produced non-finite entries");
}

Eigen::MatrixXcd half_sym(const Eigen::MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

FirstDerivatives first_derivs_plain(const ProjectorField& field, Complex x, double h) {
  const Complex du(h, 0.0);
  const Complex dv(0.0, h);
  const Eigen::MatrixXcd dx = (field.eval(x + du) - field.eval(x - du)) / (2.0 * h);
  const Eigen::MatrixXcd dy = (field.eval(x + dv) - field.eval(x - dv)) / (2.0 * h);
  FirstDerivatives out;
  out.dplus = 0.5 * (dx - Complex(0.0, 1.0) * dy);
  out.dminus = 0.5 * (dx + Complex(0.0, 1.0) * dy);
  return out;
}

Eigen::MatrixXcd laplacian_plain(const ProjectorField& field, Complex x, double h) {
  const Complex du(h, 0.0);
  const Complex dv(0.0, h);
  return (field.eval(x + du) + field.eval(x - du) + field.eval(x + dv) + field.eval(x - dv) -
          4.0 * field.eval(x)) /
         (h * h);
}

double lagrangian_from(const FirstDerivatives& d) {
  return 0.5 * (d.dplus * d.dminus).trace().real();
}

}  // namespace

FirstDerivatives projector_first_derivatives(const ProjectorField& field, Complex x,
                                             const DiffParams& params) {
  require_step(params);
  FirstDerivatives d = first_derivs_plain(field, x, params.h);
  if (params.richardson) {
    const FirstDerivatives fine = first_derivs_plain(field, x, params.h / 2.0);
    d.dplus = (4.0 * fine.dplus - d.dplus) / 3.0;
    d.dminus = (4.0 * fine.dminus - d.dminus) / 3.0;
  }
  require_finite(d.dplus);
  require_finite(d.dminus);
  return d;
}

Eigen::MatrixXcd projector_mixed_second(const ProjectorField& field, Complex x,
                                        const DiffParams& params) {
  require_step(params);
  Eigen::MatrixXcd lap = laplacian_plain(field, x, params.h);
  if (params.richardson) {
    lap = (4.0 * laplacian_plain(field, x, params.h / 2.0) - lap) / 3.0;
  }
  require_finite(lap);
  return 0.25 * lap;
}

Complex su_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return 0.5 * (a * b).trace();
}

double su_norm(const Eigen::MatrixXcd& a) {
  return std::sqrt(std::abs(0.5 * (a * a.adjoint()).trace().real()));
}

double lagrangian_density(const ProjectorField& field, Complex x, const DiffParams& params) {
  return lagrangian_from(projector_first_derivatives(field, x, params));
}

double topological_density(const ProjectorField& field, Complex x, const DiffParams& params) {
  const FirstDerivatives d = projector_first_derivatives(field, x, params);
  const Eigen::MatrixXcd p = field.eval(x);
  const Eigen::MatrixXcd comm = d.dminus * d.dplus - d.dplus * d.dminus;
  return 0.5 * (p * comm).trace().real();
}

namespace {

double gaussian_plain(const ProjectorField& field, Complex x, double h) {
  // Dividing by h^2 amplifies any error in the metric evaluations, so the
  // stencil leans on metric_density: exact for the concrete fields, falling
  // back to differenced eval() (and correspondingly less accurate) for
  // generic ones.
  const DiffParams inner{h, false};
  const auto log_g = [&](Complex y) {
    const double g = field.metric_density(y, inner);
    if (!(g > 0.0)) throw degenerate_metric_error("g_{+-} not positive at sample point");
    return std::log(g);
  };
  const Complex du(h, 0.0);
  const Complex dv(0.0, h);
  const double lap =
      (log_g(x + du) + log_g(x - du) + log_g(x + dv) + log_g(x - dv) - 4.0 * log_g(x)) / (h * h);
  const double g0 = field.metric_density(x, inner);
  if (!(g0 > 0.0)) throw degenerate_metric_error("g_{+-} not positive at sample point");
  return -(0.25 * lap) / g0;
}

}  // namespace

double gaussian_curvature(const ProjectorField& field, Complex x, const DiffParams& params) {
  require_step(params);
  double k = gaussian_plain(field, x, params.h);
  if (params.richardson) {
    // Pair with the doubled step rather than the halved one: the O(h^2) term
    // cancels either way, but h stays the finest evaluation, which matters
    // for fields whose metric falls back to finite differences.
    k = (4.0 * k - gaussian_plain(field, x, 2.0 * params.h)) / 3.0;
  }
  if (!std::isfinite(k)) throw step_size_error("gaussian curvature estimate is non-finite");
  return k;
}

double mean_curvature_sq(const ProjectorField& field, Complex x, const DiffParams& params) {
  const FirstDerivatives d = projector_first_derivatives(field, x, params);
  const double g = lagrangian_from(d);
  if (!(g > 0.0)) throw degenerate_metric_error("g_{+-} not positive at sample point");
  const Eigen::MatrixXcd comm = half_sym(d.dplus * d.dminus - d.dminus * d.dplus);
  const double norm = su_norm(comm);
  return norm * norm / (g * g);
}

double el_residual(const ProjectorField& field, Complex x, const DiffParams& params) {
  const Eigen::MatrixXcd mixed = projector_mixed_second(field, x, params);
  const Eigen::MatrixXcd p = field.eval(x);
  return su_norm(mixed * p - p * mixed);
}

std::pair<double, double> conformality(const ProjectorField& field, Complex x,
                                       const DiffParams& params) {
  const FirstDerivatives d = projector_first_derivatives(field, x, params);
  const Complex gpp = -su_inner(d.dplus, d.dplus);
  const Complex gmm = -su_inner(d.dminus, d.dminus);
  return {std::abs(gpp), std::abs(gmm)};
}

SurfaceFrame surface_tangent_normal(const ProjectorField& field, Complex x,
                                    const DiffParams& params) {
  const FirstDerivatives d = projector_first_derivatives(field, x, params);
  const Eigen::MatrixXcd p = field.eval(x);
  SurfaceFrame frame;
  frame.tangent_plus = d.dplus * p - p * d.dplus;
  frame.tangent_minus = -(d.dminus * p - p * d.dminus);
  Eigen::MatrixXcd second =
      half_sym(frame.tangent_plus * frame.tangent_minus - frame.tangent_minus * frame.tangent_plus);
  const double norm = su_norm(second);
  if (!(norm > 0.0)) throw degenerate_metric_error("normal direction degenerate at sample point");
  frame.normal = second / norm;
  return frame;
}

}  // namespace sigsurf
