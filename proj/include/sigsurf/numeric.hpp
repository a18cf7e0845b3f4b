#pragma once

#include <utility>

#include "sigsurf/projector_field.hpp"

namespace sigsurf {

// Finite-difference configuration.  All stencils are central; with
// richardson set, the O(h^2) estimate is refined to O(h^4) by combining
// steps h and h/2.
struct DiffParams {
  double h = 1e-3;
  bool richardson = false;
};

// Coordinates: x_+ = x + iy, so del_pm = (d_x -+ i d_y)/2 and
// del_+ del_- = (d_xx + d_yy)/4.
struct FirstDerivatives {
  Eigen::MatrixXcd dplus;   // del_+ P
  Eigen::MatrixXcd dminus;  // del_- P = (del_+ P)^dagger
};

FirstDerivatives projector_first_derivatives(const ProjectorField& field, Complex x,
                                             const DiffParams& params);

// Entrywise del_+ del_- P from the five-point Laplacian.
Eigen::MatrixXcd projector_mixed_second(const ProjectorField& field, Complex x,
                                        const DiffParams& params);

// su(n) inner product <A, B> = Tr(A B)/2; norm uses <A, A^dagger>.
Complex su_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
double su_norm(const Eigen::MatrixXcd& a);

// g_{+-} = Tr(del_+ P del_- P)/2, also the Lagrangian density.
double lagrangian_density(const ProjectorField& field, Complex x, const DiffParams& params);

// Q = Tr(P [del_- P, del_+ P])/2.
double topological_density(const ProjectorField& field, Complex x, const DiffParams& params);

// K = -(1/g_{+-}) del_+ del_- ln g_{+-}.
double gaussian_curvature(const ProjectorField& field, Complex x, const DiffParams& params);

// H^2 = ||[del_+ P, del_- P]||^2 / g_{+-}^2 (the commutator is symmetrized
// before taking the norm).
double mean_curvature_sq(const ProjectorField& field, Complex x, const DiffParams& params);

// ||[del_+ del_- P, P]||; vanishes on harmonic projector fields.
double el_residual(const ProjectorField& field, Complex x, const DiffParams& params);

// (|g_{++}|, |g_{--}|) with g_{++} = -<del_+ P, del_+ P>; both vanish for
// conformally parametrized surfaces.
std::pair<double, double> conformality(const ProjectorField& field, Complex x,
                                       const DiffParams& params);

// Tangent vectors del_+ X = [del_+ P, P], del_- X = -[del_- P, P] and the
// unit normal direction along [del_+ X, del_- X].
struct SurfaceFrame {
  Eigen::MatrixXcd tangent_plus;
  Eigen::MatrixXcd tangent_minus;
  Eigen::MatrixXcd normal;
};

SurfaceFrame surface_tangent_normal(const ProjectorField& field, Complex x,
                                    const DiffParams& params);

}  // namespace sigsurf
