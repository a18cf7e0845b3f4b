#pragma once

#include <vector>

#include "sigsurf/beta.hpp"
#include "sigsurf/poly_curve.hpp"

namespace sigsurf {

struct DiffParams;  // numeric.hpp

// Successive squared norms t_j = |P_+^j f|^2 for j = 0..k, computed by
// column orthogonalization (Householder QR) of the derivative stack.  t_j
// is the squared magnitude of the j-th diagonal entry of R, which equals
// the ratio of consecutive Gram determinants G_{j+1}/G_j.  Points where a
// pivot falls below 1e-12 * ||stack||_F are rejected.
std::vector<double> gram_tower(const PolyCurve& curve, int k, Complex x);

// Pointwise hermitian projector field x -> P(x).
class ProjectorField {
 public:
  virtual ~ProjectorField() = default;
  virtual int dim() const = 0;   // ambient n
  virtual int rank() const = 0;  // Tr P
  virtual Eigen::MatrixXcd eval(Complex x) const = 0;

  // Metric density g_{+-}(x) = Tr(del_+ P del_- P)/2.  The base version
  // differences eval() with the given params; concrete fields override it
  // with exact evaluations, which keeps nested estimators such as
  // gaussian_curvature out of the finite-difference noise floor.
  virtual double metric_density(Complex x, const DiffParams& params) const;
};

// P_beta = sum_{beta_j = 1} P_j where P_j projects on the j-th member of
// the orthogonalized derivative tower of a holomorphic curve.
class VeroneseBetaField final : public ProjectorField {
 public:
  VeroneseBetaField(PolyCurve curve, BetaVector beta);

  int dim() const override { return curve_.n; }
  int rank() const override { return beta_.weight(); }
  Eigen::MatrixXcd eval(Complex x) const override;

  // Exact ratio-sum evaluation: each occupation step beta_{j-1} != beta_j
  // contributes t_j / (2 t_{j-1}); the params are not consulted.
  double metric_density(Complex x, const DiffParams& params) const override;

  const BetaVector& beta() const { return beta_; }
  const PolyCurve& curve() const { return curve_; }

 private:
  PolyCurve curve_;
  BetaVector beta_;
  int max_index_;
};

}  // namespace sigsurf
