#include "sigsurf/projector_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sigsurf/errors.hpp"
#include "sigsurf/numeric.hpp"

namespace sigsurf {

namespace {

constexpr double kPivotRel = 1e-12;

// Thin Q (first k+1 columns) and the diagonal of R.
struct ThinQR {
  Eigen::MatrixXcd q;
  Eigen::VectorXcd r_diag;
};

ThinQR stack_qr(const PolyCurve& curve, int k, Complex x) {
  if (k < 0 || k >= curve.n) {
    throw std::invalid_argument("gram_tower: need 0 <= k < n");
  }
  const Eigen::MatrixXcd stack = curve.derivative_stack(k, x);
  const double scale = stack.norm();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(stack);
  Eigen::VectorXcd diag = qr.matrixQR().diagonal().head(k + 1);
  for (int j = 0; j <= k; ++j) {
    if (std::abs(diag[j]) < kPivotRel * scale) {
      throw singular_point_error("derivative stack pivot " + std::to_string(j) +
                                 " below threshold at sample point");
    }
  }
  ThinQR out;
  out.q = qr.householderQ() * Eigen::MatrixXcd::Identity(curve.n, k + 1);
  out.r_diag = std::move(diag);
  return out;
}

}  // namespace

double ProjectorField::metric_density(Complex x, const DiffParams& params) const {
  return lagrangian_density(*this, x, params);
}

std::vector<double> gram_tower(const PolyCurve& curve, int k, Complex x) {
  const ThinQR qr = stack_qr(curve, k, x);
  std::vector<double> tower(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    const double p = std::abs(qr.r_diag[j]);
    tower[static_cast<std::size_t>(j)] = p * p;
  }
  return tower;
}

VeroneseBetaField::VeroneseBetaField(PolyCurve curve, BetaVector beta)
    : curve_(std::move(curve)), beta_(std::move(beta)), max_index_(0) {
  if (curve_.n != beta_.n()) {
    throw std::invalid_argument("VeroneseBetaField: curve dimension and beta length differ");
  }
  const GridLabel grid = beta_.grid();
  if (grid.empty()) throw std::invalid_argument("VeroneseBetaField: beta has weight 0");
  max_index_ = grid.back();
}

Eigen::MatrixXcd VeroneseBetaField::eval(Complex x) const {
  const ThinQR qr = stack_qr(curve_, max_index_, x);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(curve_.n, curve_.n);
  for (int j = 0; j <= max_index_; ++j) {
    if (!beta_.bit(j)) continue;
    p.noalias() += qr.q.col(j) * qr.q.col(j).adjoint();
  }
  return p;
}

double VeroneseBetaField::metric_density(Complex x, const DiffParams&) const {
  // Occupation steps past the top occupied slot see two zero bits, so the
  // tower only needs to reach max_index_ + 1 (the closing ratio t_n/t_{n-1}
  // vanishes identically and never enters).
  const int top = std::min(max_index_ + 1, curve_.n - 1);
  const std::vector<double> t = gram_tower(curve_, top, x);
  double g = 0.0;
  for (int j = 1; j <= top; ++j) {
    if (beta_.bit(j - 1) == beta_.bit(j)) continue;
    g += 0.5 * t[static_cast<std::size_t>(j)] / t[static_cast<std::size_t>(j - 1)];
  }
  return g;
}

}  // namespace sigsurf
