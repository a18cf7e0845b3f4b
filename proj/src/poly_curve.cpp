#include "sigsurf/poly_curve.hpp"

#include <cmath>
#include <stdexcept>

namespace sigsurf {

Eigen::VectorXcd PolyCurve::derivative(int order, Complex x) const {
  if (order < 0) throw std::invalid_argument("PolyCurve: derivative order must be >= 0");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int comp = 0; comp < n; ++comp) {
    const auto& poly = coeffs[static_cast<std::size_t>(comp)];
    Complex acc(0.0, 0.0);
    // Horner evaluation of the order-th derivative.
    for (int p = static_cast<int>(poly.size()) - 1; p >= order; --p) {
      double fall = 1.0;
      for (int t = 0; t < order; ++t) fall *= static_cast<double>(p - t);
      acc = acc * x + fall * poly[static_cast<std::size_t>(p)];
    }
    out[comp] = acc;
  }
  return out;
}

Eigen::MatrixXcd PolyCurve::derivative_stack(int max_order, Complex x) const {
  Eigen::MatrixXcd stack(n, max_order + 1);
  for (int k = 0; k <= max_order; ++k) stack.col(k) = derivative(k, x);
  return stack;
}

PolyCurve veronese_curve(int n) {
  if (n < 2) throw std::invalid_argument("veronese_curve: need n >= 2");
  PolyCurve curve;
  curve.n = n;
  curve.coeffs.resize(static_cast<std::size_t>(n));
  double binom = 1.0;  // binom(n-1, r), updated multiplicatively
  for (int r = 0; r < n; ++r) {
    auto& poly = curve.coeffs[static_cast<std::size_t>(r)];
    poly.assign(static_cast<std::size_t>(r) + 1, Complex(0.0, 0.0));
    poly[static_cast<std::size_t>(r)] = Complex(std::sqrt(binom), 0.0);
    binom = binom * static_cast<double>(n - 1 - r) / static_cast<double>(r + 1);
  }
  return curve;
}

}  // namespace sigsurf
