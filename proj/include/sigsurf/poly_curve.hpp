#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace sigsurf {

using Complex = std::complex<double>;

// Holomorphic curve into C^n with polynomial components, stored by
// coefficient list (ascending power).
struct PolyCurve {
  int n = 0;
  std::vector<std::vector<Complex>> coeffs;  // coeffs[component][power]

  Eigen::VectorXcd derivative(int order, Complex x) const;

  // Columns f(x), f'(x), ..., f^{(max_order)}(x).
  Eigen::MatrixXcd derivative_stack(int max_order, Complex x) const;
};

// Components sqrt(binom(n-1, r)) x^r.  The orthogonalized tower of this
// curve realizes the CP^{n-1} solutions with norm ratios
// |P_+^j f|^2 / |P_+^{j-1} f|^2 = alpha_{j,n} / (1+|x|^2)^2.
PolyCurve veronese_curve(int n);

}  // namespace sigsurf
