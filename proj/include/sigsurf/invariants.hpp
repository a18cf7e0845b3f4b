#pragma once

#include <utility>

#include "sigsurf/beta.hpp"
#include "sigsurf/rational.hpp"

namespace sigsurf {

// Exact geometric data of the surface built from one projector solution.
// Mean curvature is carried as its square h2, so every field stays rational;
// table entries quoted as surds are compared after squaring.
struct InvariantRecord {
  int n = 0;
  int m = 0;
  Rational r;      // Lagrangian density coefficient; r * kappa == 4
  Integer q;       // topological density coefficient
  Rational h2;     // squared mean curvature H^2
  Rational kappa;  // constant gaussian curvature K = 4/r

  bool operator==(const InvariantRecord& other) const {
    return n == other.n && m == other.m && r == other.r && q == other.q &&
           h2 == other.h2 && kappa == other.kappa;
  }
};

// alpha_{i,n} = i(n - i) for 0 <= i <= n.
long long alpha(long long i, long long n);

// Invariants of the i-th projector in the CP^{n-1} tower, 0 <= i <= n-1:
// r = n-1+2i(n-1-i), q = n-1-2i, h2 = (r^2+3q^2)/r^2, kappa = 4/r.
InvariantRecord cp_invariants(int i, int n);

// alpha_{m+j,n} = [r_m + (2j-1) q_m]/2 - j(j-1), valid while 0 <= m+j <= n.
long long alpha_via_recurrence(int m, int j, int n);

// Invariants of a general occupation vector.  With d_j = beta_{j-1} - beta_j
// and a_j = alpha_{j,n}:
//   r  = sum d_j^2 a_j,   q = sum d_j a_j,
//   h2 = 4 S2 / r^2 where
//   S2 = sum_j c_j a_j (c_j a_j - c_{j+1} a_{j+1}/2 - c_{j-1} a_{j-1}/2),
// with c_j = d_j^2.  Rejects weight 0 and weight n (r = 0 there).
InvariantRecord beta_invariants(const BetaVector& beta);

// (r - q, r + q) computed from the mixed occupation sums
//   r - q = 2 sum beta_j a_j     - 2 sum beta_j beta_{j-1} a_j,
//   r + q = 2 sum beta_{j-1} a_j - 2 sum beta_j beta_{j-1} a_j.
std::pair<Rational, Rational> rq_interaction_split(const BetaVector& beta);

// Closed forms for two-index vectors beta = {i, j} in G(2, n), dispatching
// on adjacent (j = i+1), one-gap (j = i+2) and wide (j > i+2) index pairs.
// Must agree with beta_invariants on every pair.
InvariantRecord g2_closed_forms(int i, int j, int n);

// The holomorphic vector beta = {0, ..., m-1}: r = q = m(n-m), h2 = 4.
std::pair<BetaVector, InvariantRecord> holomorphic_beta(int m, int n);

}  // namespace sigsurf
