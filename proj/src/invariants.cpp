#include "sigsurf/invariants.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sigsurf {

namespace {

Rational square(const Rational& v) { return v * v; }

InvariantRecord make_record(int n, int m, Rational r, Integer q, Rational s2) {
  InvariantRecord rec;
  rec.n = n;
  rec.m = m;
  rec.h2 = 4 * s2 / square(r);
  rec.kappa = Rational(4) / r;
  rec.r = std::move(r);
  rec.q = std::move(q);
  return rec;
}

}  // namespace

long long alpha(long long i, long long n) {
  if (n < 0 || i < 0 || i > n) {
    throw std::out_of_range("alpha: need 0 <= i <= n, got i=" + std::to_string(i) +
                            ", n=" + std::to_string(n));
  }
  return i * (n - i);
}

InvariantRecord cp_invariants(int i, int n) {
  if (n < 2) throw std::invalid_argument("cp_invariants: n must be >= 2");
  if (i < 0 || i > n - 1) {
    throw std::out_of_range("cp_invariants: need 0 <= i <= n-1");
  }
  const long long r = (n - 1) + 2LL * i * (n - 1 - i);
  const long long q = n - 1 - 2LL * i;
  InvariantRecord rec;
  rec.n = n;
  rec.m = 1;
  rec.r = Rational(static_cast<long>(r));
  rec.q = Integer(static_cast<long>(q));
  rec.h2 = Rational(static_cast<long>(r * r + 3 * q * q), static_cast<long>(r * r));
  rec.kappa = Rational(4, static_cast<long>(r));
  rec.h2.canonicalize();
  rec.kappa.canonicalize();
  return rec;
}

long long alpha_via_recurrence(int m, int j, int n) {
  if (j < 0) throw std::invalid_argument("alpha_via_recurrence: j must be >= 0");
  if (m + j > n) {
    throw std::out_of_range("alpha_via_recurrence: m + j exits [0, n]");
  }
  const InvariantRecord base = cp_invariants(m, n);  // validates m
  const long long r = base.r.get_num().get_si();
  const long long q = base.q.get_si();
  const long long numerator = r + (2LL * j - 1) * q;  // r and q share parity
  return numerator / 2 - static_cast<long long>(j) * (j - 1);
}

InvariantRecord beta_invariants(const BetaVector& beta) {
  const int n = beta.n();
  const int m = beta.weight();
  if (m == 0 || m == n) {
    throw std::domain_error("beta_invariants: weight 0 or n has r = 0, curvature undefined");
  }

  std::vector<long long> a(static_cast<std::size_t>(n) + 1);
  std::vector<long long> c(static_cast<std::size_t>(n) + 1);
  Integer r = 0;
  Integer q = 0;
  for (int j = 0; j <= n; ++j) {
    const long long d = beta.bit(j - 1) - beta.bit(j);
    a[static_cast<std::size_t>(j)] = alpha(j, n);
    c[static_cast<std::size_t>(j)] = d * d;
    r += static_cast<long>(c[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(j)]);
    q += static_cast<long>(d * a[static_cast<std::size_t>(j)]);
  }

  Rational s2 = 0;
  for (int j = 0; j <= n; ++j) {
    const long long center = c[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(j)];
    if (center == 0) continue;
    const long long up = (j + 1 <= n) ? c[static_cast<std::size_t>(j) + 1] * a[static_cast<std::size_t>(j) + 1] : 0;
    const long long down = (j >= 1) ? c[static_cast<std::size_t>(j) - 1] * a[static_cast<std::size_t>(j) - 1] : 0;
    Rational neighbors(static_cast<long>(up + down), 2);
    neighbors.canonicalize();
    s2 += Rational(static_cast<long>(center)) * (Rational(static_cast<long>(center)) - neighbors);
  }

  return make_record(n, m, Rational(r), std::move(q), std::move(s2));
}

std::pair<Rational, Rational> rq_interaction_split(const BetaVector& beta) {
  const int n = beta.n();
  Integer occupied = 0;     // sum beta_j alpha_j
  Integer shifted = 0;      // sum beta_{j-1} alpha_j
  Integer interaction = 0;  // sum beta_j beta_{j-1} alpha_j
  for (int j = 1; j <= n - 1; ++j) {
    const long a = static_cast<long>(alpha(j, n));
    occupied += static_cast<long>(beta.bit(j)) * a;
    shifted += static_cast<long>(beta.bit(j - 1)) * a;
    interaction += static_cast<long>(beta.bit(j) * beta.bit(j - 1)) * a;
  }
  Rational r_minus_q = Rational(2 * (occupied - interaction));
  Rational r_plus_q = Rational(2 * (shifted - interaction));
  return {std::move(r_minus_q), std::move(r_plus_q)};
}

InvariantRecord g2_closed_forms(int i, int j, int n) {
  if (n < 3) throw std::invalid_argument("g2_closed_forms: need n >= 3");
  if (i < 0 || j <= i || j > n - 1) {
    throw std::invalid_argument("g2_closed_forms: need 0 <= i < j <= n-1");
  }

  const auto a = [n](int k) { return Rational(static_cast<long>(alpha(k, n))); };

  Rational r;
  Integer q;
  Rational s2;
  if (j == i + 1) {
    q = Integer(static_cast<long>(2LL * (n - 2 - 2LL * i)));
    r = Rational(static_cast<long>(2LL * (n - 2 + static_cast<long long>(i) * (n - 2 - i))));
    s2 = square(a(i)) + square(a(i + 2));
  } else {
    q = Integer(static_cast<long>(2LL * (n - 1 - i - j)));
    r = Rational(static_cast<long>(
        2LL * (n - 1 + static_cast<long long>(i) * (n - 1 - i) + static_cast<long long>(j) * (n - 1 - j))));
    if (j == i + 2) {
      s2 = square(a(i)) - a(i) * a(i + 1) + square(a(i + 1)) - a(i + 1) * a(i + 2) +
           square(a(i + 2)) - a(i + 2) * a(i + 3) + square(a(i + 3));
    } else {
      s2 = square(a(i)) - a(i) * a(i + 1) + square(a(i + 1)) + square(a(j)) -
           a(j) * a(j + 1) + square(a(j + 1));
    }
  }
  return make_record(n, 2, std::move(r), std::move(q), std::move(s2));
}

std::pair<BetaVector, InvariantRecord> holomorphic_beta(int m, int n) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw std::invalid_argument("holomorphic_beta: need 1 <= m <= n-1, n >= 2");
  }
  GridLabel grid(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) grid[static_cast<std::size_t>(t)] = t;
  BetaVector beta = BetaVector::from_grid(n, grid);

  const long long rq = static_cast<long long>(m) * (n - m);
  InvariantRecord rec;
  rec.n = n;
  rec.m = m;
  rec.r = Rational(static_cast<long>(rq));
  rec.q = Integer(static_cast<long>(rq));
  rec.h2 = 4;
  rec.kappa = Rational(4, static_cast<long>(rq));
  rec.kappa.canonicalize();
  return {std::move(beta), std::move(rec)};
}

}  // namespace sigsurf
