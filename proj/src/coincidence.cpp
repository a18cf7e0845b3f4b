#include "sigsurf/coincidence.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sigsurf {

namespace {

struct RQKey {
  Rational r;
  Integer q;
  bool operator<(const RQKey& other) const {
    const int by_r = cmp(r, other.r);
    if (by_r != 0) return by_r < 0;
    return cmp(q, other.q) < 0;
  }
};

using GroupMap = std::map<RQKey, CoincidenceGroup>;

void insert_beta(GroupMap& groups, int n, int m, const BetaVector& beta) {
  InvariantRecord rec = beta_invariants(beta);
  RQKey key{rec.r, rec.q};
  auto [it, fresh] = groups.try_emplace(std::move(key));
  CoincidenceGroup& group = it->second;
  if (fresh) {
    group.n = n;
    group.m = m;
    group.r = rec.r;
    group.q = rec.q;
  }
  group.members.push_back(beta.grid());
  group.h2_values.push_back(std::move(rec.h2));
}

void merge_into(GroupMap& target, GroupMap&& source) {
  for (auto& [key, group] : source) {
    auto [it, fresh] = target.try_emplace(key);
    if (fresh) {
      it->second = std::move(group);
    } else {
      auto& dst = it->second;
      dst.members.insert(dst.members.end(), group.members.begin(), group.members.end());
      dst.h2_values.insert(dst.h2_values.end(), group.h2_values.begin(), group.h2_values.end());
    }
  }
}

std::vector<CoincidenceGroup> finalize(GroupMap&& groups) {
  std::vector<CoincidenceGroup> out;
  out.reserve(groups.size());
  for (auto& [key, group] : groups) {
    group.fully_separated = true;
    for (std::size_t a = 0; a < group.h2_values.size() && group.fully_separated; ++a) {
      for (std::size_t b = a + 1; b < group.h2_values.size(); ++b) {
        if (group.h2_values[a] == group.h2_values[b]) {
          group.fully_separated = false;
          break;
        }
      }
    }
    out.push_back(std::move(group));
  }
  return out;
}

void check_gm(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw std::invalid_argument("coincidences: need n >= 2 and 1 <= m <= n-1");
  }
}

// Enumerates the m-combinations of {0..n-1} starting with a fixed leading
// index, in lexicographic order.
void for_each_with_lead(int n, int m, int lead, bool dedup,
                        const std::function<void(const BetaVector&)>& fn) {
  GridLabel grid(static_cast<std::size_t>(m));
  grid[0] = lead;
  std::iota(grid.begin() + 1, grid.end(), lead + 1);
  while (true) {
    BetaVector beta = BetaVector::from_grid(n, grid);
    if (!dedup || is_complement_canonical(beta)) fn(beta);

    int k = m - 1;
    while (k >= 1 && grid[static_cast<std::size_t>(k)] == n - m + k) --k;
    if (k < 1) break;
    ++grid[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < m; ++t) {
      grid[static_cast<std::size_t>(t)] = grid[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
}

}  // namespace

std::vector<CoincidenceGroup> coincidences_serial(int n, int m) {
  check_gm(n, m);
  const bool dedup = 2 * m == n;
  GroupMap groups;
  for_each_beta(n, m, dedup, [&](const BetaVector& beta) { insert_beta(groups, n, m, beta); });
  return finalize(std::move(groups));
}

std::vector<CoincidenceGroup> coincidences(int n, int m) {
  check_gm(n, m);
  const bool dedup = 2 * m == n;
  const int lead_count = n - m + 1;  // leading index ranges over 0 .. n-m
  std::vector<GroupMap> partials(static_cast<std::size_t>(lead_count));

#pragma omp parallel for schedule(dynamic)
  for (int lead = 0; lead < lead_count; ++lead) {
    GroupMap local;
    for_each_with_lead(n, m, lead, dedup,
                       [&](const BetaVector& beta) { insert_beta(local, n, m, beta); });
    partials[static_cast<std::size_t>(lead)] = std::move(local);
  }

  GroupMap groups;
  for (auto& partial : partials) merge_into(groups, std::move(partial));
  return finalize(std::move(groups));
}

std::vector<NkiRecord> nki_scan(long long k_max, long long i_max) {
  if (k_max < 0 || i_max < 1) {
    throw std::invalid_argument("nki_scan: need k_max >= 0 and i_max >= 1");
  }
  std::vector<NkiRecord> out;
  for (long long k = 0; k <= k_max; ++k) {
    for (long long i = k + 1; i <= i_max; ++i) {
      const long long twice = 2 * k * (1 + k);
      if (twice % (1 + i) != 0) continue;

      NkiRecord rec;
      rec.k = k;
      rec.i = i;
      rec.n = 3 * i + 1 - 4 * k + twice / (1 + i);
      rec.l = 2 * i - k + 1;
      rec.admissible = (rec.l <= rec.n - 1) && (i + 1 <= rec.n - 1);
      if (rec.admissible) {
        const int n = static_cast<int>(rec.n);
        InvariantRecord adjacent = g2_closed_forms(static_cast<int>(i), static_cast<int>(i + 1), n);
        InvariantRecord gap = g2_closed_forms(static_cast<int>(k), static_cast<int>(rec.l), n);
        if (adjacent.r != gap.r || adjacent.q != gap.q) {
          throw std::logic_error("nki_scan: (r, q) not shared at k=" + std::to_string(k) +
                                 ", i=" + std::to_string(i));
        }
        rec.r = adjacent.r;
        rec.q = adjacent.q;
        rec.h2_adjacent = std::move(adjacent.h2);
        rec.h2_gap = std::move(gap.h2);
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<NkiRecord> nki_scan(long long k_max) { return nki_scan(k_max, default_i_max(k_max)); }

namespace {

NkiRecord instantiate(long long k, long long i) {
  const long long twice = 2 * k * (1 + k);
  if ((1 + i) <= 0 || twice % (1 + i) != 0) {
    throw std::invalid_argument("family_rows: (1+i) does not divide 2k(1+k)");
  }
  NkiRecord rec;
  rec.k = k;
  rec.i = i;
  rec.n = 3 * i + 1 - 4 * k + twice / (1 + i);
  rec.l = 2 * i - k + 1;
  rec.admissible = (rec.l <= rec.n - 1) && (i + 1 <= rec.n - 1);
  if (rec.admissible) {
    const int n = static_cast<int>(rec.n);
    InvariantRecord adjacent = g2_closed_forms(static_cast<int>(i), static_cast<int>(i + 1), n);
    InvariantRecord gap = g2_closed_forms(static_cast<int>(k), static_cast<int>(rec.l), n);
    rec.r = adjacent.r;
    rec.q = adjacent.q;
    rec.h2_adjacent = std::move(adjacent.h2);
    rec.h2_gap = std::move(gap.h2);
  }
  return rec;
}

}  // namespace

std::vector<NkiRecord> family_rows(long long param, FamilyTable table) {
  std::vector<NkiRecord> out;
  if (table == FamilyTable::two) {
    const long long k = param;
    if (k < 0) throw std::invalid_argument("family_rows: table two needs k >= 0");
    if (k > 0) {
      NkiRecord rec = instantiate(k, 2 * k * (1 + k) - 1);  // n = 6k^2+2k-1, l = 4k^2+3k-1
      if (rec.n != 6 * k * k + 2 * k - 1 || rec.l != 4 * k * k + 3 * k - 1 || !rec.admissible) {
        throw std::logic_error("family_rows: table two row 1 mismatch");
      }
      out.push_back(std::move(rec));
    }
    if (k > 1) {
      NkiRecord rec = instantiate(k, k * (1 + k) - 1);  // n = k(3k-1), l = 2k^2+k-1
      if (rec.n != k * (3 * k - 1) || rec.l != 2 * k * k + k - 1 || !rec.admissible) {
        throw std::logic_error("family_rows: table two row 2 mismatch");
      }
      out.push_back(std::move(rec));
    }
    {
      NkiRecord rec = instantiate(k, 2 * k + 1);  // n = 3k+4, l = 3(k+1) = n-1
      if (rec.n != 3 * k + 4 || rec.l != 3 * (k + 1) || !rec.admissible) {
        throw std::logic_error("family_rows: table two row 3 mismatch");
      }
      out.push_back(std::move(rec));
    }
    // Row 4 (i = 2k-1) always lands on l = n and is never admissible.
  } else {
    const long long m = param;
    if (m < 2) throw std::invalid_argument("family_rows: table three needs m >= 2");
    {
      NkiRecord rec = instantiate(2 * m + 1, m * (2 * m + 3));  // n = 6m^2+m+1, l = 4m(m+1)
      if (rec.n != 6 * m * m + m + 1 || rec.l != 4 * m * (m + 1) || !rec.admissible) {
        throw std::logic_error("family_rows: table three odd row mismatch");
      }
      out.push_back(std::move(rec));
    }
    {
      NkiRecord rec = instantiate(2 * m, m * (2 * m + 1) - 1);  // n = 6m^2-5m+2, l = 4m^2-1
      if (rec.n != 6 * m * m - 5 * m + 2 || rec.l != 4 * m * m - 1 || !rec.admissible) {
        throw std::logic_error("family_rows: table three even row mismatch");
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

RatioIdentityReport ratio_identities(long long max_param) {
  if (max_param < 1) throw std::invalid_argument("ratio_identities: need max_param >= 1");
  RatioIdentityReport report;
  report.max_param = max_param;
  report.family_a_matches = true;
  report.family_b_matches = true;

  for (long long i = 1; i <= max_param; ++i) {
    const int n = static_cast<int>(3 * i + 1);
    const Rational lhs = g2_closed_forms(0, static_cast<int>(2 * i + 1), n).h2 /
                         g2_closed_forms(static_cast<int>(i), static_cast<int>(i + 1), n).h2;
    const Rational rhs(static_cast<long>(2 + i + 3 * i * i + i * i * i + 2 * i * i * i * i),
                       static_cast<long>(2 - 6 * i + i * i + 8 * i * i * i + 4 * i * i * i * i));
    Rational canonical = rhs;
    canonical.canonicalize();
    if (lhs != canonical) report.family_a_matches = false;
    if (lhs == 1) report.family_a_unity.push_back(i);
  }

  for (long long k = 0; k <= max_param; ++k) {
    const int n = static_cast<int>(4 + 3 * k);
    const Rational lhs = g2_closed_forms(static_cast<int>(k), static_cast<int>(3 + 3 * k), n).h2 /
                         g2_closed_forms(static_cast<int>(1 + 2 * k), static_cast<int>(2 + 2 * k), n).h2;
    const Rational rhs(
        static_cast<long>(9 + 18 * k + 18 * k * k + 9 * k * k * k + 2 * k * k * k * k),
        static_cast<long>(9 + 36 * k + 49 * k * k + 24 * k * k * k + 4 * k * k * k * k));
    Rational canonical = rhs;
    canonical.canonicalize();
    if (lhs != canonical) report.family_b_matches = false;
    if (lhs == 1) report.family_b_unity.push_back(k);
  }
  return report;
}

}  // namespace sigsurf
