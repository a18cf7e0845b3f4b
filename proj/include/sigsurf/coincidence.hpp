#pragma once

#include <vector>

#include "sigsurf/beta.hpp"
#include "sigsurf/invariants.hpp"

namespace sigsurf {

// All enumerated occupation vectors of G(m, n) sharing the exact key (r, q).
// Members are complement-canonical, so no two members are related by the
// complement (which yields the identical surface).
struct CoincidenceGroup {
  int n = 0;
  int m = 0;
  Rational r;
  Integer q;
  std::vector<GridLabel> members;   // lexicographic order
  std::vector<Rational> h2_values;  // parallel to members
  bool fully_separated = true;      // all h2 pairwise distinct

  bool multi() const { return members.size() >= 2; }
};

// Groups sorted by (r, q).  The serial version is the reference
// implementation; coincidences() partitions the enumeration by leading grid
// index and merges per-partition maps in index order, so both produce
// identical output.
std::vector<CoincidenceGroup> coincidences_serial(int n, int m);
std::vector<CoincidenceGroup> coincidences(int n, int m);

// One solution of n = 3i + 1 - 4k + 2k(1+k)/(1+i): the dimension where the
// adjacent pair (i, i+1) and the wide pair (k, l), l = 2i - k + 1, share
// (r, q).  Admissible means both grids fit inside G(2, n).
struct NkiRecord {
  long long k = 0;
  long long i = 0;
  long long n = 0;
  long long l = 0;
  bool admissible = false;
  Rational r;            // shared exact key, attached when admissible
  Integer q;
  Rational h2_adjacent;  // H^2 of (i, i+1)
  Rational h2_gap;       // H^2 of (k, l)
};

inline long long default_i_max(long long k_max) { return 2 * k_max * (1 + k_max); }

// Every integral n_{k,i} with 0 <= k <= k_max, k < i <= i_max.  Admissible
// records carry the shared (r, q) and both H^2 values; sharing is verified
// exactly during the scan.
std::vector<NkiRecord> nki_scan(long long k_max, long long i_max);
std::vector<NkiRecord> nki_scan(long long k_max);  // i_max = 2 k_max (1 + k_max)

// Parametric families of admissible (k, i) pairs.
enum class FamilyTable { two, three };

// Rows of the requested table instantiated at one parameter value
// (k for table two, m for table three).  Rows whose stated range excludes
// the parameter are skipped; the l = n row of table two is never produced
// (it is inadmissible for every k).
std::vector<NkiRecord> family_rows(long long param, FamilyTable table);

// Exact check of the two closed-form curvature-ratio families:
//   family a:  n = 3i+1,  h2(0, 2i+1) / h2(i, i+1)
//                = (2 + i + 3i^2 + i^3 + 2i^4) / (2 - 6i + i^2 + 8i^3 + 4i^4)
//   family b:  n = 4+3k,  h2(k, 3+3k) / h2(1+2k, 2+2k)
//                = (9 + 18k + 18k^2 + 9k^3 + 2k^4) / (9 + 36k + 49k^2 + 24k^3 + 4k^4)
// The report lists every parameter where the ratio is exactly 1.
struct RatioIdentityReport {
  long long max_param = 0;
  bool family_a_matches = false;
  bool family_b_matches = false;
  std::vector<long long> family_a_unity;  // expected {1}
  std::vector<long long> family_b_unity;  // expected {0}
};

RatioIdentityReport ratio_identities(long long max_param);

}  // namespace sigsurf
