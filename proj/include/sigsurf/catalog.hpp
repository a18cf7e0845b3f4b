#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sigsurf/coincidence.hpp"
#include "sigsurf/frames.hpp"
#include "sigsurf/invariants.hpp"
#include "sigsurf/sweep.hpp"

namespace sigsurf {

inline constexpr int kSchemaVersion = 1;

// One emitted line per record; every payload carries n, m and grid data so
// records are self-describing.
struct InvariantPayload {
  GridLabel grid;
  InvariantRecord rec;
};

struct GroupPayload {
  CoincidenceGroup group;
};

struct NkiPayload {
  NkiRecord record;
  bool family_sample = false;  // marks the k = 0 representative in CLI scans
};

struct VerifyPayload {
  SweepReport report;
  double tol = 0.0;
  DiffParams diff;
  std::uint64_t seed = 0;
  int samples = 0;
};

struct G25Payload {
  G25Report report;
  DiffParams diff;
  std::uint64_t seed = 0;
};

using CatalogRecord = std::variant<InvariantPayload, GroupPayload, NkiPayload, VerifyPayload, G25Payload>;

// Canonical single-line JSON.  Rationals appear as canonical "p/q" strings
// (gcd 1, positive denominator, "/1" omitted), so emit/parse round-trips
// exactly.
std::string emit_record(const CatalogRecord& record);
CatalogRecord parse_record(const std::string& line);
bool record_equal(const CatalogRecord& a, const CatalogRecord& b);

// Reference rows for the G(2,4), G(2,5) and G(2,6) blocks: grid, r, q, H^2.
struct TableRow {
  int n;
  GridLabel grid;
  long long r;
  long long q;
  const char* h2;
};

const std::vector<TableRow>& reference_table();

// Recomputes the reference block for one n (rows in reference order).
std::vector<std::pair<GridLabel, InvariantRecord>> table_block(int n);

struct TableCheck {
  bool ok = true;
  std::vector<std::string> mismatches;
};

// Compares recomputed blocks against every embedded reference row.
TableCheck check_reference_table();

// Text rendering used by the CLI: aligned columns grid, r, q, H^2 (or CSV).
std::string format_invariant_rows(const std::string& title,
                                  const std::vector<std::pair<GridLabel, InvariantRecord>>& rows,
                                  bool csv);

std::string format_grid(const GridLabel& grid);

}  // namespace sigsurf
