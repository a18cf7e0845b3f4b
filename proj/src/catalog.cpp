#include "sigsurf/catalog.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sigsurf {

namespace {

using Json = nlohmann::ordered_json;

Json grid_json(const GridLabel& grid) { return Json(grid); }

GridLabel grid_from(const Json& j) { return j.get<GridLabel>(); }

Json emit_invariant(const InvariantPayload& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "invariant";
  j["n"] = p.rec.n;
  j["m"] = p.rec.m;
  j["grid"] = grid_json(p.grid);
  j["r"] = to_string(p.rec.r);
  j["q"] = to_string(p.rec.q);
  j["h2"] = to_string(p.rec.h2);
  j["kappa"] = to_string(p.rec.kappa);
  return j;
}

Json emit_group(const GroupPayload& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "group";
  j["n"] = p.group.n;
  j["m"] = p.group.m;
  j["r"] = to_string(p.group.r);
  j["q"] = to_string(p.group.q);
  Json members = Json::array();
  for (const auto& g : p.group.members) members.push_back(grid_json(g));
  j["members"] = std::move(members);
  Json h2s = Json::array();
  for (const auto& h2 : p.group.h2_values) h2s.push_back(to_string(h2));
  j["h2_values"] = std::move(h2s);
  j["fully_separated"] = p.group.fully_separated;
  return j;
}

Json emit_nki(const NkiPayload& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "nki";
  j["k"] = p.record.k;
  j["i"] = p.record.i;
  j["n"] = p.record.n;
  j["m"] = 2;
  j["l"] = p.record.l;
  j["admissible"] = p.record.admissible;
  if (p.record.admissible) {
    j["grid_adjacent"] = grid_json({static_cast<int>(p.record.i), static_cast<int>(p.record.i + 1)});
    j["grid_gap"] = grid_json({static_cast<int>(p.record.k), static_cast<int>(p.record.l)});
    j["r"] = to_string(p.record.r);
    j["q"] = to_string(p.record.q);
    j["h2_adjacent"] = to_string(p.record.h2_adjacent);
    j["h2_gap"] = to_string(p.record.h2_gap);
  }
  j["family_sample"] = p.family_sample;
  return j;
}

Json emit_verify(const VerifyPayload& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "verify";
  j["target"] = "veronese";
  j["n"] = p.report.n;
  j["m"] = p.report.m;
  j["grid"] = grid_json(p.report.grid);
  j["tol"] = p.tol;
  j["h"] = p.diff.h;
  j["richardson"] = p.diff.richardson;
  j["seed"] = p.seed;
  j["samples"] = p.samples;
  j["resid_r"] = p.report.check.resid_r;
  j["resid_q"] = p.report.check.resid_q;
  j["resid_kappa"] = p.report.check.resid_kappa;
  j["resid_h2"] = p.report.check.resid_h2;
  j["pass"] = p.report.pass;
  return j;
}

Json emit_g25(const G25Payload& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "verify";
  j["target"] = "nonveronese";
  j["n"] = 5;
  j["m"] = 2;
  j["samples"] = p.report.samples;
  j["kappa_tol"] = p.report.kappa_tol;
  j["ratio_tol"] = p.report.ratio_tol;
  j["h"] = p.diff.h;
  j["richardson"] = p.diff.richardson;
  j["seed"] = p.seed;
  j["max_kappa_resid"] = p.report.max_kappa_resid;
  j["max_density_resid"] = p.report.max_density_resid;
  j["max_lq_gap"] = p.report.max_lq_gap;
  j["max_ratio_resid"] = p.report.max_ratio_resid;
  j["h2_spread_1"] = p.report.h2_spread_1;
  j["h2_spread_2"] = p.report.h2_spread_2;
  j["pass"] = p.report.pass;
  return j;
}

InvariantPayload parse_invariant(const Json& j) {
  InvariantPayload p;
  p.grid = grid_from(j.at("grid"));
  p.rec.n = j.at("n").get<int>();
  p.rec.m = j.at("m").get<int>();
  p.rec.r = rational_from_string(j.at("r").get<std::string>());
  p.rec.q = integer_from_string(j.at("q").get<std::string>());
  p.rec.h2 = rational_from_string(j.at("h2").get<std::string>());
  p.rec.kappa = rational_from_string(j.at("kappa").get<std::string>());
  return p;
}

GroupPayload parse_group(const Json& j) {
  GroupPayload p;
  p.group.n = j.at("n").get<int>();
  p.group.m = j.at("m").get<int>();
  p.group.r = rational_from_string(j.at("r").get<std::string>());
  p.group.q = integer_from_string(j.at("q").get<std::string>());
  for (const auto& g : j.at("members")) p.group.members.push_back(grid_from(g));
  for (const auto& h2 : j.at("h2_values")) {
    p.group.h2_values.push_back(rational_from_string(h2.get<std::string>()));
  }
  p.group.fully_separated = j.at("fully_separated").get<bool>();
  return p;
}

NkiPayload parse_nki(const Json& j) {
  NkiPayload p;
  p.record.k = j.at("k").get<long long>();
  p.record.i = j.at("i").get<long long>();
  p.record.n = j.at("n").get<long long>();
  p.record.l = j.at("l").get<long long>();
  p.record.admissible = j.at("admissible").get<bool>();
  if (p.record.admissible) {
    p.record.r = rational_from_string(j.at("r").get<std::string>());
    p.record.q = integer_from_string(j.at("q").get<std::string>());
    p.record.h2_adjacent = rational_from_string(j.at("h2_adjacent").get<std::string>());
    p.record.h2_gap = rational_from_string(j.at("h2_gap").get<std::string>());
  }
  p.family_sample = j.value("family_sample", false);
  return p;
}

VerifyPayload parse_verify(const Json& j) {
  VerifyPayload p;
  p.report.n = j.at("n").get<int>();
  p.report.m = j.at("m").get<int>();
  p.report.grid = grid_from(j.at("grid"));
  p.tol = j.at("tol").get<double>();
  p.diff.h = j.at("h").get<double>();
  p.diff.richardson = j.at("richardson").get<bool>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.samples = j.at("samples").get<int>();
  p.report.check.resid_r = j.at("resid_r").get<double>();
  p.report.check.resid_q = j.at("resid_q").get<double>();
  p.report.check.resid_kappa = j.at("resid_kappa").get<double>();
  p.report.check.resid_h2 = j.at("resid_h2").get<double>();
  p.report.pass = j.at("pass").get<bool>();
  return p;
}

G25Payload parse_g25(const Json& j) {
  G25Payload p;
  p.report.samples = j.at("samples").get<int>();
  p.report.kappa_tol = j.at("kappa_tol").get<double>();
  p.report.ratio_tol = j.at("ratio_tol").get<double>();
  p.diff.h = j.at("h").get<double>();
  p.diff.richardson = j.at("richardson").get<bool>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.report.max_kappa_resid = j.at("max_kappa_resid").get<double>();
  p.report.max_density_resid = j.at("max_density_resid").get<double>();
  p.report.max_lq_gap = j.at("max_lq_gap").get<double>();
  p.report.max_ratio_resid = j.at("max_ratio_resid").get<double>();
  p.report.h2_spread_1 = j.at("h2_spread_1").get<double>();
  p.report.h2_spread_2 = j.at("h2_spread_2").get<double>();
  p.report.pass = j.at("pass").get<bool>();
  return p;
}

}  // namespace

std::string emit_record(const CatalogRecord& record) {
  Json j = std::visit(
      [](const auto& payload) -> Json {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, InvariantPayload>) return emit_invariant(payload);
        if constexpr (std::is_same_v<T, GroupPayload>) return emit_group(payload);
        if constexpr (std::is_same_v<T, NkiPayload>) return emit_nki(payload);
        if constexpr (std::is_same_v<T, VerifyPayload>) return emit_verify(payload);
        if constexpr (std::is_same_v<T, G25Payload>) return emit_g25(payload);
        return Json{};
      },
      record);
  return j.dump();
}

CatalogRecord parse_record(const std::string& line) {
  const Json j = Json::parse(line);
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("parse_record: unsupported schema version");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "invariant") return parse_invariant(j);
  if (kind == "group") return parse_group(j);
  if (kind == "nki") return parse_nki(j);
  if (kind == "verify") {
    const std::string target = j.at("target").get<std::string>();
    if (target == "veronese") return parse_verify(j);
    if (target == "nonveronese") return parse_g25(j);
    throw std::invalid_argument("parse_record: unknown verify target '" + target + "'");
  }
  throw std::invalid_argument("parse_record: unknown kind '" + kind + "'");
}

bool record_equal(const CatalogRecord& a, const CatalogRecord& b) {
  return emit_record(a) == emit_record(b);
}

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = {
      {4, {0, 1}, 4, 4, "4"},      {4, {1, 2}, 6, 0, "2"},      {4, {0, 2}, 10, 2, "2/5"},
      {5, {0, 1}, 6, 6, "4"},      {5, {1, 2}, 10, 2, "52/25"}, {5, {0, 2}, 16, 4, "7/16"},
      {5, {0, 3}, 14, 2, "44/49"}, {5, {0, 4}, 8, 0, "2"},      {5, {1, 3}, 20, 0, "1/5"},
      {6, {0, 1}, 8, 8, "4"},      {6, {1, 2}, 14, 4, "106/49"}, {6, {2, 3}, 16, 0, "2"},
      {6, {0, 2}, 22, 6, "58/121"}, {6, {0, 3}, 22, 4, "98/121"}, {6, {0, 4}, 18, 2, "74/81"},
      {6, {0, 5}, 10, 0, "2"},     {6, {1, 3}, 30, 2, "2/9"},   {6, {1, 4}, 26, 0, "98/169"},
  };
  return rows;
}

std::vector<std::pair<GridLabel, InvariantRecord>> table_block(int n) {
  std::vector<std::pair<GridLabel, InvariantRecord>> out;
  for (const TableRow& row : reference_table()) {
    if (row.n != n) continue;
    out.emplace_back(row.grid, beta_invariants(BetaVector::from_grid(n, row.grid)));
  }
  if (out.empty()) throw std::invalid_argument("table_block: no reference block for n=" + std::to_string(n));
  return out;
}

TableCheck check_reference_table() {
  TableCheck check;
  for (const TableRow& row : reference_table()) {
    const InvariantRecord rec = beta_invariants(BetaVector::from_grid(row.n, row.grid));
    const bool ok = rec.r == Rational(static_cast<long>(row.r)) &&
                    rec.q == Integer(static_cast<long>(row.q)) &&
                    rec.h2 == rational_from_string(row.h2);
    if (!ok) {
      check.ok = false;
      std::ostringstream msg;
      msg << "n=" << row.n << " grid=" << format_grid(row.grid) << ": recomputed (r="
          << to_string(rec.r) << ", q=" << to_string(rec.q) << ", h2=" << to_string(rec.h2)
          << ") reference (r=" << row.r << ", q=" << row.q << ", h2=" << row.h2 << ")";
      check.mismatches.push_back(msg.str());
    }
  }
  return check;
}

std::string format_grid(const GridLabel& grid) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) out << ",";
    out << grid[i];
  }
  out << ")";
  return out.str();
}

std::string format_invariant_rows(const std::string& title,
                                  const std::vector<std::pair<GridLabel, InvariantRecord>>& rows,
                                  bool csv) {
  std::ostringstream out;
  if (csv) {
    out << "n,m,grid,r,q,h2,kappa\n";
    for (const auto& [grid, rec] : rows) {
      out << rec.n << "," << rec.m << ",\"" << format_grid(grid) << "\"," << to_string(rec.r)
          << "," << to_string(rec.q) << "," << to_string(rec.h2) << "," << to_string(rec.kappa)
          << "\n";
    }
    return out.str();
  }

  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"grid", "r", "q", "H^2"});
  for (const auto& [grid, rec] : rows) {
    cells.push_back({format_grid(grid), to_string(rec.r), to_string(rec.q), to_string(rec.h2)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  }
  if (!title.empty()) out << "# " << title << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << row[c];
      if (c + 1 < 4) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sigsurf
