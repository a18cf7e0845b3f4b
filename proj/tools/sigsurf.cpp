#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sigsurf/catalog.hpp"
#include "sigsurf/threads.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct OutputSink {
  std::optional<std::string> path;

  void write(const std::string& text) const {
    if (path) {
      std::ofstream out(*path);
      if (!out) throw CLI::ValidationError("--out", "cannot open '" + *path + "' for writing");
      out << text;
    } else {
      std::cout << text;
    }
  }
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int single = std::stoi(text);
      return {single, single};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected N or LO..HI, got '" + text + "'");
  }
}

std::string render_records(const std::vector<sigsurf::CatalogRecord>& records) {
  std::ostringstream out;
  for (const auto& rec : records) out << sigsurf::emit_record(rec) << "\n";
  return out.str();
}

int cmd_invariants(int n, const std::vector<int>& grid, bool all, int m, bool json, bool csv,
                   const OutputSink& sink) {
  std::vector<std::pair<sigsurf::GridLabel, sigsurf::InvariantRecord>> rows;
  if (!grid.empty()) {
    const auto beta = sigsurf::BetaVector::from_grid(n, grid);
    rows.emplace_back(beta.grid(), sigsurf::beta_invariants(beta));
  } else if (all) {
    if (m < 1 || m > n - 1) {
      throw CLI::ValidationError("--m", "need 1 <= m <= n-1 with --all");
    }
    for (const auto& beta : sigsurf::enumerate_betas(n, m)) {
      rows.emplace_back(beta.grid(), sigsurf::beta_invariants(beta));
    }
  } else {
    throw CLI::ValidationError("invariants", "pass --grid or --all");
  }

  if (json) {
    std::vector<sigsurf::CatalogRecord> records;
    for (auto& [g, rec] : rows) records.push_back(sigsurf::InvariantPayload{g, rec});
    sink.write(render_records(records));
  } else {
    std::ostringstream title;
    title << "G(" << rows.front().second.m << "," << n << ") invariants";
    sink.write(sigsurf::format_invariant_rows(csv ? "" : title.str(), rows, csv));
  }
  return kExitOk;
}

int cmd_table(const std::string& range, bool check, bool json, bool csv, const OutputSink& sink) {
  const auto [lo, hi] = parse_range(range);
  if (lo < 4 || hi > 6) {
    throw CLI::ValidationError("--n", "reference blocks cover n = 4..6");
  }

  std::ostringstream out;
  std::vector<sigsurf::CatalogRecord> records;
  for (int n = lo; n <= hi; ++n) {
    const auto rows = sigsurf::table_block(n);
    if (json) {
      for (const auto& [g, rec] : rows) records.push_back(sigsurf::InvariantPayload{g, rec});
    } else {
      std::ostringstream title;
      title << "G(2," << n << ")";
      out << sigsurf::format_invariant_rows(csv ? "" : title.str(), rows, csv);
      if (!csv && n < hi) out << "\n";
    }
  }
  sink.write(json ? render_records(records) : out.str());

  if (check) {
    const auto result = sigsurf::check_reference_table();
    if (!result.ok) {
      for (const auto& line : result.mismatches) std::cerr << "mismatch: " << line << "\n";
      return kExitCheckFailed;
    }
    std::cerr << "table check: all " << sigsurf::reference_table().size() << " rows match\n";
  }
  return kExitOk;
}

int cmd_search(int n_max, int m, bool include_singletons, const OutputSink& sink) {
  if (n_max < m + 1) throw CLI::ValidationError("--n-max", "need n-max >= m+1");
  std::vector<sigsurf::CatalogRecord> records;
  for (int n = m + 1; n <= n_max; ++n) {
    for (auto& group : sigsurf::coincidences(n, m)) {
      if (!include_singletons && !group.multi()) continue;
      records.push_back(sigsurf::GroupPayload{std::move(group)});
    }
  }
  sink.write(render_records(records));
  return kExitOk;
}

int cmd_scan_nki(long long k_max, long long i_max, const OutputSink& sink) {
  std::vector<sigsurf::CatalogRecord> records;
  bool family_sample_done = false;
  for (auto& rec : sigsurf::nki_scan(k_max, i_max)) {
    if (!rec.admissible) continue;
    if (rec.k == 0) {
      // Every i solves k = 0; emit the first member as the family sample.
      if (family_sample_done) continue;
      family_sample_done = true;
      records.push_back(sigsurf::NkiPayload{std::move(rec), true});
    } else {
      records.push_back(sigsurf::NkiPayload{std::move(rec), false});
    }
  }
  sink.write(render_records(records));
  return kExitOk;
}

int cmd_verify(int n, const std::vector<int>& grid, int n_max, double tol, double h,
               bool richardson, std::uint64_t seed, int samples, bool json,
               const OutputSink& sink) {
  sigsurf::SweepParams params;
  params.tol = tol;
  params.diff.h = h;
  params.diff.richardson = richardson;
  params.plan.seed = seed;
  params.plan.count = samples;

  std::vector<sigsurf::SweepReport> reports;
  if (!grid.empty()) {
    if (n < 2) throw CLI::ValidationError("--n", "need --n >= 2 with --grid");
    sigsurf::SweepReport report;
    report.n = n;
    report.m = static_cast<int>(grid.size());
    report.grid = grid;
    const auto beta = sigsurf::BetaVector::from_grid(n, grid);
    sigsurf::SamplePlan plan = params.plan;
    plan.seed = sigsurf::mix_seed(params.plan.seed, static_cast<std::uint64_t>(n), 1);
    report.check = sigsurf::check_veronese_beta(beta, plan, params.diff);
    report.pass = report.check.worst() <= tol;
    reports.push_back(std::move(report));
  } else if (n_max >= 2) {
    reports = sigsurf::oracle_sweep(n_max, params);
  } else {
    throw CLI::ValidationError("verify", "pass --n with --grid, or --n-max");
  }

  bool all_pass = true;
  std::ostringstream text;
  std::vector<sigsurf::CatalogRecord> records;
  for (const auto& report : reports) {
    all_pass = all_pass && report.pass;
    if (json) {
      records.push_back(sigsurf::VerifyPayload{report, tol, params.diff, seed, samples});
    } else {
      text << "G(" << report.m << "," << report.n << ") " << sigsurf::format_grid(report.grid)
           << "  worst residual " << report.check.worst() << "  "
           << (report.pass ? "ok" : "FAIL") << "\n";
    }
  }
  if (!json) {
    text << (all_pass ? "verify: all residuals within " : "verify: residuals exceed ") << tol
         << " (" << reports.size() << " solutions)\n";
  }
  sink.write(json ? render_records(records) : text.str());
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_nonveronese(int samples, double ratio_tol, double kappa_tol, double h, bool richardson,
                    std::uint64_t seed, bool json, const OutputSink& sink) {
  sigsurf::DiffParams diff;
  diff.h = h;
  diff.richardson = richardson;
  const auto report = sigsurf::verify_g25(samples, kappa_tol, ratio_tol, diff, seed);

  if (json) {
    sink.write(render_records({sigsurf::G25Payload{report, diff, seed}}));
  } else {
    std::ostringstream text;
    text << "frames in C^5: K residual " << report.max_kappa_resid << " (tol " << kappa_tol
         << "), ratio residual " << report.max_ratio_resid << " (tol " << ratio_tol
         << "), H^2 spreads " << report.h2_spread_1 << " / " << report.h2_spread_2 << "\n"
         << (report.pass ? "nonveronese: pass" : "nonveronese: FAIL") << "\n";
    sink.write(text.str());
  }
  return report.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  sigsurf::apply_thread_cap();

  CLI::App app{"exact and numeric geometry of projector surfaces from grassmannian sigma models"};
  app.require_subcommand(1);

  std::string out_path;

  // invariants
  auto* inv = app.add_subcommand("invariants", "exact invariants (r, q, H^2, K) of occupation vectors");
  int inv_n = 0;
  std::vector<int> inv_grid;
  bool inv_all = false;
  int inv_m = 0;
  bool inv_json = false, inv_csv = false;
  inv->add_option("--n", inv_n, "ambient dimension")->required();
  inv->add_option("--grid", inv_grid, "occupied indices, e.g. 0,5")->delimiter(',');
  inv->add_flag("--all", inv_all, "every vector of weight --m");
  inv->add_option("--m", inv_m, "weight for --all");
  inv->add_flag("--json", inv_json, "newline-delimited records");
  inv->add_flag("--csv", inv_csv, "CSV rows");
  inv->add_option("--out", out_path, "write to file instead of stdout");

  // table
  auto* tab = app.add_subcommand("table", "reference blocks for G(2,4), G(2,5), G(2,6)");
  std::string tab_range = "4..6";
  bool tab_check = false, tab_json = false, tab_csv = false;
  tab->add_option("--n", tab_range, "block range, e.g. 4..6 or 5");
  tab->add_flag("--check", tab_check, "compare regenerated rows against the embedded fixture");
  tab->add_flag("--json", tab_json, "newline-delimited records");
  tab->add_flag("--csv", tab_csv, "CSV rows");
  tab->add_option("--out", out_path, "write to file instead of stdout");

  // search
  auto* sea = app.add_subcommand("search", "group G(m,n) vectors by exact (r, q)");
  int sea_n_max = 0, sea_m = 2;
  bool sea_all = false;
  sea->add_option("--n-max", sea_n_max, "largest ambient dimension")->required();
  sea->add_option("--m", sea_m, "rank (default 2)");
  sea->add_flag("--all", sea_all, "include single-member groups");
  sea->add_option("--out", out_path, "write to file instead of stdout");

  // scan-nki
  auto* nki = app.add_subcommand("scan-nki", "integral dimensions where adjacent and wide pairs share (r, q)");
  long long nki_k_max = 12;
  long long nki_i_max = -1;
  nki->add_option("--k-max", nki_k_max, "largest wide-pair start index (default 12)");
  nki->add_option("--i-max", nki_i_max, "largest adjacent start index (default 2k(1+k))");
  nki->add_option("--out", out_path, "write to file instead of stdout");

  // verify
  auto* ver = app.add_subcommand("verify", "finite-difference check against exact invariants");
  bool ver_veronese = false;
  int ver_n = 0, ver_n_max = 0, ver_samples = 5;
  std::vector<int> ver_grid;
  double ver_tol = 1e-5, ver_h = 1e-3;
  bool ver_rich = true, ver_json = false;
  std::uint64_t ver_seed = 421;
  ver->set_help_flag("--help", "print help");
  ver->add_flag("--veronese", ver_veronese, "verify tower-built solutions");
  ver->add_option("--n", ver_n, "ambient dimension (with --grid)");
  ver->add_option("--grid", ver_grid, "occupied indices")->delimiter(',');
  ver->add_option("--n-max", ver_n_max, "sweep every vector with n <= n-max");
  ver->add_option("--tol", ver_tol, "residual tolerance (default 1e-5)");
  ver->add_option("--h", ver_h, "finite-difference step (default 1e-3)");
  ver->add_flag("--richardson,!--plain", ver_rich,
                "refine stencils by step halving (default on; --plain disables)");
  ver->add_option("--seed", ver_seed, "sample-point seed");
  ver->add_option("--samples", ver_samples, "points per solution (default 5)");
  ver->add_flag("--json", ver_json, "newline-delimited records");
  ver->add_option("--out", out_path, "write to file instead of stdout");

  // nonveronese
  auto* g25 = app.add_subcommand("nonveronese", "check the two rank-2 frames in C^5");
  int g25_samples = 25;
  double g25_tol = 1e-6, g25_kappa_tol = 1e-4, g25_h = 1e-3;
  bool g25_rich = true, g25_json = false;
  std::uint64_t g25_seed = 421;
  g25->set_help_flag("--help", "print help");
  g25->add_option("--samples", g25_samples, "sample points (default 25)");
  g25->add_option("--tol", g25_tol, "mean-curvature ratio tolerance (default 1e-6)");
  g25->add_option("--kappa-tol", g25_kappa_tol, "gaussian curvature tolerance (default 1e-4)");
  g25->add_option("--h", g25_h, "finite-difference step (default 1e-3)");
  g25->add_flag("--richardson,!--plain", g25_rich,
                "refine stencils by step halving (default on; --plain disables)");
  g25->add_option("--seed", g25_seed, "sample-point seed");
  g25->add_flag("--json", g25_json, "newline-delimited records");
  g25->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  OutputSink sink;
  if (!out_path.empty()) sink.path = out_path;

  try {
    if (inv->parsed()) return cmd_invariants(inv_n, inv_grid, inv_all, inv_m, inv_json, inv_csv, sink);
    if (tab->parsed()) return cmd_table(tab_range, tab_check, tab_json, tab_csv, sink);
    if (sea->parsed()) return cmd_search(sea_n_max, sea_m, sea_all, sink);
    if (nki->parsed()) {
      if (nki_i_max < 0) nki_i_max = sigsurf::default_i_max(nki_k_max);
      return cmd_scan_nki(nki_k_max, nki_i_max, sink);
    }
    if (ver->parsed()) {
      if (!ver_veronese) throw CLI::ValidationError("verify", "pass --veronese");
      return cmd_verify(ver_n, ver_grid, ver_n_max, ver_tol, ver_h, ver_rich, ver_seed,
                        ver_samples, ver_json, sink);
    }
    if (g25->parsed()) {
      return cmd_nonveronese(g25_samples, g25_tol, g25_kappa_tol, g25_h, g25_rich, g25_seed,
                             g25_json, sink);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
