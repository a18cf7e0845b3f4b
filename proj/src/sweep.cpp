#include "sigsurf/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sigsurf/errors.hpp"

namespace sigsurf {

namespace {

double scaled_gap(double numeric, double exact) {
  return std::abs(numeric - exact) / std::max(1.0, std::abs(exact));
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 over the packed identifiers
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Complex> sample_points(const ProjectorField& field, const SamplePlan& plan) {
  if (plan.count < 1) throw std::invalid_argument("sample_points: count must be >= 1");
  if (!(plan.radius_min >= 0.0) || !(plan.radius_max > plan.radius_min)) {
    throw std::invalid_argument("sample_points: bad annulus radii");
  }
  std::mt19937_64 rng(plan.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> points;
  points.reserve(static_cast<std::size_t>(plan.count));
  int attempts = 0;
  const int attempt_cap = 1000 * plan.count;
  while (static_cast<int>(points.size()) < plan.count) {
    if (++attempts > attempt_cap) {
      throw singular_point_error("sample_points: could not find enough regular points");
    }
    const double radius = plan.radius_min + (plan.radius_max - plan.radius_min) * unit(rng);
    const double angle = 2.0 * M_PI * unit(rng);
    const Complex x(radius * std::cos(angle), radius * std::sin(angle));
    try {
      (void)field.eval(x);
    } catch (const singular_point_error&) {
      continue;
    }
    points.push_back(x);
  }
  return points;
}

double OracleCheck::worst() const {
  return std::max(std::max(resid_r, resid_q), std::max(resid_kappa, resid_h2));
}

OracleCheck check_veronese_beta(const BetaVector& beta, const SamplePlan& plan,
                                const DiffParams& diff) {
  const InvariantRecord exact = beta_invariants(beta);
  const double exact_r = to_double(exact.r);
  const double exact_q = exact.q.get_d();
  const double exact_kappa = to_double(exact.kappa);
  const double exact_h2 = to_double(exact.h2);

  VeroneseBetaField field(veronese_curve(beta.n()), beta);
  const std::vector<Complex> points = sample_points(field, plan);

  OracleCheck check;
  for (const Complex x : points) {
    const double weight = 2.0 * std::pow(1.0 + std::norm(x), 2);
    const double r_num = weight * lagrangian_density(field, x, diff);
    const double q_num = weight * topological_density(field, x, diff);
    const double kappa_num = gaussian_curvature(field, x, diff);
    const double h2_num = mean_curvature_sq(field, x, diff);
    check.resid_r = std::max(check.resid_r, scaled_gap(r_num, exact_r));
    check.resid_q = std::max(check.resid_q, scaled_gap(q_num, exact_q));
    check.resid_kappa = std::max(check.resid_kappa, scaled_gap(kappa_num, exact_kappa));
    check.resid_h2 = std::max(check.resid_h2, scaled_gap(h2_num, exact_h2));
  }
  return check;
}

namespace {

std::vector<SweepReport> sweep_tasks(int n_max) {
  if (n_max < 2) throw std::invalid_argument("oracle_sweep: need n_max >= 2");
  std::vector<SweepReport> tasks;
  for (int n = 2; n <= n_max; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      for_each_beta(n, m, false, [&](const BetaVector& beta) {
        SweepReport report;
        report.n = n;
        report.m = m;
        report.grid = beta.grid();
        tasks.push_back(std::move(report));
      });
    }
  }
  return tasks;
}

void run_task(SweepReport& report, const SweepParams& params) {
  const BetaVector beta = BetaVector::from_grid(report.n, report.grid);
  SamplePlan plan = params.plan;
  std::uint64_t key = static_cast<std::uint64_t>(report.n);
  for (int idx : report.grid) key = mix_seed(key, static_cast<std::uint64_t>(idx) + 17, 29);
  plan.seed = mix_seed(params.plan.seed, key, static_cast<std::uint64_t>(report.m));
  report.check = check_veronese_beta(beta, plan, params.diff);
  report.pass = report.check.worst() <= params.tol;
}

}  // namespace

std::vector<SweepReport> oracle_sweep_serial(int n_max, const SweepParams& params) {
  std::vector<SweepReport> tasks = sweep_tasks(n_max);
  for (auto& task : tasks) run_task(task, params);
  return tasks;
}

std::vector<SweepReport> oracle_sweep(int n_max, const SweepParams& params) {
  std::vector<SweepReport> tasks = sweep_tasks(n_max);
  const int total = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < total; ++idx) {
    run_task(tasks[static_cast<std::size_t>(idx)], params);
  }
  return tasks;
}

}  // namespace sigsurf
