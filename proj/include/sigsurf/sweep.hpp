#pragma once

#include <cstdint>
#include <vector>

#include "sigsurf/invariants.hpp"
#include "sigsurf/numeric.hpp"

namespace sigsurf {

// Seeded sample points in the annulus radius_min <= |x| <= radius_max
// (bounded away from 0 to avoid clustering).  Points where the field
// cannot be evaluated are rejected and redrawn.
struct SamplePlan {
  std::uint64_t seed = 421;
  int count = 5;
  double radius_min = 0.3;
  double radius_max = 2.0;
};

std::vector<Complex> sample_points(const ProjectorField& field, const SamplePlan& plan);

// Deterministic per-task seed stream.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

// Worst deviation between finite-difference estimates and the exact record,
// over the sampled points.  Each residual is |numeric - exact| scaled by
// max(1, |exact|).
struct OracleCheck {
  double resid_r = 0.0;
  double resid_q = 0.0;
  double resid_kappa = 0.0;
  double resid_h2 = 0.0;
  double worst() const;
};

OracleCheck check_veronese_beta(const BetaVector& beta, const SamplePlan& plan,
                                const DiffParams& diff);

struct SweepReport {
  int n = 0;
  int m = 0;
  GridLabel grid;
  OracleCheck check;
  bool pass = false;
};

struct SweepParams {
  double tol = 1e-5;
  // Refinement on by default: plain h = 1e-3 stencils leave residuals right
  // at the 1e-5 tolerance, so unrefined sweeps would flicker.
  DiffParams diff{1e-3, true};
  SamplePlan plan;  // per-beta point sets derive from plan.seed
};

// Checks every occupation vector with 2 <= n <= n_max against the exact
// invariants.  The serial version is the reference; oracle_sweep distributes
// the same task list over OpenMP threads and writes into the same slots, so
// the two agree exactly.
std::vector<SweepReport> oracle_sweep_serial(int n_max, const SweepParams& params);
std::vector<SweepReport> oracle_sweep(int n_max, const SweepParams& params);

}  // namespace sigsurf
