// Timing comparison between the serial reference implementations and the
// OpenMP kernels: exact (r, q) grouping and the finite-difference sweep.
// --quick shrinks the workloads for use as a smoke test.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include <sigsurf/coincidence.hpp>
#include <sigsurf/sweep.hpp>
#include <sigsurf/threads.hpp>

using namespace sigsurf;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r == 0 || elapsed < best) best = elapsed;
  }
  return best;
}

void row(const std::string& name, double serial, double parallel) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name.c_str(), serial * 1e3, parallel * 1e3,
              parallel > 0.0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      quick = true;
      reps = 1;
    } else if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) {
      reps = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--reps N]\n", argv[0]);
      return 2;
    }
  }

  apply_thread_cap();
  std::printf("threads: %d\n", effective_threads());
  std::printf("%-28s %13s %13s %9s\n", "task", "serial", "parallel", "speedup");

  struct GroupCase {
    int n;
    int m;
  };
  const std::vector<GroupCase> group_cases =
      quick ? std::vector<GroupCase>{{60, 2}, {20, 3}}
            : std::vector<GroupCase>{{120, 2}, {40, 3}, {26, 4}};

  for (const GroupCase& c : group_cases) {
    std::size_t check_serial = 0;
    std::size_t check_parallel = 0;
    const double serial =
        best_of(reps, [&] { check_serial = coincidences_serial(c.n, c.m).size(); });
    const double parallel = best_of(reps, [&] { check_parallel = coincidences(c.n, c.m).size(); });
    if (check_serial != check_parallel) {
      std::fprintf(stderr, "group count mismatch for n=%d m=%d\n", c.n, c.m);
      return 1;
    }
    char name[64];
    std::snprintf(name, sizeof name, "group G(%d,%d)", c.m, c.n);
    row(name, serial, parallel);
  }

  SweepParams params;
  params.plan.count = quick ? 3 : 5;
  const int n_max = quick ? 5 : 7;
  std::size_t passed_serial = 0;
  std::size_t passed_parallel = 0;
  const double serial_sweep = best_of(reps, [&] {
    passed_serial = 0;
    for (const SweepReport& rep : oracle_sweep_serial(n_max, params)) {
      if (rep.pass) ++passed_serial;
    }
  });
  const double parallel_sweep = best_of(reps, [&] {
    passed_parallel = 0;
    for (const SweepReport& rep : oracle_sweep(n_max, params)) {
      if (rep.pass) ++passed_parallel;
    }
  });
  if (passed_serial != passed_parallel) {
    std::fprintf(stderr, "sweep outcome mismatch\n");
    return 1;
  }
  char name[64];
  std::snprintf(name, sizeof name, "oracle sweep n<=%d", n_max);
  row(name, serial_sweep, parallel_sweep);
  return 0;
}
