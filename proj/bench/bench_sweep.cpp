// Serial reference vs OpenMP kernels on the two hot paths: the subset sweep
// of the verifier and the <H, g> interval sweep of the permutation oracle.
// Usage: bench_sweep [repetitions]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chv/permgroup.hpp"
#include "chv/verifier.hpp"

using namespace chv;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Timing {
  double serial = 0, parallel = 0;
};

// one full pipeline pass: emit every verdict, then re-validate every
// certificate from raw arithmetic
std::size_t verify_and_check(const MarkedDiagram& d, const BigInt& q, bool parallel) {
  auto report = verify_all(d, q, parallel ? RunMode::parallel : RunMode::serial);
  const auto& verdicts = report.verdicts;
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok) if (parallel)
  for (long long i = 0; i < static_cast<long long>(verdicts.size()); ++i)
    ok = ok && check_certificate(verdicts[static_cast<std::size_t>(i)]).ok;
  if (!ok) {
    std::fprintf(stderr, "certificate re-validation failed during benchmark\n");
    std::exit(1);
  }
  return verdicts.size();
}

Timing bench_verifier(int reps) {
  Timing t;
  struct Case {
    Family f;
    int rank;
    long long q;
  } cases[] = {{Family::B, 12, 9}, {Family::D, 12, 5}, {Family::E, 8, 128}};
  std::size_t serial_verdicts = 0, parallel_verdicts = 0;
  for (int rep = 0; rep < reps; ++rep) {
    for (const auto& c : cases) {
      auto d = standard_diagram(make_type(c.f, c.rank));
      auto t0 = std::chrono::steady_clock::now();
      serial_verdicts += verify_and_check(d, BigInt(c.q), false);
      t.serial += seconds_since(t0);

      t0 = std::chrono::steady_clock::now();
      parallel_verdicts += verify_and_check(d, BigInt(c.q), true);
      t.parallel += seconds_since(t0);
    }
  }
  if (serial_verdicts != parallel_verdicts) {
    std::fprintf(stderr, "serial and parallel sweeps disagree\n");
    std::exit(1);
  }
  std::printf("  verifier pipeline (emit + re-validate): %zu verdicts per pass\n",
              serial_verdicts / reps);
  return t;
}

Timing bench_interval(int reps) {
  Timing t;
  // the (C7, A7) interval: 2513 cosets to sweep, a few intermediates
  auto G = closure(std::vector<Perm>{Perm::from_cycles(7, {{1, 2, 3}}),
                                     Perm::from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}})});
  auto H = closure(std::vector<Perm>{Perm::from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}})});
  std::size_t serial_atoms = 0, parallel_atoms = 0;
  for (int rep = 0; rep < reps; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    serial_atoms += interval_atoms(H, G, /*parallel=*/false).size();
    t.serial += seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    parallel_atoms += interval_atoms(H, G, /*parallel=*/true).size();
    t.parallel += seconds_since(t0);
  }
  if (serial_atoms != parallel_atoms) {
    std::fprintf(stderr, "serial and parallel interval sweeps disagree\n");
    std::exit(1);
  }
  std::printf("  interval <H,g> sweep: %zu atoms per pass over %zu cosets\n",
              serial_atoms / reps, G.order() - H.order());
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 1;
  if (reps < 1) reps = 1;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif

  std::printf("verifier sweep (B12 q=9, D12 q=5, E8 q=128), %d rep(s):\n", reps);
  Timing tv = bench_verifier(reps);
  std::printf("  serial   %8.3f s\n  parallel %8.3f s\n  speedup  %8.2fx\n", tv.serial,
              tv.parallel, tv.serial / tv.parallel);

  std::printf("interval sweep (the (C7, A7) interval), %d rep(s):\n", reps);
  Timing ti = bench_interval(reps);
  std::printf("  serial   %8.3f s\n  parallel %8.3f s\n  speedup  %8.2fx\n", ti.serial,
              ti.parallel, ti.serial / ti.parallel);
  return 0;
}
