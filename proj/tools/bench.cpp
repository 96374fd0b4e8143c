// Benchmark of the point-scan kernels: OpenMP against the serial reference.

#include <chrono>
#include <cstdio>

#include "quiverhk/catalog.hpp"
#include "quiverhk/monad_p2.hpp"
#include "quiverhk/parallel.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& f) {
  const auto t0 = Clock::now();
  f();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int points = argc > 1 ? std::atoi(argv[1]) : 4000;
  const auto pts = qhk::sample_points(points, 0);

  const qhk::CatalogEntry entries[] = {qhk::build_c_example(2), qhk::build_bd_example(1),
                                       qhk::build_symplectic(1, 2, 0)};

  // warm up the thread pool and caches before timing
  qhk::scan_beta_ranks(entries[0].x, qhk::sample_points(64, 1));

  std::printf("%-14s %-10s %10s %10s %8s\n", "kernel", "entry", "serial/ms", "omp/ms",
              "speedup");
  for (const auto& entry : entries) {
    std::vector<int> serial, parallel;
    const double ts =
        time_ms([&] { serial = qhk::scan_beta_ranks_serial(entry.x, pts); });
    qhk::set_parallel_enabled(true);
    const double tp = time_ms([&] { parallel = qhk::scan_beta_ranks(entry.x, pts); });
    const bool same = serial == parallel;
    std::printf("%-14s %-10s %10.1f %10.1f %7.2fx%s\n", "beta_ranks", entry.name.c_str(),
                ts, tp, ts / tp, same ? "" : "  MISMATCH");

    const double fs =
        time_ms([&] { serial = qhk::scan_fiber_dims_serial(entry.x, pts); });
    const double fp = time_ms([&] { parallel = qhk::scan_fiber_dims(entry.x, pts); });
    const bool fsame = serial == parallel;
    std::printf("%-14s %-10s %10.1f %10.1f %7.2fx%s\n", "fiber_dims", entry.name.c_str(),
                fs, fp, fs / fp, fsame ? "" : "  MISMATCH");
  }
  return 0;
}
