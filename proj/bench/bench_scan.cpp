// Serial reference vs OpenMP scan kernels, plus the three product methods.
//
//   orbitfusion_bench [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "orbitfusion/orbit_product.hpp"
#include "orbitfusion/verifier.hpp"

using namespace orbitfusion;

namespace {

double seconds_of(const std::function<void()>& fn, int repeats = 3) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : 0;

  struct Case {
    ScanKind kind;
    int modulus;
    int k_max;
  };
  const Case cases[] = {
      {ScanKind::multiplicity_free, 5, 8},
      {ScanKind::orbit_monotone, 5, 7},
      {ScanKind::orbit_fusion_equality, 4, 6},
      {ScanKind::fusion_monotone, 4, 5},
      {ScanKind::algorithm_equivalence, 3, 6},
  };

  std::printf("%-24s %3s %4s %12s %12s %8s  (threads=%d)\n", "scan", "N", "kmax", "serial [s]",
              "omp [s]", "speedup", resolve_threads(ScanSpec{.threads = threads}));
  for (const auto& c : cases) {
    ScanSpec spec;
    spec.kind = c.kind;
    spec.modulus = c.modulus;
    spec.k_max = c.k_max;
    spec.threads = threads;
    Report serial, parallel;
    const double ts = seconds_of([&] { serial = run_scan_serial(spec); });
    const double tp = seconds_of([&] { parallel = run_scan(spec); });
    const bool same = serial.proven == parallel.proven;
    std::printf("%-24s %3d %4d %12.4f %12.4f %8.2f%s\n", std::string(to_string(c.kind)).c_str(),
                c.modulus, c.k_max, ts, tp, ts / tp, same ? "" : "  MISMATCH");
  }

  std::printf("\n%-12s %12s  product of all label pairs, N=3 k=5\n", "method", "time [s]");
  const auto labels = enumerate_labels(Params(3, 5));
  for (auto m : {Method::definition, Method::list, Method::blockwise}) {
    const double t = seconds_of([&] {
      for (const auto& a : labels)
        for (const auto& b : labels) (void)product(a, b, m);
    }, 1);
    std::printf("%-12s %12.4f\n", std::string(to_string(m)).c_str(), t);
  }
  return 0;
}
