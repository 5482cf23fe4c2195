// Times the serial reference loop against the OpenMP loop for a few verify
// checks. Usage: klinv_bench [threads] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "klinv/verify.hpp"

using namespace klinv;

namespace {

using Check = std::function<VerificationReport(KLCache&, const VerifyOptions&)>;

double best_millis(const Check& check, int threads, int repeats, bool& passed)
{
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    // Fresh cache per run so each timing includes the recursion itself.
    KLCache cache;
    VerifyOptions options;
    options.threads = threads;
    const auto start = std::chrono::steady_clock::now();
    const auto report = check(cache, options);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    passed = passed && report.passed();
    best = std::min(best, ms);
  }
  return best;
}

} // namespace

int main(int argc, char** argv)
{
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  const std::vector<std::pair<std::string, Check>> checks{
      {"theorem-regular n<=8",
       [](KLCache& c, const VerifyOptions& o) { return verify_theorem_regular(8, c, o); }},
      {"inversion S_5",
       [](KLCache& c, const VerifyOptions& o) { return verify_inversion_exhaustive(5, c, o); }},
      {"smoothness S_6",
       [](KLCache& c, const VerifyOptions& o) { return verify_smoothness_equivalence(6, c, o); }},
      {"flattening S_7 x500",
       [](KLCache& c, const VerifyOptions& o) { return verify_flattening_invariance(7, 500, c, o); }},
      {"descent choice S_7 x200",
       [](KLCache& c, const VerifyOptions& o) { return verify_descent_independence(7, 200, c, o); }},
  };

  std::printf("%-26s %12s %12s %8s\n", "check", "serial ms", "parallel ms", "speedup");
  bool passed = true;
  for (const auto& [name, check] : checks) {
    const double serial = best_millis(check, 1, repeats, passed);
    const double parallel = best_millis(check, threads, repeats, passed);
    std::printf("%-26s %12.1f %12.1f %7.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
  }
  std::printf("threads %d, best of %d%s\n", threads, repeats, passed ? "" : ", SOME CHECKS FAILED");
  return passed ? 0 : 1;
}
