#ifndef KLINV_VERIFY_HPP
#define KLINV_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "klinv/kl.hpp"
#include "klinv/permutation.hpp"

namespace klinv {

struct VerificationFailure {
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
  friend auto operator<=>(const VerificationFailure&, const VerificationFailure&) = default;
};

/// Outcome of one batch check. Failures are kept sorted, and the report is
/// deterministic for fixed ranges and seeds apart from |millis|.
struct VerificationReport {
  std::string check;
  std::string range;
  std::int64_t cases = 0;
  std::vector<VerificationFailure> failures;
  std::optional<std::uint64_t> seed;
  std::int64_t millis = 0;
  /// Free-form observations (counts, ratios) that are not pass/fail.
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
  std::string to_table() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct VerifyOptions {
  /// Worker threads; 0 or 1 runs the serial reference loop.
  int threads = 0;
  /// Truncates the case list (after seeding, so the prefix is stable).
  std::optional<std::int64_t> max_cases;
  std::uint64_t seed = kDefaultSeed;
};

/// KL_ENGINE_THREADS, or 0 when unset or unparsable.
int threads_from_environment();

/// P_{x,w} against the regular closed forms for both pair types with
/// family size <= max_n, including P_{z,top} = 1 on the interval interior.
VerificationReport verify_theorem_regular(int max_n, KLCache& cache,
                                          const VerifyOptions& options = {});

/// P_{w0 w, w0 x} against the inverse closed forms, same ranges.
VerificationReport verify_theorem_inverse(int max_n, KLCache& cache,
                                          const VerifyOptions& options = {});

/// Inversion identity on every comparable pair of S_n for n <= 5; larger n
/// falls back to 500 seeded samples.
VerificationReport verify_inversion_exhaustive(int n, KLCache& cache,
                                               const VerifyOptions& options = {});
VerificationReport verify_inversion_sampled(int n, int samples, KLCache& cache,
                                            const VerifyOptions& options = {});

/// Pattern criterion against "P_{x,w} = 1 for all x <= w" on all of S_n.
VerificationReport verify_smoothness_equivalence(int n, KLCache& cache,
                                                 const VerifyOptions& options = {});

/// Linear coefficient of the inverse closed form at k = m against the
/// coatom bound, for 2 <= k <= k_max.
VerificationReport verify_brenti_bound(int k_max, KLCache& cache,
                                       const VerifyOptions& options = {});

/// P on seeded comparable pairs of S_n against P on their flattened pairs.
VerificationReport verify_flattening_invariance(int n, int samples, KLCache& cache,
                                                const VerifyOptions& options = {});

/// Largest-descent recursion (|cache| must use it) against a fresh
/// smallest-descent recursion on seeded comparable pairs of S_n.
VerificationReport verify_descent_independence(int n, int samples, KLCache& cache,
                                               const VerifyOptions& options = {});

/// Inverse closed forms against eq31_reconstruct on both pair types.
VerificationReport verify_eq31(int max_n, KLCache& cache, const VerifyOptions& options = {});

VerificationReport verify_lemma_tech1(int k_min, int k_max);
VerificationReport verify_lemma_tech2(int k_min, int k_max);

/// Seeded uniform pairs (x, w) of S_n with x <= w, by rejection.
std::vector<std::pair<Permutation, Permutation>> sample_comparable_pairs(int n, int count,
                                                                         std::uint64_t seed);

} // namespace klinv

#endif
