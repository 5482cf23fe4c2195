#ifndef KLINV_KL_HPP
#define KLINV_KL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klinv/permutation.hpp"
#include "klinv/polynomial.hpp"

namespace klinv {

/// Which right descent s of w drives the recursion step.
enum class DescentChoice { Largest, Smallest };

struct KLCacheOptions {
  DescentChoice descent = DescentChoice::Largest;
  /// 0 means unbounded. When full, an arbitrary entry is evicted; evicted
  /// values are recomputed on demand.
  std::size_t max_entries = 0;
  /// Before recursing, raise x along every left and right descent of w that
  /// x lacks (P_{x,w} = P_{xs,w} = P_{sx,w} there). With this off the
  /// recursion runs on the literal pair, which is only practical for n <= 5.
  bool raise_to_extremal = true;
};

struct KLCacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t evictions = 0;
};

/// (z, mu(z, v)) for every z < v with non-zero mu.
struct MuEntry {
  Permutation element;
  std::int64_t mu;
};
using MuRow = std::vector<MuEntry>;

/*
  Memo table for KL polynomials keyed on ordered pairs (x, w) of the same
  size, plus one row of non-zero mu-values per top element.

  A cache is not thread-safe: give each thread its own (the verify module
  does). Because every stored value for a key equals the true polynomial,
  results never depend on what is or was cached.
*/
class KLCache {
public:
  explicit KLCache(KLCacheOptions options = {}) : options_(options) {}

  const KLCacheOptions& options() const { return options_; }
  const KLCacheStats& stats() const { return stats_; }
  std::size_t size() const { return memo_.size(); }
  void clear();

  /// Counts a hit or a miss.
  std::optional<IntPolynomial> find(const Permutation& x, const Permutation& w);
  void insert(const Permutation& x, const Permutation& w, IntPolynomial value);

  std::shared_ptr<const MuRow> find_mu_row(const Permutation& v) const;
  void insert_mu_row(const Permutation& v, std::shared_ptr<const MuRow> row);

private:
  struct PairKey {
    std::uint64_t bottom;
    std::uint64_t top;
    int size;
    friend bool operator==(const PairKey&, const PairKey&) = default;
  };
  struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept
    {
      std::uint64_t h = k.bottom * 0x9E3779B97F4A7C15ull;
      h ^= k.top + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(k.size));
    }
  };
  struct TopKeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, int>& k) const noexcept
    {
      return static_cast<std::size_t>(k.first * 0x9E3779B97F4A7C15ull) ^
             static_cast<std::size_t>(k.second);
    }
  };

  KLCacheOptions options_;
  KLCacheStats stats_;
  std::unordered_map<PairKey, IntPolynomial, PairKeyHash> memo_;
  std::unordered_map<std::pair<std::uint64_t, int>, std::shared_ptr<const MuRow>, TopKeyHash>
      mu_rows_;
};

/// The Kazhdan-Lusztig polynomial P_{x,w}.
IntPolynomial kl_polynomial(const Permutation& x, const Permutation& w, KLCache& cache);

/// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; 0 when that exponent is
/// not a non-negative integer or x is not below w.
std::int64_t mu(const Permutation& x, const Permutation& w, KLCache& cache);

/// All z < v with mu(z, v) != 0.
std::shared_ptr<const MuRow> mu_row(const Permutation& v, KLCache& cache);

/// P_{w0 w, w0 x}.
IntPolynomial inverse_kl(const Permutation& x, const Permutation& w, KLCache& cache);

/// Sum over z in [x, w] of (-1)^{l(z)+l(w)} P_{z,w} P_{w0 z, w0 x}.
/// Requires x <= w.
IntPolynomial inversion_sum(const Permutation& x, const Permutation& w, KLCache& cache);
/// inversion_sum(x, w) equals the Kronecker delta.
bool verify_inversion_identity(const Permutation& x, const Permutation& w, KLCache& cache);

/// Sorted 1-based positions i with x(i) != w(i) or d_{x,w}(i, x(i)) != 0.
std::vector<int> delta_set(const Permutation& x, const Permutation& w);

/// Flattens x and w onto delta_set(x, w). An empty delta set yields the
/// pair (identity(1), identity(1)).
std::pair<Permutation, Permutation> tilde_reduce(const Permutation& x, const Permutation& w);

/// w avoids both 3412 and 4231.
bool is_smooth_top(const Permutation& w);

/// For every left or right descent s of w, P_{x,w} agrees with P_{xs,w}
/// (resp. P_{sx,w}). Requires x <= w.
bool descent_reduction_check(const Permutation& x, const Permutation& w, KLCache& cache);

} // namespace klinv

#endif
