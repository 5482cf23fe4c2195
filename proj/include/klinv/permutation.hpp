#ifndef KLINV_PERMUTATION_HPP
#define KLINV_PERMUTATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klinv {

/// Largest supported size. Keys pack one nibble per entry into 64 bits.
inline constexpr int kMaxPermutationSize = 16;

/*
  A permutation of {1,...,n} stored in one-line notation [w(1),...,w(n)].

  Values are immutable after construction; every operation returns a new
  permutation. Positions and values are 1-based, as in the mathematics.

  Composition convention: compose(u, v) maps i to u(v(i)). Right
  multiplication by a transposition therefore swaps positions, and left
  multiplication by the longest element complements values.
*/
class Permutation {
public:
  /// Validates that |values| is a bijection of {1,...,n}.
  static Permutation from_oneline(std::span<const int> values);
  static Permutation from_oneline(std::initializer_list<int> values)
  {
    return from_oneline(std::span<const int>(values.begin(), values.size()));
  }

  static Permutation identity(int n);
  static Permutation longest_element(int n);

  int size() const { return size_; }

  /// w(i) for 1 <= i <= n; unchecked.
  int operator()(int i) const { return entries_[i - 1]; }
  int at(int i) const;

  std::vector<int> oneline() const;

  /// Positions i and j exchanged (w * t_{i,j}); indices are not checked.
  Permutation swapped_positions(int i, int j) const
  {
    Permutation out = *this;
    std::swap(out.entries_[i - 1], out.entries_[j - 1]);
    return out;
  }

  /// Packed 4-bit-per-entry key; unique among permutations of the same size.
  std::uint64_t key() const;

  friend bool operator==(const Permutation& a, const Permutation& b)
  {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }
  /// Lexicographic on one-line notation (shorter sizes first).
  friend bool operator<(const Permutation& a, const Permutation& b);

private:
  Permutation() = default;

  std::array<std::uint8_t, kMaxPermutationSize> entries_{};
  std::uint8_t size_ = 0;
};

Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

/// w * t_{i,j}: positions i and j swapped. Requires 1 <= i < j <= n.
Permutation right_multiply_transposition(const Permutation& w, int i, int j);
/// w * s_i, i.e. positions i and i+1 swapped.
Permutation right_multiply_simple(const Permutation& w, int i);
/// s_i * w, i.e. values i and i+1 swapped.
Permutation left_multiply_simple(const Permutation& w, int i);

/// Number of inversions.
int length(const Permutation& w);

/// 1 iff w(i) > w(i+1).
int descent_indicator(const Permutation& x, int i);
/// 1 iff i+1 appears before i in one-line notation (s_i x < x).
int left_descent_indicator(const Permutation& x, int i);

/// Order-isomorphic relabelling of distinct integers to a permutation.
Permutation flatten(std::span<const int> values);

bool avoids_pattern(const Permutation& w, const Permutation& pattern);

/// Lexicographically smallest increasing index list (1-based) whose
/// values flatten to |pattern|, or nullopt when w avoids it.
std::optional<std::vector<int>> find_pattern_instance(const Permutation& w,
                                                      const Permutation& pattern);

/// Specialized O(n^2)-per-anchor scans for the two smoothness patterns.
bool contains_3412(const Permutation& w);
bool contains_4231(const Permutation& w);

/// All of S_n in lexicographic order. Intended for n <= 8.
std::vector<Permutation> all_permutations(int n);

/// Accepts "4,2,3,1" and, for n <= 9, the compact "4231".
Permutation parse_permutation(std::string_view text);
/// Always the comma form.
std::string to_string(const Permutation& w);

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept
  {
    return std::hash<std::uint64_t>{}(w.key() * 31u + static_cast<std::uint64_t>(w.size()));
  }
};

} // namespace klinv

#endif
