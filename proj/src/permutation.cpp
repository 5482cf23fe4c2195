#include "klinv/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klinv {

namespace {

void check_size(int n)
{
  if (n < 1 || n > kMaxPermutationSize)
    throw std::invalid_argument("permutation size must be in 1.." +
                                std::to_string(kMaxPermutationSize) + ", got " +
                                std::to_string(n));
}

void check_same_size(const Permutation& u, const Permutation& v)
{
  if (u.size() != v.size())
    throw std::invalid_argument("size mismatch: " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
}

} // namespace

Permutation Permutation::from_oneline(std::span<const int> values)
{
  const int n = static_cast<int>(values.size());
  check_size(n);
  std::array<bool, kMaxPermutationSize + 1> seen{};
  Permutation w;
  w.size_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int v = values[i];
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[v] = true;
    w.entries_[i] = static_cast<std::uint8_t>(v);
  }
  return w;
}

Permutation Permutation::identity(int n)
{
  check_size(n);
  Permutation w;
  w.size_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i)
    w.entries_[i] = static_cast<std::uint8_t>(i + 1);
  return w;
}

Permutation Permutation::longest_element(int n)
{
  check_size(n);
  Permutation w;
  w.size_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i)
    w.entries_[i] = static_cast<std::uint8_t>(n - i);
  return w;
}

int Permutation::at(int i) const
{
  if (i < 1 || i > size_)
    throw std::out_of_range("position " + std::to_string(i) + " out of range 1.." +
                            std::to_string(size_));
  return entries_[i - 1];
}

std::vector<int> Permutation::oneline() const
{
  return {entries_.begin(), entries_.begin() + size_};
}

std::uint64_t Permutation::key() const
{
  std::uint64_t k = 0;
  for (int i = 0; i < size_; ++i)
    k |= static_cast<std::uint64_t>(entries_[i] - 1) << (4 * i);
  return k;
}

bool operator<(const Permutation& a, const Permutation& b)
{
  if (a.size_ != b.size_)
    return a.size_ < b.size_;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.begin() + a.size_,
                                      b.entries_.begin(), b.entries_.begin() + b.size_);
}

Permutation compose(const Permutation& u, const Permutation& v)
{
  check_same_size(u, v);
  std::vector<int> out(u.size());
  for (int i = 1; i <= u.size(); ++i)
    out[i - 1] = u(v(i));
  return Permutation::from_oneline(out);
}

Permutation inverse(const Permutation& w)
{
  std::vector<int> out(w.size());
  for (int i = 1; i <= w.size(); ++i)
    out[w(i) - 1] = i;
  return Permutation::from_oneline(out);
}

Permutation right_multiply_transposition(const Permutation& w, int i, int j)
{
  if (i < 1 || j > w.size() || i >= j)
    throw std::out_of_range("transposition (" + std::to_string(i) + "," + std::to_string(j) +
                            ") invalid for size " + std::to_string(w.size()));
  return w.swapped_positions(i, j);
}

Permutation right_multiply_simple(const Permutation& w, int i)
{
  return right_multiply_transposition(w, i, i + 1);
}

Permutation left_multiply_simple(const Permutation& w, int i)
{
  if (i < 1 || i >= w.size())
    throw std::out_of_range("simple reflection index " + std::to_string(i) +
                            " invalid for size " + std::to_string(w.size()));
  std::vector<int> out = w.oneline();
  for (int& v : out) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation::from_oneline(out);
}

int length(const Permutation& w)
{
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      inversions += w(i) > w(j);
  return inversions;
}

int descent_indicator(const Permutation& x, int i)
{
  if (i < 1 || i >= x.size())
    throw std::out_of_range("descent index " + std::to_string(i) + " invalid for size " +
                            std::to_string(x.size()));
  return x(i) > x(i + 1) ? 1 : 0;
}

int left_descent_indicator(const Permutation& x, int i)
{
  if (i < 1 || i >= x.size())
    throw std::out_of_range("descent index " + std::to_string(i) + " invalid for size " +
                            std::to_string(x.size()));
  for (int p = 1; p <= x.size(); ++p) {
    if (x(p) == i)
      return 0;
    if (x(p) == i + 1)
      return 1;
  }
  return 0;
}

Permutation flatten(std::span<const int> values)
{
  const int k = static_cast<int>(values.size());
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  for (int r = 1; r < k; ++r)
    if (values[order[r]] == values[order[r - 1]])
      throw std::invalid_argument("flatten: duplicate value " +
                                  std::to_string(values[order[r]]));
  std::vector<int> ranks(k);
  for (int r = 0; r < k; ++r)
    ranks[order[r]] = r + 1;
  return Permutation::from_oneline(ranks);
}

namespace {

// Depth-first search over increasing index lists in lexicographic order.
// Each chosen index must have the same relative order against every earlier
// choice as the pattern does, so the first complete list is the smallest
// witness.
bool extend_instance(const Permutation& w, const Permutation& pattern, int next_position,
                     std::vector<int>& chosen)
{
  const int depth = static_cast<int>(chosen.size());
  const int k = pattern.size();
  if (depth == k)
    return true;
  const int remaining = k - depth;
  for (int p = next_position; p <= w.size() - remaining + 1; ++p) {
    bool consistent = true;
    for (int t = 0; t < depth && consistent; ++t)
      consistent = (w(chosen[t]) < w(p)) == (pattern(t + 1) < pattern(depth + 1));
    if (!consistent)
      continue;
    chosen.push_back(p);
    if (extend_instance(w, pattern, p + 1, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

std::optional<std::vector<int>> find_pattern_instance(const Permutation& w,
                                                      const Permutation& pattern)
{
  if (pattern.size() > w.size())
    throw std::invalid_argument("pattern of size " + std::to_string(pattern.size()) +
                                " larger than permutation of size " + std::to_string(w.size()));
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  if (extend_instance(w, pattern, 1, chosen))
    return chosen;
  return std::nullopt;
}

bool avoids_pattern(const Permutation& w, const Permutation& pattern)
{
  return !find_pattern_instance(w, pattern).has_value();
}

bool contains_3412(const Permutation& w)
{
  // Middle pair b < c with w(b) > w(c). Best "3" is the largest value before
  // b still below w(b); best "2" is the smallest value after c above w(c).
  const int n = w.size();
  std::vector<int> best_three(n + 1, 0);
  std::vector<int> best_two(n + 1, n + 1);
  for (int b = 1; b <= n; ++b)
    for (int a = 1; a < b; ++a)
      if (w(a) < w(b))
        best_three[b] = std::max(best_three[b], w(a));
  for (int c = 1; c <= n; ++c)
    for (int d = c + 1; d <= n; ++d)
      if (w(d) > w(c))
        best_two[c] = std::min(best_two[c], w(d));
  for (int b = 1; b <= n; ++b)
    for (int c = b + 1; c <= n; ++c)
      if (w(b) > w(c) && best_two[c] < best_three[b])
        return true;
  return false;
}

bool contains_4231(const Permutation& w)
{
  const int n = w.size();
  std::vector<int> prefix_max(n + 2, 0);
  std::vector<int> suffix_min(n + 2, n + 1);
  for (int i = 1; i <= n; ++i)
    prefix_max[i] = std::max(prefix_max[i - 1], w(i));
  for (int i = n; i >= 1; --i)
    suffix_min[i] = std::min(suffix_min[i + 1], w(i));
  for (int b = 2; b <= n; ++b)
    for (int c = b + 1; c < n; ++c)
      if (w(b) < w(c) && prefix_max[b - 1] > w(c) && suffix_min[c + 1] < w(b))
        return true;
  return false;
}

std::vector<Permutation> all_permutations(int n)
{
  check_size(n);
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_oneline(values));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

Permutation parse_permutation(std::string_view text)
{
  while (!text.empty() && text.front() == ' ')
    text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ')
    text.remove_suffix(1);
  if (text.empty())
    throw std::invalid_argument("empty permutation");

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos && text.size() > 1) {
    if (text.size() > 9)
      throw std::invalid_argument("compact form only supports n <= 9: '" + std::string(text) +
                                  "'");
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
    return Permutation::from_oneline(values);
  }

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view field = text.substr(start, end - start);
    while (!field.empty() && field.front() == ' ')
      field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ')
      field.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
    values.push_back(v);
    start = end + 1;
  }
  return Permutation::from_oneline(values);
}

std::string to_string(const Permutation& w)
{
  std::ostringstream out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1)
      out << ',';
    out << w(i);
  }
  return out.str();
}

} // namespace klinv
