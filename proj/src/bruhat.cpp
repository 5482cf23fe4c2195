#include "klinv/bruhat.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "klinv/errors.hpp"

namespace klinv {

namespace {

void check_same_size(const Permutation& u, const Permutation& v)
{
  if (u.size() != v.size())
    throw std::invalid_argument("size mismatch: " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
}

bool covers_via(const Permutation& w, int i, int j)
{
  if (w(i) < w(j))
    return false;
  for (int k = i + 1; k < j; ++k)
    if (w(k) > w(j) && w(k) < w(i))
      return false;
  return true;
}

bool by_length_then_lex(const Permutation& a, const Permutation& b)
{
  const int la = length(a);
  const int lb = length(b);
  if (la != lb)
    return la < lb;
  return a < b;
}

} // namespace

int rank_count(const Permutation& w, int p, int q)
{
  const int n = w.size();
  if (p < 1 || p > n || q < 1 || q > n)
    throw std::out_of_range("rank_count: (" + std::to_string(p) + "," + std::to_string(q) +
                            ") out of range for size " + std::to_string(n));
  int count = 0;
  for (int i = 1; i <= p; ++i)
    count += w(i) >= q;
  return count;
}

RankDifferenceTable::RankDifferenceTable(const Permutation& x, const Permutation& w)
    : x_(x), w_(w)
{
  check_same_size(x, w);
  const int n = x.size();
  values_.assign(static_cast<std::size_t>(n) * n, 0);
  // Row p accumulates the markers of positions 1..p; columns are suffix sums.
  std::vector<int> marks(n + 2, 0);
  for (int p = 1; p <= n; ++p) {
    ++marks[w(p)];
    --marks[x(p)];
    int running = 0;
    for (int q = n; q >= 1; --q) {
      running += marks[q];
      values_[(p - 1) * n + (q - 1)] = running;
    }
  }
}

int RankDifferenceTable::at(int p, int q) const
{
  if (p < 1 || p > size() || q < 1 || q > size())
    throw std::out_of_range("rank difference index out of range");
  return (*this)(p, q);
}

bool RankDifferenceTable::all_nonnegative() const
{
  return std::all_of(values_.begin(), values_.end(), [](int d) { return d >= 0; });
}

bool RankDifferenceTable::all_zero() const
{
  return std::all_of(values_.begin(), values_.end(), [](int d) { return d == 0; });
}

RankDifferenceTable rank_difference(const Permutation& x, const Permutation& w)
{
  return RankDifferenceTable(x, w);
}

bool bruhat_leq(const Permutation& x, const Permutation& w)
{
  check_same_size(x, w);
  const int n = x.size();
  std::array<int, kMaxPermutationSize + 2> marks{};
  for (int p = 1; p < n; ++p) {
    ++marks[w(p)];
    --marks[x(p)];
    int running = 0;
    for (int q = n; q >= 2; --q) {
      running += marks[q];
      if (running < 0)
        return false;
    }
  }
  return true;
}

std::vector<Permutation> lower_covers(const Permutation& w)
{
  std::vector<Permutation> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (covers_via(w, i, j))
        out.push_back(w.swapped_positions(i, j));
  return out;
}

std::vector<Permutation> upper_covers(const Permutation& w)
{
  std::vector<Permutation> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j))
        continue;
      Permutation up = w.swapped_positions(i, j);
      if (covers_via(up, i, j))
        out.push_back(up);
    }
  return out;
}

bool BruhatInterval::contains(const Permutation& z) const
{
  return std::binary_search(elements.begin(), elements.end(), z, by_length_then_lex);
}

BruhatInterval interval(const Permutation& x, const Permutation& w)
{
  check_same_size(x, w);
  if (!bruhat_leq(x, w))
    throw PreconditionError("interval: " + to_string(x) + " is not below " + to_string(w));

  // Every element of [x, w] is reached from w by a chain of covers staying
  // inside the interval, so a downward search pruned at the up-set of x
  // finds exactly the interval.
  std::vector<Permutation> elements{w};
  std::unordered_set<std::uint64_t> seen{w.key()};
  std::vector<Permutation> frontier{w};
  std::vector<Permutation> next;
  while (!frontier.empty()) {
    next.clear();
    for (const Permutation& z : frontier) {
      for (int i = 1; i <= z.size(); ++i)
        for (int j = i + 1; j <= z.size(); ++j) {
          if (!covers_via(z, i, j))
            continue;
          Permutation down = z.swapped_positions(i, j);
          if (!seen.insert(down.key()).second)
            continue;
          if (!bruhat_leq(x, down))
            continue;
          elements.push_back(down);
          next.push_back(down);
        }
    }
    std::swap(frontier, next);
  }
  std::sort(elements.begin(), elements.end(), by_length_then_lex);
  return BruhatInterval{x, w, std::move(elements)};
}

int coatom_count(const Permutation& u, const Permutation& v)
{
  check_same_size(u, v);
  if (u == v)
    throw PreconditionError("coatom_count: interval [" + to_string(u) + ", " + to_string(v) +
                            "] is a single point");
  if (!bruhat_leq(u, v))
    throw PreconditionError("coatom_count: " + to_string(u) + " is not below " + to_string(v));
  int count = 0;
  for (const Permutation& z : lower_covers(v))
    count += bruhat_leq(u, z);
  return count;
}

bool verify_monotone_difference(const Permutation& x, const Permutation& y, const Permutation& w)
{
  check_same_size(x, y);
  check_same_size(y, w);
  if (!bruhat_leq(x, y) || !bruhat_leq(y, w))
    throw PreconditionError("verify_monotone_difference: not a chain " + to_string(x) +
                            " <= " + to_string(y) + " <= " + to_string(w));
  const RankDifferenceTable dx(x, w);
  const RankDifferenceTable dy(y, w);
  for (int p = 1; p <= x.size(); ++p)
    for (int q = 1; q <= x.size(); ++q)
      if (dx(p, q) < dy(p, q))
        return false;
  return true;
}

int BruhatPicture::shaded_count() const
{
  return static_cast<int>(std::count(shaded.begin(), shaded.end(), true));
}

std::string BruhatPicture::text() const
{
  std::string out;
  for (int p = 1; p <= size; ++p) {
    for (int q = 1; q <= size; ++q)
      out += glyph(p, q);
    out += '\n';
  }
  return out;
}

BruhatPicture bruhat_picture(const Permutation& x, const Permutation& w)
{
  const RankDifferenceTable d(x, w);
  const int n = x.size();
  BruhatPicture picture;
  picture.size = n;
  picture.glyphs.resize(static_cast<std::size_t>(n) * n);
  picture.shaded.resize(static_cast<std::size_t>(n) * n);
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      const std::size_t cell = (p - 1) * n + (q - 1);
      const bool shade = d(p, q) >= 1;
      const bool in_x = x(p) == q;
      const bool in_w = w(p) == q;
      picture.shaded[cell] = shade;
      if (in_x && in_w)
        picture.glyphs[cell] = kGlyphBoth;
      else if (in_x)
        picture.glyphs[cell] = kGlyphBottom;
      else if (in_w)
        picture.glyphs[cell] = kGlyphTop;
      else
        picture.glyphs[cell] = shade ? kGlyphShaded : kGlyphEmpty;
    }
  return picture;
}

std::string render_bruhat_picture(const Permutation& x, const Permutation& w)
{
  return bruhat_picture(x, w).text();
}

} // namespace klinv
