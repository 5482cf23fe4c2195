#ifndef KLINV_BRUHAT_HPP
#define KLINV_BRUHAT_HPP

#include <string>
#include <vector>

#include "klinv/permutation.hpp"

namespace klinv {

/// r_w(p,q): number of positions i <= p with w(i) >= q.
int rank_count(const Permutation& w, int p, int q);

/// d_{x,w}(p,q) = r_w(p,q) - r_x(p,q) for 1 <= p,q <= n.
class RankDifferenceTable {
public:
  RankDifferenceTable(const Permutation& x, const Permutation& w);

  const Permutation& bottom() const { return x_; }
  const Permutation& top() const { return w_; }
  int size() const { return x_.size(); }

  /// Unchecked, 1-based.
  int operator()(int p, int q) const { return values_[(p - 1) * size() + (q - 1)]; }
  int at(int p, int q) const;

  bool all_nonnegative() const;
  bool all_zero() const;

private:
  Permutation x_;
  Permutation w_;
  std::vector<int> values_;
};

RankDifferenceTable rank_difference(const Permutation& x, const Permutation& w);

/// x <= w iff every rank difference d_{x,w}(p,q) is non-negative.
bool bruhat_leq(const Permutation& x, const Permutation& w);

/// Elements covered by w: w * t_{i,j} with length exactly one less.
std::vector<Permutation> lower_covers(const Permutation& w);
/// Elements covering w.
std::vector<Permutation> upper_covers(const Permutation& w);

/// The Bruhat interval [x, w], sorted by (length, one-line notation).
struct BruhatInterval {
  Permutation bottom;
  Permutation top;
  std::vector<Permutation> elements;

  bool contains(const Permutation& z) const;
  std::size_t size() const { return elements.size(); }
};

/// Throws PreconditionError unless x <= w.
BruhatInterval interval(const Permutation& x, const Permutation& w);

/// Number of coatoms of [u, v]: elements of the interval covered by v.
/// Requires u < v.
int coatom_count(const Permutation& u, const Permutation& v);

/// For a chain x <= y <= w, checks d_{x,w} >= d_{y,w} entrywise.
bool verify_monotone_difference(const Permutation& x, const Permutation& y, const Permutation& w);

/*
  Overlay of the permutation matrices of x and w. Rows are positions
  1..n from top to bottom and columns are values 1..n from left to right.
  Markers take precedence over shading in the rendered glyph; the shading
  mask itself is kept separately.
*/
struct BruhatPicture {
  int size = 0;
  std::vector<std::string> glyphs;  // row-major
  std::vector<bool> shaded;  // d_{x,w}(p,q) >= 1, row-major

  const std::string& glyph(int p, int q) const { return glyphs[(p - 1) * size + (q - 1)]; }
  bool is_shaded(int p, int q) const { return shaded[(p - 1) * size + (q - 1)]; }
  int shaded_count() const;
  std::string text() const;
};

inline constexpr const char* kGlyphBottom = "●";
inline constexpr const char* kGlyphTop = "○";
inline constexpr const char* kGlyphBoth = "◉";
inline constexpr const char* kGlyphShaded = "▒";
inline constexpr const char* kGlyphEmpty = "·";

BruhatPicture bruhat_picture(const Permutation& x, const Permutation& w);
std::string render_bruhat_picture(const Permutation& x, const Permutation& w);

} // namespace klinv

#endif
