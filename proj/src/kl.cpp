#include "klinv/kl.hpp"

#include <array>
#include <stdexcept>

#include "klinv/bruhat.hpp"
#include "klinv/errors.hpp"

namespace klinv {

namespace {

void check_same_size(const Permutation& u, const Permutation& v)
{
  if (u.size() != v.size())
    throw std::invalid_argument("size mismatch: " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
}

bool has_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

// Position of each value, so left descents are O(1).
std::array<int, kMaxPermutationSize + 2> positions_of(const Permutation& w)
{
  std::array<int, kMaxPermutationSize + 2> pos{};
  for (int i = 1; i <= w.size(); ++i)
    pos[w(i)] = i;
  return pos;
}

bool is_extremal(const Permutation& z, const Permutation& v)
{
  const auto zpos = positions_of(z);
  const auto vpos = positions_of(v);
  for (int i = 1; i < v.size(); ++i) {
    if (has_right_descent(v, i) && !has_right_descent(z, i))
      return false;
    if (vpos[i + 1] < vpos[i] && !(zpos[i + 1] < zpos[i]))
      return false;
  }
  return true;
}

// Walks x upward along descents of w that x lacks. Each step keeps x <= w
// (lifting property) and leaves P_{x,w} unchanged.
Permutation raise_to_extremal(Permutation x, const Permutation& w)
{
  const auto wpos = positions_of(w);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < w.size(); ++i) {
      if (has_right_descent(w, i) && !has_right_descent(x, i)) {
        x = x.swapped_positions(i, i + 1);
        moved = true;
      }
      if (wpos[i + 1] < wpos[i]) {
        const auto xpos = positions_of(x);
        if (xpos[i] < xpos[i + 1]) {
          x = x.swapped_positions(xpos[i], xpos[i + 1]);
          moved = true;
        }
      }
    }
  }
  return x;
}

int choose_descent(const Permutation& w, DescentChoice choice)
{
  if (choice == DescentChoice::Largest) {
    for (int i = w.size() - 1; i >= 1; --i)
      if (has_right_descent(w, i))
        return i;
  } else {
    for (int i = 1; i < w.size(); ++i)
      if (has_right_descent(w, i))
        return i;
  }
  throw std::logic_error("choose_descent: identity has no descent");
}

IntPolynomial compute_kl(Permutation x, const Permutation& w, KLCache& cache);

IntPolynomial recurse(const Permutation& x, const Permutation& w, KLCache& cache)
{
  const int i = choose_descent(w, cache.options().descent);
  const Permutation ws = w.swapped_positions(i, i + 1);
  const Permutation xs = x.swapped_positions(i, i + 1);
  const int c = has_right_descent(x, i) ? 1 : 0;

  IntPolynomial result = poly_scale_qpow(compute_kl(x, ws, cache), c) +
                         poly_scale_qpow(compute_kl(xs, ws, cache), 1 - c);

  const int lw = length(w);
  const std::shared_ptr<const MuRow> row = mu_row(ws, cache);
  for (const MuEntry& entry : *row) {
    const Permutation& z = entry.element;
    if (!has_right_descent(z, i) || !bruhat_leq(x, z))
      continue;
    const int shift = (lw - length(z)) / 2;
    result -= poly_scale(poly_scale_qpow(compute_kl(x, z, cache), shift), entry.mu);
  }
  return result;
}

IntPolynomial compute_kl(Permutation x, const Permutation& w, KLCache& cache)
{
  if (!bruhat_leq(x, w))
    return {};
  if (cache.options().raise_to_extremal)
    x = raise_to_extremal(x, w);
  if (x == w)
    return IntPolynomial::constant(1);
  if (auto hit = cache.find(x, w))
    return *std::move(hit);
  IntPolynomial result = recurse(x, w, cache);
  cache.insert(x, w, result);
  return result;
}

std::int64_t mu_from_polynomial(const IntPolynomial& p, int length_difference)
{
  if (length_difference < 1 || length_difference % 2 == 0)
    return 0;
  return p.coefficient((length_difference - 1) / 2);
}

} // namespace

void KLCache::clear()
{
  memo_.clear();
  mu_rows_.clear();
  stats_ = {};
}

std::optional<IntPolynomial> KLCache::find(const Permutation& x, const Permutation& w)
{
  auto it = memo_.find(PairKey{x.key(), w.key(), x.size()});
  if (it == memo_.end()) {
    ++stats_.misses;
    return std::nullopt;
  }
  ++stats_.hits;
  return it->second;
}

void KLCache::insert(const Permutation& x, const Permutation& w, IntPolynomial value)
{
  if (options_.max_entries > 0 && memo_.size() >= options_.max_entries && !memo_.empty()) {
    memo_.erase(memo_.begin());
    ++stats_.evictions;
  }
  memo_.insert_or_assign(PairKey{x.key(), w.key(), x.size()}, std::move(value));
}

std::shared_ptr<const MuRow> KLCache::find_mu_row(const Permutation& v) const
{
  auto it = mu_rows_.find({v.key(), v.size()});
  return it == mu_rows_.end() ? nullptr : it->second;
}

void KLCache::insert_mu_row(const Permutation& v, std::shared_ptr<const MuRow> row)
{
  if (options_.max_entries > 0 && mu_rows_.size() >= options_.max_entries &&
      !mu_rows_.empty()) {
    mu_rows_.erase(mu_rows_.begin());
    ++stats_.evictions;
  }
  mu_rows_.insert_or_assign({v.key(), v.size()}, std::move(row));
}

IntPolynomial kl_polynomial(const Permutation& x, const Permutation& w, KLCache& cache)
{
  check_same_size(x, w);
  return compute_kl(x, w, cache);
}

std::int64_t mu(const Permutation& x, const Permutation& w, KLCache& cache)
{
  check_same_size(x, w);
  if (!bruhat_leq(x, w))
    return 0;
  const int diff = length(w) - length(x);
  if (diff < 1 || diff % 2 == 0)
    return 0;
  return mu_from_polynomial(compute_kl(x, w, cache), diff);
}

std::shared_ptr<const MuRow> mu_row(const Permutation& v, KLCache& cache)
{
  if (auto row = cache.find_mu_row(v))
    return row;
  const bool extremal_only = cache.options().raise_to_extremal;
  const int lv = length(v);
  auto row = std::make_shared<MuRow>();
  const BruhatInterval below = interval(Permutation::identity(v.size()), v);
  for (const Permutation& z : below.elements) {
    const int diff = lv - length(z);
    if (diff % 2 == 0)
      continue;
    if (diff == 1) {
      row->push_back({z, 1});
      continue;
    }
    // A descent of v missing from z forces P_{z,v} = P_{zs,v}, whose degree
    // bound is one lower, so the top coefficient vanishes.
    if (extremal_only && !is_extremal(z, v))
      continue;
    const std::int64_t m = mu_from_polynomial(compute_kl(z, v, cache), diff);
    if (m != 0)
      row->push_back({z, m});
  }
  std::shared_ptr<const MuRow> frozen = std::move(row);
  cache.insert_mu_row(v, frozen);
  return frozen;
}

IntPolynomial inverse_kl(const Permutation& x, const Permutation& w, KLCache& cache)
{
  check_same_size(x, w);
  const Permutation w0 = Permutation::longest_element(x.size());
  return kl_polynomial(compose(w0, w), compose(w0, x), cache);
}

IntPolynomial inversion_sum(const Permutation& x, const Permutation& w, KLCache& cache)
{
  check_same_size(x, w);
  if (!bruhat_leq(x, w))
    throw PreconditionError("inversion identity: " + to_string(x) + " is not below " +
                            to_string(w));
  const Permutation w0 = Permutation::longest_element(x.size());
  const Permutation w0x = compose(w0, x);
  const int lw = length(w);
  IntPolynomial sum;
  for (const Permutation& z : interval(x, w).elements) {
    IntPolynomial term = kl_polynomial(z, w, cache) * kl_polynomial(compose(w0, z), w0x, cache);
    if ((length(z) + lw) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

bool verify_inversion_identity(const Permutation& x, const Permutation& w, KLCache& cache)
{
  const IntPolynomial expected = IntPolynomial::constant(x == w ? 1 : 0);
  return inversion_sum(x, w, cache) == expected;
}

std::vector<int> delta_set(const Permutation& x, const Permutation& w)
{
  const RankDifferenceTable d(x, w);
  std::vector<int> out;
  for (int i = 1; i <= x.size(); ++i)
    if (x(i) != w(i) || d(i, x(i)) != 0)
      out.push_back(i);
  return out;
}

std::pair<Permutation, Permutation> tilde_reduce(const Permutation& x, const Permutation& w)
{
  const std::vector<int> positions = delta_set(x, w);
  if (positions.empty())
    return {Permutation::identity(1), Permutation::identity(1)};
  std::vector<int> xs;
  std::vector<int> ws;
  for (int i : positions) {
    xs.push_back(x(i));
    ws.push_back(w(i));
  }
  return {flatten(xs), flatten(ws)};
}

bool is_smooth_top(const Permutation& w)
{
  if (w.size() < 4)
    return true;
  static const Permutation p3412 = Permutation::from_oneline({3, 4, 1, 2});
  static const Permutation p4231 = Permutation::from_oneline({4, 2, 3, 1});
  return avoids_pattern(w, p3412) && avoids_pattern(w, p4231);
}

bool descent_reduction_check(const Permutation& x, const Permutation& w, KLCache& cache)
{
  check_same_size(x, w);
  if (!bruhat_leq(x, w))
    throw PreconditionError("descent_reduction_check: " + to_string(x) + " is not below " +
                            to_string(w));
  const IntPolynomial base = kl_polynomial(x, w, cache);
  for (int i = 1; i < w.size(); ++i) {
    if (descent_indicator(w, i) == 1 &&
        kl_polynomial(right_multiply_simple(x, i), w, cache) != base)
      return false;
    if (left_descent_indicator(w, i) == 1 &&
        kl_polynomial(left_multiply_simple(x, i), w, cache) != base)
      return false;
  }
  return true;
}

} // namespace klinv
