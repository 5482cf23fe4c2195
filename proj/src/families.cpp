#include "klinv/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "klinv/bruhat.hpp"
#include "klinv/errors.hpp"

namespace klinv {

namespace {

void check_parameters(int k, int m)
{
  if (k < 1 || m < 1)
    throw std::invalid_argument("family parameters must satisfy k, m >= 1; got k=" +
                                std::to_string(k) + ", m=" + std::to_string(m));
}

void append_descending(std::vector<int>& out, int from, int to)
{
  for (int v = from; v >= to; --v)
    out.push_back(v);
}

std::int64_t sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

} // namespace

int FamilySpec::permutation_size() const
{
  return (kind == FamilyKind::X || kind == FamilyKind::W) ? k + m : k + m + 2;
}

FamilySpec parse_family_spec(std::string_view text)
{
  const auto fail = [&] {
    return std::invalid_argument("malformed family spec '" + std::string(text) +
                                 "' (expected e.g. x:2,3)");
  };
  if (text.size() < 5 || text[1] != ':')
    throw fail();
  FamilySpec spec;
  switch (std::tolower(static_cast<unsigned char>(text[0]))) {
  case 'x': spec.kind = FamilyKind::X; break;
  case 'w': spec.kind = FamilyKind::W; break;
  case 'y': spec.kind = FamilyKind::Y; break;
  case 'v': spec.kind = FamilyKind::V; break;
  default: throw fail();
  }
  const std::string_view params = text.substr(2);
  const std::size_t comma = params.find(',');
  if (comma == std::string_view::npos)
    throw fail();
  const auto parse_int = [&](std::string_view field, int& out) {
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw fail();
  };
  parse_int(params.substr(0, comma), spec.k);
  parse_int(params.substr(comma + 1), spec.m);
  check_parameters(spec.k, spec.m);
  return spec;
}

std::string to_string(const FamilySpec& spec)
{
  static constexpr char letters[] = {'x', 'w', 'y', 'v'};
  return std::string(1, letters[static_cast<int>(spec.kind)]) + ":" + std::to_string(spec.k) +
         "," + std::to_string(spec.m);
}

std::vector<int> family_display(FamilyKind kind, int k, int m)
{
  std::vector<int> out;
  switch (kind) {
  case FamilyKind::X:
    append_descending(out, k, 1);
    append_descending(out, k + m, k + 1);
    break;
  case FamilyKind::W:
    out.push_back(k + m);
    append_descending(out, k, 2);
    append_descending(out, k + m - 1, k + 1);
    out.push_back(1);
    break;
  case FamilyKind::Y:
    append_descending(out, k, 1);
    out.push_back(k + 2);
    out.push_back(k + 1);
    append_descending(out, k + m + 2, k + 3);
    break;
  case FamilyKind::V:
    out.push_back(k + 2);
    append_descending(out, k, 2);
    out.push_back(k + m + 2);
    out.push_back(1);
    append_descending(out, k + m + 1, k + 3);
    out.push_back(k + 1);
    break;
  }
  return out;
}

Permutation make_family(const FamilySpec& spec)
{
  check_parameters(spec.k, spec.m);
  if (spec.permutation_size() > kMaxPermutationSize)
    throw std::invalid_argument("family " + to_string(spec) + " exceeds size " +
                                std::to_string(kMaxPermutationSize));
  return Permutation::from_oneline(family_display(spec.kind, spec.k, spec.m));
}

std::pair<Permutation, Permutation> make_family_pair(FamilyPair pair, int k, int m)
{
  if (pair == FamilyPair::XW)
    return {make_family({FamilyKind::X, k, m}), make_family({FamilyKind::W, k, m})};
  return {make_family({FamilyKind::Y, k, m}), make_family({FamilyKind::V, k, m})};
}

std::int64_t binomial(int n, int d)
{
  if (n < 0)
    throw std::invalid_argument("binomial: negative upper index " + std::to_string(n));
  if (d < 0 || d > n)
    return 0;
  std::vector<std::int64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::int64_t> next(r + 1, 1);
    for (int j = 1; j < r; ++j)
      if (__builtin_add_overflow(row[j - 1], row[j], &next[j]))
        throw std::overflow_error("binomial: C(" + std::to_string(n) + "," +
                                  std::to_string(d) + ") overflows");
    row = std::move(next);
  }
  return row[d];
}

IntPolynomial closed_form_regular(FamilyPair pair, int k, int m)
{
  check_parameters(k, m);
  if (pair == FamilyPair::YV)
    return IntPolynomial{1, 1};
  return IntPolynomial(std::vector<IntPolynomial::Coefficient>(std::min(k, m), 1));
}

IntPolynomial closed_form_inverse(FamilyPair pair, int k, int m)
{
  check_parameters(k, m);
  if (pair == FamilyPair::YV)
    return IntPolynomial{1, k + m - 1};
  std::vector<IntPolynomial::Coefficient> cs;
  for (int r = 0; r <= std::min(k - 1, m - 1); ++r)
    cs.push_back(binomial(k - 1, r) * binomial(m - 1, r));
  return IntPolynomial(std::move(cs));
}

IntPolynomial f_km(int k, int m, int a, int b)
{
  check_parameters(k, m);
  if (a < 0 || a > k || b < 0 || b > m)
    throw std::invalid_argument("f_km: need 0 <= a <= k and 0 <= b <= m");
  const std::int64_t weight = binomial(k, a) * binomial(m, b);
  const std::int64_t s = sign(a + b);
  // -s (1 + (k+m-a-b-1) q) + 2 s
  const IntPolynomial bracket{s, -s * (k + m - a - b - 1)};
  return poly_scale(bracket, weight);
}

IdentityCheck lemma_tech1_check(int k, int m)
{
  check_parameters(k, m);
  IntPolynomial lhs;
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= m - 1; ++b) {
      std::vector<IntPolynomial::Coefficient> inner;
      for (int r = 0; r <= std::min(k - a - 1, m - b - 1); ++r)
        inner.push_back(binomial(k - a - 1, r) * binomial(m - b - 1, r));
      lhs += poly_scale(IntPolynomial(std::move(inner)),
                        -sign(a + b) * binomial(k, a) * binomial(m, b));
    }
  const IntPolynomial rhs = poly_scale(closed_form_regular(FamilyPair::XW, k, m), -sign(k + m));
  return {lhs, rhs, lhs == rhs};
}

IdentityCheck lemma_tech2_check(int k, int m)
{
  check_parameters(k, m);
  IntPolynomial lhs;
  for (int a = 0; a <= k - 1; ++a)
    for (int b = 0; b <= m - 1; ++b)
      lhs += f_km(k, m, a, b);
  const IntPolynomial rhs = poly_scale(IntPolynomial{1, 1}, sign(k + m));
  return {lhs, rhs, lhs == rhs};
}

IntPolynomial eq31_reconstruct(const Permutation& x, const Permutation& w, KLCache& cache)
{
  if (x.size() != w.size())
    throw std::invalid_argument("size mismatch: " + std::to_string(x.size()) + " vs " +
                                std::to_string(w.size()));
  if (!bruhat_leq(x, w))
    throw PreconditionError("eq31_reconstruct: " + to_string(x) + " is not below " +
                            to_string(w));
  if (x == w)
    return IntPolynomial::constant(1);

  const BruhatInterval span = interval(x, w);
  const IntPolynomial one = IntPolynomial::constant(1);
  for (const Permutation& z : span.elements)
    if (z != x && kl_polynomial(z, w, cache) != one)
      throw PreconditionError("eq31_reconstruct: P_{z,w} != 1 at z = " + to_string(z));

  const int lw = length(w);
  IntPolynomial result = poly_scale(kl_polynomial(x, w, cache), sign(length(x) + lw + 1));
  for (const Permutation& z : span.elements) {
    if (z == x || z == w)
      continue;
    result += poly_scale(inverse_kl(x, z, cache), sign(length(z) + lw + 1));
  }
  return result;
}

} // namespace klinv
