#include "klinv/kl.hpp"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "klinv/bruhat.hpp"
#include "klinv/errors.hpp"
#include "oracles.hpp"

namespace klinv {
namespace {

Permutation P(std::initializer_list<int> v) { return Permutation::from_oneline(v); }

IntPolynomial from_oracle(const oracle::Poly& p) { return IntPolynomial(p); }

TEST(KL, Examples)
{
  KLCache cache;
  const auto w = P({3, 1, 4, 2});
  EXPECT_EQ(kl_polynomial(w, w, cache), IntPolynomial({1}));
  EXPECT_EQ(kl_polynomial(P({3, 4, 1, 2}), Permutation::identity(4), cache), IntPolynomial());
  EXPECT_EQ(kl_polynomial(Permutation::identity(4), P({3, 4, 1, 2}), cache), IntPolynomial({1, 1}));
  EXPECT_EQ(kl_polynomial(P({2, 1, 4, 3}), P({4, 2, 3, 1}), cache), IntPolynomial({1, 1}));
  EXPECT_EQ(kl_polynomial(P({1, 3, 2, 4}), P({3, 4, 1, 2}), cache), IntPolynomial({1, 1}));
  EXPECT_THROW(kl_polynomial(P({1, 2}), P({1, 2, 3}), cache), std::invalid_argument);
}

TEST(KL, Mu)
{
  KLCache cache;
  EXPECT_EQ(mu(P({1, 2}), P({2, 1}), cache), 1);
  EXPECT_EQ(mu(P({2, 1}), P({2, 1}), cache), 0);
  EXPECT_EQ(mu(Permutation::identity(4), P({3, 4, 1, 2}), cache), 0);
  EXPECT_EQ(mu(P({1, 3, 2, 4}), P({3, 4, 1, 2}), cache), 1);
  EXPECT_EQ(mu(P({2, 1}), P({1, 2}), cache), 0);
}

TEST(KL, MatchesNaiveRecursionOnS4AndS5)
{
  for (int n : {4, 5}) {
    oracle::KLOracle naive(n);
    KLCache cache;
    const auto group = all_permutations(n);
    for (const auto& x : group)
      for (const auto& w : group)
        ASSERT_EQ(kl_polynomial(x, w, cache), from_oracle(naive.P(x.oneline(), w.oneline())))
            << to_string(x) << " " << to_string(w);
  }
}

TEST(KL, LiteralRecursionMatchesRaisedRecursion)
{
  for (int n : {4, 5}) {
    KLCache raised;
    KLCacheOptions plain_options;
    plain_options.raise_to_extremal = false;
    KLCache plain(plain_options);
    const auto group = all_permutations(n);
    for (const auto& x : group)
      for (const auto& w : group)
        ASSERT_EQ(kl_polynomial(x, w, plain), kl_polynomial(x, w, raised))
            << to_string(x) << " " << to_string(w);
  }
}

TEST(KL, DescentChoiceDoesNotMatterOnS5)
{
  KLCache largest;
  KLCacheOptions options;
  options.descent = DescentChoice::Smallest;
  KLCache smallest(options);
  options.raise_to_extremal = false;
  KLCache smallest_plain(options);
  const auto group = all_permutations(5);
  for (const auto& x : group)
    for (const auto& w : group) {
      const auto expected = kl_polynomial(x, w, largest);
      ASSERT_EQ(kl_polynomial(x, w, smallest), expected);
      ASSERT_EQ(kl_polynomial(x, w, smallest_plain), expected);
    }
}

TEST(KLProperty, AxiomsOnS5)
{
  KLCache cache;
  const auto group = all_permutations(5);
  for (const auto& x : group)
    for (const auto& w : group) {
      const auto p = kl_polynomial(x, w, cache);
      if (!bruhat_leq(x, w)) {
        ASSERT_TRUE(p.is_zero());
        continue;
      }
      ASSERT_EQ(p.coefficient(0), 1);
      if (x != w) {
        ASSERT_LE(2 * p.degree(), length(w) - length(x) - 1);
      }
      for (auto c : p.coefficients())
        ASSERT_GE(c, 0);
    }
}

TEST(KL, CacheIsTransparent)
{
  const auto group = all_permutations(5);
  KLCache reference;
  std::vector<IntPolynomial> expected;
  for (const auto& x : group)
    for (const auto& w : group)
      expected.push_back(kl_polynomial(x, w, reference));

  for (std::size_t cap : {1u, 7u, 64u}) {
    KLCacheOptions options;
    options.max_entries = cap;
    KLCache bounded(options);
    std::size_t i = 0;
    for (const auto& x : group)
      for (const auto& w : group)
        ASSERT_EQ(kl_polynomial(x, w, bounded), expected[i++]) << "cap " << cap;
    EXPECT_LE(bounded.size(), cap);
    EXPECT_GT(bounded.stats().evictions, 0u);
  }

  // Reverse order into a fresh cache and a cleared cache.
  KLCache fresh;
  std::size_t i = expected.size();
  for (auto x = group.rbegin(); x != group.rend(); ++x)
    for (auto w = group.rbegin(); w != group.rend(); ++w)
      ASSERT_EQ(kl_polynomial(*x, *w, fresh), expected[--i]);
  fresh.clear();
  EXPECT_EQ(fresh.size(), 0u);
  EXPECT_EQ(kl_polynomial(P({2, 1, 4, 3, 5}), P({4, 2, 3, 1, 5}), fresh), IntPolynomial({1, 1}));
}

TEST(KL, CacheCountsHits)
{
  KLCache cache;
  const auto x = P({1, 3, 2, 4, 5, 6});
  const auto w = P({6, 4, 5, 2, 3, 1});
  const auto first = kl_polynomial(x, w, cache);
  const auto misses = cache.stats().misses;
  EXPECT_GT(cache.size(), 0u);
  EXPECT_EQ(kl_polynomial(x, w, cache), first);
  EXPECT_EQ(cache.stats().misses, misses);
  EXPECT_GT(cache.stats().hits, 0u);
}

TEST(KL, MuRowMatchesDefinition)
{
  KLCache cache;
  oracle::KLOracle naive(5);
  for (const auto& v : all_permutations(5)) {
    std::vector<std::pair<Permutation, std::int64_t>> expected;
    for (const auto& z : all_permutations(5)) {
      const auto m = naive.mu(z.oneline(), v.oneline());
      if (z != v && m != 0)
        expected.emplace_back(z, m);
    }
    std::vector<std::pair<Permutation, std::int64_t>> actual;
    for (const auto& entry : *mu_row(v, cache))
      actual.emplace_back(entry.element, entry.mu);
    std::sort(actual.begin(), actual.end());
    ASSERT_EQ(actual, expected) << to_string(v);
  }
}

TEST(KL, InverseExamples)
{
  KLCache cache;
  EXPECT_EQ(inverse_kl(P({2, 1, 4, 3}), P({4, 2, 3, 1}), cache), IntPolynomial({1, 1}));
  EXPECT_EQ(inverse_kl(P({2, 1, 5, 4, 3}), P({5, 2, 4, 3, 1}), cache), IntPolynomial({1, 2}));
  const auto w = P({2, 5, 1, 4, 3});
  EXPECT_EQ(inverse_kl(w, w, cache), IntPolynomial({1}));
}

TEST(KL, InversionIdentityExamples)
{
  KLCache cache;
  const auto w = P({3, 1, 2, 4});
  EXPECT_TRUE(verify_inversion_identity(w, w, cache));
  EXPECT_EQ(inversion_sum(w, w, cache), IntPolynomial({1}));
  EXPECT_TRUE(verify_inversion_identity(Permutation::identity(4), P({3, 4, 1, 2}), cache));
  EXPECT_EQ(inversion_sum(Permutation::identity(4), P({3, 4, 1, 2}), cache), IntPolynomial());
  EXPECT_THROW(inversion_sum(P({3, 4, 1, 2}), P({4, 2, 3, 1}), cache), PreconditionError);
}

TEST(KL, InversionIdentityAgainstNaivePolynomialsOnS4)
{
  // The sum rebuilt from the naive recursion alone.
  oracle::KLOracle naive(4);
  KLCache cache;
  const auto group = all_permutations(4);
  const auto w0 = Permutation::longest_element(4);
  for (const auto& x : group)
    for (const auto& w : group) {
      if (!bruhat_leq(x, w))
        continue;
      IntPolynomial sum;
      for (const auto& z : group) {
        if (!bruhat_leq(x, z) || !bruhat_leq(z, w))
          continue;
        const auto term = from_oracle(naive.P(z.oneline(), w.oneline())) *
                          from_oracle(naive.P(compose(w0, z).oneline(), compose(w0, x).oneline()));
        sum += ((length(z) + length(w)) % 2 == 0) ? term : -term;
      }
      ASSERT_EQ(sum, x == w ? IntPolynomial({1}) : IntPolynomial());
      ASSERT_EQ(inversion_sum(x, w, cache), sum);
    }
}

TEST(KL, DeltaSetAndTildeReduce)
{
  EXPECT_TRUE(delta_set(Permutation::identity(4), Permutation::identity(4)).empty());
  EXPECT_EQ(delta_set(P({1, 2}), P({2, 1})), (std::vector<int>{1, 2}));
  EXPECT_EQ(delta_set(P({1, 3, 2, 4, 5}), P({3, 4, 1, 2, 5})), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(tilde_reduce(P({1, 3, 2, 4, 5}), P({3, 4, 1, 2, 5})),
            std::make_pair(P({1, 3, 2, 4}), P({3, 4, 1, 2})));
  const auto w = P({2, 3, 1});
  EXPECT_EQ(tilde_reduce(w, w), std::make_pair(Permutation::identity(1), Permutation::identity(1)));
}

TEST(KLProperty, TildeReductionPreservesPolynomialOnS5)
{
  KLCache cache;
  const auto group = all_permutations(5);
  for (const auto& x : group)
    for (const auto& w : group) {
      if (!bruhat_leq(x, w))
        continue;
      const auto [xt, wt] = tilde_reduce(x, w);
      ASSERT_TRUE(bruhat_leq(xt, wt));
      ASSERT_EQ(kl_polynomial(xt, wt, cache), kl_polynomial(x, w, cache));
    }
}

TEST(KL, SmoothTop)
{
  EXPECT_TRUE(is_smooth_top(Permutation::identity(6)));
  EXPECT_FALSE(is_smooth_top(P({3, 4, 1, 2})));
  EXPECT_FALSE(is_smooth_top(P({4, 2, 3, 1})));
  EXPECT_TRUE(is_smooth_top(P({3, 2, 1})));
  EXPECT_FALSE(is_smooth_top(P({5, 2, 4, 3, 1})));
}

TEST(KL, DescentReductionCheck)
{
  KLCache cache;
  EXPECT_TRUE(descent_reduction_check(Permutation::identity(4), P({3, 4, 1, 2}), cache));
  EXPECT_EQ(kl_polynomial(right_multiply_simple(Permutation::identity(4), 2), P({3, 4, 1, 2}), cache),
            IntPolynomial({1, 1}));
  EXPECT_THROW(descent_reduction_check(P({3, 4, 1, 2}), P({4, 2, 3, 1}), cache),
               PreconditionError);
  std::mt19937_64 rng(5);
  const auto group = all_permutations(5);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  int checked = 0;
  while (checked < 300) {
    const auto& x = group[pick(rng)];
    const auto& w = group[pick(rng)];
    if (!bruhat_leq(x, w))
      continue;
    ASSERT_TRUE(descent_reduction_check(x, w, cache)) << to_string(x) << " " << to_string(w);
    ++checked;
  }
}

} // namespace
} // namespace klinv
