#include "klinv/permutation.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace klinv {
namespace {

Permutation P(std::initializer_list<int> v) { return Permutation::from_oneline(v); }

Permutation random_permutation(int n, std::mt19937_64& rng)
{
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_oneline(v);
}

TEST(Permutation, FromOnelineAcceptsBijections)
{
  const Permutation w = P({3, 1, 5, 2, 4, 6});
  EXPECT_EQ(w.size(), 6);
  EXPECT_EQ(w.oneline(), (std::vector<int>{3, 1, 5, 2, 4, 6}));
  EXPECT_EQ(P({1}), Permutation::identity(1));
}

TEST(Permutation, FromOnelineRejectsNonBijections)
{
  EXPECT_THROW(P({2, 2, 1}), std::invalid_argument);
  EXPECT_THROW(P({0, 1}), std::invalid_argument);
  EXPECT_THROW(P({1, 3}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_oneline(std::span<const int>{}), std::invalid_argument);
  std::vector<int> big(17);
  std::iota(big.begin(), big.end(), 1);
  EXPECT_THROW(Permutation::from_oneline(big), std::invalid_argument);
}

TEST(Permutation, IdentityAndLongest)
{
  EXPECT_EQ(Permutation::identity(3), P({1, 2, 3}));
  EXPECT_EQ(Permutation::identity(1), P({1}));
  EXPECT_THROW(Permutation::identity(0), std::invalid_argument);
  EXPECT_EQ(Permutation::longest_element(4), P({4, 3, 2, 1}));
  EXPECT_EQ(Permutation::longest_element(1), P({1}));
  EXPECT_EQ(Permutation::longest_element(2), P({2, 1}));
}

TEST(Permutation, AtChecksBounds)
{
  const Permutation w = P({2, 3, 1});
  EXPECT_EQ(w.at(1), 2);
  EXPECT_EQ(w.at(3), 1);
  EXPECT_THROW(w.at(0), std::out_of_range);
  EXPECT_THROW(w.at(4), std::out_of_range);
}

TEST(Permutation, Compose)
{
  EXPECT_EQ(compose(Permutation::longest_element(4), P({4, 2, 3, 1})), P({1, 3, 2, 4}));
  const Permutation v = P({2, 4, 1, 3});
  EXPECT_EQ(compose(Permutation::identity(4), v), v);
  const Permutation w0 = Permutation::longest_element(5);
  EXPECT_EQ(compose(w0, w0), Permutation::identity(5));
  EXPECT_THROW(compose(P({1, 2}), P({1, 2, 3})), std::invalid_argument);
}

TEST(Permutation, Inverse)
{
  EXPECT_EQ(inverse(P({2, 3, 1})), P({3, 1, 2}));
  EXPECT_EQ(inverse(P({2, 1})), P({2, 1}));
}

TEST(Permutation, RightMultiplyTransposition)
{
  EXPECT_EQ(right_multiply_transposition(P({3, 1, 2}), 1, 2), P({1, 3, 2}));
  EXPECT_EQ(right_multiply_transposition(Permutation::identity(4), 1, 4), P({4, 2, 3, 1}));
  const Permutation w = P({3, 1, 4, 2});
  EXPECT_EQ(right_multiply_simple(right_multiply_simple(w, 2), 2), w);
  EXPECT_THROW(right_multiply_transposition(w, 2, 2), std::out_of_range);
  EXPECT_THROW(right_multiply_transposition(w, 3, 2), std::out_of_range);
  EXPECT_THROW(right_multiply_transposition(w, 1, 5), std::out_of_range);
  EXPECT_THROW(right_multiply_simple(w, 4), std::out_of_range);
}

TEST(Permutation, LeftMultiplySimpleSwapsValues)
{
  EXPECT_EQ(left_multiply_simple(P({3, 1, 4, 2}), 1), P({3, 2, 4, 1}));
}

TEST(Permutation, Length)
{
  EXPECT_EQ(length(Permutation::identity(7)), 0);
  EXPECT_EQ(length(Permutation::longest_element(4)), 6);
  EXPECT_EQ(length(P({4, 2, 3, 1})), 5);
  for (const auto& w : all_permutations(5))
    EXPECT_EQ(length(w), oracle::length(w.oneline()));
}

TEST(Permutation, DescentIndicators)
{
  EXPECT_EQ(descent_indicator(P({2, 1}), 1), 1);
  for (int i = 1; i < 5; ++i)
    EXPECT_EQ(descent_indicator(Permutation::identity(5), i), 0);
  EXPECT_EQ(descent_indicator(P({3, 1, 2}), 1), 1);
  EXPECT_EQ(descent_indicator(P({3, 1, 2}), 2), 0);
  EXPECT_EQ(left_descent_indicator(P({3, 1, 2}), 2), 1);
  EXPECT_EQ(left_descent_indicator(P({3, 1, 2}), 1), 0);
  EXPECT_THROW(descent_indicator(P({3, 1, 2}), 3), std::out_of_range);
}

TEST(Permutation, Flatten)
{
  const std::vector<int> a{5, 2, 8}, b{9, 7};
  EXPECT_EQ(flatten(a), P({2, 1, 3}));
  EXPECT_EQ(flatten(b), P({2, 1}));
  const auto w = P({3, 1, 4, 2});
  const auto line = w.oneline();
  EXPECT_EQ(flatten(line), w);
  const std::vector<int> dup{1, 1};
  EXPECT_THROW(flatten(dup), std::invalid_argument);
}

TEST(Permutation, AvoidsPattern)
{
  EXPECT_FALSE(avoids_pattern(P({3, 4, 1, 2}), P({3, 4, 1, 2})));
  EXPECT_TRUE(avoids_pattern(P({3, 4, 1, 2}), P({4, 2, 3, 1})));
  EXPECT_TRUE(avoids_pattern(Permutation::identity(5), P({2, 1})));
}

TEST(Permutation, FindPatternInstance)
{
  EXPECT_EQ(find_pattern_instance(P({4, 2, 3, 1}), P({4, 2, 3, 1})),
            (std::vector<int>{1, 2, 3, 4}));
  EXPECT_FALSE(find_pattern_instance(Permutation::identity(4), P({2, 1})).has_value());
  EXPECT_EQ(find_pattern_instance(P({5, 2, 4, 3, 1}), P({4, 2, 3, 1})),
            (std::vector<int>{1, 2, 3, 5}));
  EXPECT_THROW(find_pattern_instance(P({2, 1}), P({1, 2, 3})), std::invalid_argument);
}

TEST(Permutation, FindPatternInstanceMatchesSubsetEnumeration)
{
  const std::vector<Permutation> patterns{P({2, 1}), P({1, 3, 2}), P({3, 4, 1, 2}),
                                          P({4, 2, 3, 1}), P({2, 4, 1, 3})};
  for (const auto& w : all_permutations(6))
    for (const auto& v : patterns)
      ASSERT_EQ(find_pattern_instance(w, v), oracle::pattern_instance(w.oneline(), v.oneline()))
          << to_string(w) << " / " << to_string(v);
}

TEST(Permutation, SpecializedSmoothnessScansMatchGeneralSearch)
{
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto line = w.oneline();
      ASSERT_EQ(contains_3412(w), oracle::pattern_instance(line, {3, 4, 1, 2}).has_value())
          << to_string(w);
      ASSERT_EQ(contains_4231(w), oracle::pattern_instance(line, {4, 2, 3, 1}).has_value())
          << to_string(w);
    }
}

TEST(Permutation, AllPermutationsIsLexicographicSymmetricGroup)
{
  const auto s4 = all_permutations(4);
  ASSERT_EQ(s4.size(), 24u);
  EXPECT_TRUE(std::is_sorted(s4.begin(), s4.end()));
  EXPECT_EQ(std::set<Permutation>(s4.begin(), s4.end()).size(), 24u);
  EXPECT_EQ(all_permutations(6).size(), 720u);
}

TEST(Permutation, ParseAndPrint)
{
  EXPECT_EQ(parse_permutation("4,2,3,1"), P({4, 2, 3, 1}));
  EXPECT_EQ(parse_permutation(" 4, 2 ,3,1 "), P({4, 2, 3, 1}));
  EXPECT_EQ(parse_permutation("4231"), P({4, 2, 3, 1}));
  EXPECT_EQ(parse_permutation("10,1,2,3,4,5,6,7,8,9").size(), 10);
  EXPECT_THROW(parse_permutation(""), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1,a"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1,1"), std::invalid_argument);
  EXPECT_EQ(to_string(P({4, 2, 3, 1})), "4,2,3,1");
  for (const auto& w : all_permutations(5))
    EXPECT_EQ(parse_permutation(to_string(w)), w);
}

TEST(Permutation, KeysAreDistinctWithinSize)
{
  std::set<std::uint64_t> keys;
  for (const auto& w : all_permutations(7))
    keys.insert(w.key());
  EXPECT_EQ(keys.size(), 5040u);
}

TEST(PermutationProperty, GroupLawsOnRandomS6)
{
  std::mt19937_64 rng(7);
  const Permutation e = Permutation::identity(6);
  const Permutation w0 = Permutation::longest_element(6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_permutation(6, rng);
    const auto b = random_permutation(6, rng);
    const auto c = random_permutation(6, rng);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    ASSERT_EQ(compose(a, e), a);
    ASSERT_EQ(compose(e, a), a);
    ASSERT_EQ(compose(a, inverse(a)), e);
    ASSERT_EQ(inverse(inverse(a)), a);
    ASSERT_EQ(length(inverse(a)), length(a));
    ASSERT_EQ(length(compose(w0, a)), 15 - length(a));
    ASSERT_EQ(length(compose(a, w0)), 15 - length(a));
    for (int i = 1; i < 6; ++i) {
      ASSERT_EQ(length(right_multiply_simple(a, i)),
                length(a) + (descent_indicator(a, i) ? -1 : 1));
      ASSERT_EQ(left_multiply_simple(a, i),
                compose(right_multiply_simple(e, i), a));
    }
  }
}

} // namespace
} // namespace klinv
