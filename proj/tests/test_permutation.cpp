#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "tightpath/error.hpp"
#include "tightpath/permutation.hpp"
#include "tightpath/rational.hpp"
#include "tightpath/rng.hpp"

using namespace tightpath;

TEST(CanonicalPattern, SmallExamples) {
  std::vector<int> a{5, 2, 9};
  EXPECT_EQ(canonical_pattern(a).to_string(), "213");
  std::vector<int> inc{1, 2, 3, 4, 5};
  EXPECT_EQ(canonical_pattern(inc), Permutation::identity(5));
  std::vector<int> dup{1, 4, 1};
  EXPECT_THROW(canonical_pattern(dup), Error);
  EXPECT_THROW(canonical_pattern(std::vector<int>{}), Error);
}

TEST(CanonicalPattern, IdempotentAndMatchesOracle) {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = 1 + static_cast<int>(rng.below(7));
    std::vector<int> pool(40);
    for (int i = 0; i < 40; ++i) pool[i] = i * 3 - 50;
    rng.shuffle(pool);
    std::vector<int> a(pool.begin(), pool.begin() + r);
    const Permutation p = canonical_pattern(a);
    EXPECT_EQ(canonical_pattern(p.values()), p);
    std::vector<int> pv(p.values().begin(), p.values().end());
    EXPECT_TRUE(oracle::same_order(a, pv));
    EXPECT_EQ(pv, oracle::pattern(a));
    EXPECT_EQ(pattern_rank(a), p.rank());
    // Order-preserving relabelling leaves the pattern unchanged.
    std::vector<int> shifted;
    for (int x : a) shifted.push_back(7 * x + 1000);
    EXPECT_EQ(canonical_pattern(shifted), p);
  }
}

TEST(PatternMatch, Examples) {
  // 314 and 729 share the pattern 213; 927 has pattern 312.
  std::vector<int> a{3, 1, 4}, b{7, 2, 9}, c{9, 2, 7};
  EXPECT_TRUE(pattern_match(a, b));
  EXPECT_FALSE(pattern_match(a, c));
  EXPECT_TRUE(pattern_match(a, a));
  std::vector<int> up{1, 2}, down{2, 1};
  EXPECT_FALSE(pattern_match(up, down));
  std::vector<int> shorter{1, 2};
  EXPECT_THROW(pattern_match(a, shorter), Error);
}

TEST(Permutation, RankRoundTrip) {
  for (int r = 1; r <= 6; ++r) {
    const auto all = oracle::all_permutations(r);
    ASSERT_EQ(all.size(), permutation_count(r));
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Permutation p = Permutation::unrank(r, i);
      EXPECT_EQ(std::vector<int>(p.values().begin(), p.values().end()), all[i]);
      EXPECT_EQ(p.rank(), i);
    }
  }
  const Permutation big = Permutation::unrank(12, 123456789);
  EXPECT_EQ(big.rank(), 123456789u);
}

TEST(Permutation, ParseAndRender) {
  EXPECT_EQ(Permutation::parse("3142").to_string(), "3142");
  EXPECT_EQ(Permutation::parse("3,1,4,2"), Permutation::parse("3142"));
  const Permutation ten = Permutation::reversed_identity(10);
  EXPECT_EQ(ten.to_string(), "10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(Permutation::parse(ten.to_string()), ten);
  EXPECT_THROW(Permutation::parse("1224"), Error);
  EXPECT_THROW(Permutation::parse("12a"), Error);
  EXPECT_THROW(Permutation(std::vector<int>{0, 1}), Error);
}

TEST(Permutation, Shifts) {
  const Permutation p = Permutation::parse("3142");
  EXPECT_EQ(p.forward_shift().to_string(), "1423");
  EXPECT_EQ(p.backward_shift().to_string(), "2314");
  EXPECT_EQ(p.forward_shift().backward_shift(), p);
  EXPECT_EQ(p.position_of(4), 3);
  EXPECT_EQ(p.at(1), 3);
}

TEST(Rational, FallingFactorialAndFormatting) {
  EXPECT_EQ(falling_factorial(6, 3), BigInt(120));
  EXPECT_EQ(falling_factorial(2, 3), BigInt(0));
  EXPECT_EQ(factorial(5), BigInt(120));
  EXPECT_EQ(binomial(6, 3), BigInt(20));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(floor_plus_one(Rational(45, 2)), BigInt(23));
  EXPECT_EQ(floor_plus_one(Rational(12)), BigInt(13));
  EXPECT_THROW(factorial_u64(30), Error);
}
