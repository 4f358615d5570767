#include "qsym/samplers.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "support/chi_square.hpp"

namespace qsym {
namespace {

constexpr std::uint64_t kDraws = 100000;

void expect_uniform(const std::vector<std::uint64_t>& counts,
                    std::uint64_t draws, const std::string& what) {
  const double stat = test::chi2_uniform_stat(counts, draws);
  const double crit = test::chi2_crit_999(static_cast<int>(counts.size()) - 1);
  EXPECT_LE(stat, crit) << what;
}

TEST(SampleAny, UniformOverTheCube) {
  for (int n : {1, 2, 3, 6}) {
    RandomSource rng(2024 + n);
    std::vector<std::uint64_t> counts(std::size_t{1} << n, 0);
    for (std::uint64_t i = 0; i < kDraws; ++i)
      ++counts[sample_any(n, rng).index()];
    expect_uniform(counts, kDraws, "sample_any n=" + std::to_string(n));
  }
}

TEST(SampleAny, BinomialMarginPerPoint) {
  // each of the 8 points lands within 4 sigma of 1/8 over 10^4 draws
  RandomSource rng(7);
  const std::uint64_t draws = 10000;
  std::vector<std::uint64_t> counts(8, 0);
  for (std::uint64_t i = 0; i < draws; ++i)
    ++counts[sample_any(3, rng).index()];
  const double expected = draws / 8.0;
  const double sigma = std::sqrt(draws * (1.0 / 8) * (7.0 / 8));
  for (auto c : counts)
    EXPECT_NEAR(static_cast<double>(c), expected, 4.0 * sigma);
}

TEST(SampleExcluding, NeverReturnsTheExcludedPoint) {
  RandomSource rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Point x = sample_any(n, rng);
    const Point y = sample_excluding(x, rng);
    EXPECT_EQ(y.arity(), n);
    EXPECT_NE(y, x);
  }
}

TEST(SampleExcluding, UniqueCandidateAtArityOne) {
  RandomSource rng(3);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(sample_excluding(Point::from_bits({0}), rng),
              Point::from_bits({1}));
    EXPECT_EQ(sample_excluding(Point::from_bits({1}), rng),
              Point::from_bits({0}));
  }
  EXPECT_THROW(sample_excluding(Point(0), rng), std::invalid_argument);
}

TEST(SampleExcluding, UniformOverTheRest) {
  RandomSource rng(19);
  const Point x = Point::from_bits({1, 0, 1});
  std::map<std::uint64_t, std::uint64_t> seen;
  for (std::uint64_t i = 0; i < kDraws; ++i)
    ++seen[sample_excluding(x, rng).index()];
  EXPECT_EQ(seen.count(x.index()), 0u);
  std::vector<std::uint64_t> counts;
  for (std::uint64_t idx = 0; idx < 8; ++idx)
    if (idx != x.index()) counts.push_back(seen[idx]);
  ASSERT_EQ(counts.size(), 7u);
  expect_uniform(counts, kDraws, "sample_excluding n=3");
}

TEST(SampleExcludingPoles, WeightAlwaysInteriorAndUniform) {
  for (int n : {2, 4}) {
    RandomSource rng(5 * n);
    std::map<std::uint64_t, std::uint64_t> seen;
    for (std::uint64_t i = 0; i < kDraws; ++i) {
      const Point p = sample_excluding_poles(n, rng);
      EXPECT_GE(p.weight(), 1);
      EXPECT_LE(p.weight(), n - 1);
      ++seen[p.index()];
    }
    std::vector<std::uint64_t> counts;
    for (std::uint64_t idx = 1; idx + 1 < (std::uint64_t{1} << n); ++idx)
      counts.push_back(seen[idx]);
    expect_uniform(counts, kDraws,
                   "sample_excluding_poles n=" + std::to_string(n));
  }
  RandomSource rng(0);
  EXPECT_THROW(sample_excluding_poles(1, rng), std::invalid_argument);
}

TEST(SampleSameWeight, UniqueCandidateAtArityTwo) {
  RandomSource rng(23);
  for (int i = 0; i < 50; ++i)
    EXPECT_EQ(sample_same_weight_excluding(Point::from_bits({0, 1}), rng),
              Point::from_bits({1, 0}));
}

TEST(SampleSameWeight, UniformOverTheLevel) {
  RandomSource rng(29);
  const Point x = Point::from_bits({1, 1, 0, 0});
  std::map<std::uint64_t, std::uint64_t> seen;
  for (std::uint64_t i = 0; i < kDraws; ++i) {
    const Point y = sample_same_weight_excluding(x, rng);
    EXPECT_EQ(y.weight(), 2);
    EXPECT_NE(y, x);
    ++seen[y.index()];
  }
  EXPECT_EQ(seen.size(), 5u);  // C(4,2) - 1 candidates
  std::vector<std::uint64_t> counts;
  for (const auto& [idx, c] : seen) counts.push_back(c);
  expect_uniform(counts, kDraws, "sample_same_weight n=4 w=2");
}

TEST(SampleSameWeight, LargerLevel) {
  RandomSource rng(31);
  const Point x = Point::from_bits({1, 1, 1, 0, 0, 0});
  std::map<std::uint64_t, std::uint64_t> seen;
  for (std::uint64_t i = 0; i < kDraws; ++i)
    ++seen[sample_same_weight_excluding(x, rng).index()];
  EXPECT_EQ(seen.size(), 19u);  // C(6,3) - 1
  std::vector<std::uint64_t> counts;
  for (const auto& [idx, c] : seen) counts.push_back(c);
  expect_uniform(counts, kDraws, "sample_same_weight n=6 w=3");
}

TEST(SampleSameWeight, RejectsPoles) {
  RandomSource rng(1);
  EXPECT_THROW(sample_same_weight_excluding(Point::from_bits({0, 0}), rng),
               std::invalid_argument);
  EXPECT_THROW(sample_same_weight_excluding(Point::from_bits({1, 1}), rng),
               std::invalid_argument);
}

TEST(SampleAssignment, EmptySetAndExactKeys) {
  RandomSource rng(2);
  EXPECT_TRUE(sample_assignment({}, rng).empty());
  const Assignment a = sample_assignment({2, 5, 7}, rng);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.count(2) && a.count(5) && a.count(7));
}

TEST(SampleAssignment, UniformOverAssignments) {
  RandomSource rng(37);
  std::vector<std::uint64_t> counts(4, 0);
  for (std::uint64_t i = 0; i < kDraws; ++i) {
    const Assignment a = sample_assignment({1, 2}, rng);
    ++counts[(a.at(1) ? 1 : 0) | (a.at(2) ? 2 : 0)];
  }
  expect_uniform(counts, kDraws, "sample_assignment S={1,2}");
}

TEST(RandomSource, SameSeedSameSequence) {
  RandomSource a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  RandomSource c(42), d(43);
  bool differ = false;
  for (int i = 0; i < 100; ++i) differ |= c.next_u64() != d.next_u64();
  EXPECT_TRUE(differ);
}

TEST(RandomSource, SameSeedSameDraws) {
  RandomSource a(42), b(42);
  for (int i = 0; i < 100; ++i)
    EXPECT_EQ(sample_any(8, a), sample_any(8, b));
}

TEST(RandomSource, ChildStreamsAreIndependentAndReproducible) {
  const RandomSource root(7);
  RandomSource c1 = root.child(1);
  RandomSource c1_again = root.child(1);
  RandomSource c2 = root.child(2);
  EXPECT_EQ(c1.next_u64(), c1_again.next_u64());
  bool differ = false;
  for (int i = 0; i < 10; ++i) differ |= c1.next_u64() != c2.next_u64();
  EXPECT_TRUE(differ);
}

// Frozen draws pin the generator identity across releases: SplitMix64 with
// golden-ratio increment, seeded directly with the given value.
TEST(RandomSource, GoldenSequence) {
  RandomSource rng(42);
  EXPECT_EQ(rng.next_u64(), 13679457532755275413ULL);
  EXPECT_EQ(rng.next_u64(), 2949826092126892291ULL);
  EXPECT_EQ(rng.next_u64(), 5139283748462763858ULL);
  EXPECT_EQ(rng.next_u64(), 6349198060258255764ULL);
}

TEST(RandomSource, BelowIsUnbiasedOnSmallBounds) {
  RandomSource rng(13);
  std::vector<std::uint64_t> counts(6, 0);
  for (std::uint64_t i = 0; i < kDraws; ++i) ++counts[rng.below(6)];
  expect_uniform(counts, kDraws, "below(6)");
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

}  // namespace
}  // namespace qsym
