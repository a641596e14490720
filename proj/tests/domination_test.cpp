#include "interfere/domination.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "interfere/errors.hpp"
#include "interfere/families.hpp"
#include "interfere/oracles.hpp"
#include "test_support.hpp"

namespace interfere {
namespace {

TEST(DominationTest, SmallFamilies) {
  const auto k4 = minimal_dominating_sets(families::complete(4));
  ASSERT_EQ(k4.size(), 4u);
  for (const auto& s : k4.sets()) EXPECT_EQ(s.count(), 1u);

  // P4: {0,2}, {0,3}, {1,2}, {1,3}.
  const auto p4 = minimal_dominating_sets(families::path(4));
  ASSERT_EQ(p4.size(), 4u);
  EXPECT_EQ(p4.sets()[0], Bitset(4, {0, 2}));
  EXPECT_EQ(p4.sets()[3], Bitset(4, {1, 3}));

  // K_{2,3}: U, W and the six cross pairs.
  EXPECT_EQ(minimal_dominating_sets(families::complete_bipartite(2, 3)).size(), 2u + 6u);
}

TEST(DominationTest, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 12;
    const auto g = testing::random_graph(n, 0.3, rng);
    EXPECT_EQ(minimal_dominating_sets(g).sets(), oracle::minimal_dominating_sets(g)) << "round " << i;
  }
}

TEST(DominationTest, PredicatesAgreeWithOracleList) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    const auto g = testing::random_graph(7, 0.35, rng);
    const auto all = oracle::all_dominating_sets(g);
    const auto mins = oracle::minimal_dominating_sets(g);
    const auto contains = [](const std::vector<Bitset>& v, const Bitset& b) {
      return std::find(v.begin(), v.end(), b) != v.end();
    };
    for (std::uint32_t s = 1; s < 128; ++s) {
      const auto d = Bitset::from_mask(7, s);
      EXPECT_EQ(is_dominating(g, d), contains(all, d));
      EXPECT_EQ(is_minimal_dominating(g, d), contains(mins, d));
    }
  }
}

TEST(DominationTest, EmptySetNeverDominates) {
  EXPECT_FALSE(is_dominating(families::complete(3), Bitset(3)));
}

TEST(DominationTest, CapIsEnforced) {
  EXPECT_THROW(minimal_dominating_sets(families::empty(17)), ResourceError);
  EXPECT_EQ(minimal_dominating_sets(families::empty(20), 20).size(), 1u);
}

}  // namespace
}  // namespace interfere
