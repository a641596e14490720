#include "interfere/index_search.hpp"

#include <random>

#include <gtest/gtest.h>

#include "interfere/bits.hpp"
#include "interfere/errors.hpp"
#include "interfere/families.hpp"
#include "interfere/oracles.hpp"
#include "test_support.hpp"

namespace interfere {
namespace {

std::vector<Bitset> minimal_sets(const Graph& g) { return minimal_dominating_sets(g).sets(); }

TEST(IndexSearchTest, Bounds) {
  EXPECT_EQ(index_lower_bound(1), 1u);
  EXPECT_EQ(index_lower_bound(3), 2u);
  EXPECT_EQ(index_lower_bound(4), 3u);
  EXPECT_EQ(universal_upper_bound(4), 3u);
  EXPECT_EQ(universal_upper_bound(5), 4u);
}

TEST(IndexSearchTest, CompleteGraphIndices) {
  const std::vector<std::size_t> expected{2, 3, 3, 4, 4, 4, 4};
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto r = interference_index(families::complete(n), PatternFamily::all_dominating());
    EXPECT_EQ(r.index, expected[n - 2]) << "n=" << n;
    EXPECT_EQ(r.index, 1 + ceil_log2(n));
    EXPECT_TRUE(is_complete_interference(r.witness));
  }
}

TEST(IndexSearchTest, WitnessIsValidAndTraceIsMonotone) {
  const auto g = families::path(5);
  const auto r = interference_index(g, PatternFamily::all_dominating());
  EXPECT_TRUE(is_pattern_interference(g, PatternFamily::all_dominating(), r.witness).holds);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.back().ground_size, r.index);
  EXPECT_TRUE(r.trace.back().found);
  for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) EXPECT_FALSE(r.trace[i].found);
  EXPECT_GE(r.index, r.lower_bound);
  EXPECT_LE(r.index, r.upper_bound);
  EXPECT_LE(r.k_min, r.k_max);
  EXPECT_EQ(ceil_log2(5 + r.k_min), r.index);
}

TEST(IndexSearchTest, AgreesWithOracleSearch) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 6;
    const auto g = testing::random_graph(n, 0.45, rng);
    const auto sets = minimal_sets(g);
    for (std::size_t m = index_lower_bound(n); m <= 4; ++m) {
      const bool expected = oracle::find_interference(g, sets, m).has_value();
      EXPECT_EQ(exists_interference(g, sets, m).found(), expected) << "round " << i << " m=" << m;
      EXPECT_EQ(serial::exists_interference(g, sets, m).found(), expected);
    }
  }
}

TEST(IndexSearchTest, ParallelWitnessMatchesSerial) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    const auto g = testing::random_graph(7, 0.4, rng);
    const auto sets = minimal_sets(g);
    const std::size_t m = universal_upper_bound(7) - 1;
    const auto par = exists_interference(g, sets, m);
    const auto ser = serial::exists_interference(g, sets, m);
    ASSERT_EQ(par.found(), ser.found());
    if (par.found()) {
      EXPECT_EQ(par.witness->labels(), ser.witness->labels());
    }
  }
}

TEST(IndexSearchTest, SymmetryBreakingPreservesVerdict) {
  std::mt19937_64 rng(61);
  SearchOptions off;
  off.symmetry_breaking = false;
  for (int i = 0; i < 40; ++i) {
    const auto g = testing::random_graph(6, 0.5, rng);
    const auto sets = minimal_sets(g);
    for (std::size_t m = 3; m <= 4; ++m) {
      const auto a = exists_interference(g, sets, m);
      const auto b = exists_interference(g, sets, m, off);
      EXPECT_EQ(a.found(), b.found());
      if (!a.found()) {
        EXPECT_LE(a.nodes, b.nodes);
      }
    }
  }
}

TEST(IndexSearchTest, InjectivityLimitIsInfeasible) {
  const auto g = families::complete(4);
  EXPECT_FALSE(exists_interference(g, PatternFamily::singletons(), 2).found());
}

TEST(IndexSearchTest, BudgetExhaustionIsAnError) {
  SearchOptions tiny;
  tiny.node_budget = 5;
  const auto g = families::cycle(8);
  EXPECT_THROW(exists_interference(g, minimal_sets(g), 4, tiny), ResourceError);
  EXPECT_THROW(serial::exists_interference(g, minimal_sets(g), 4, tiny), ResourceError);
}

TEST(IndexSearchTest, NonDominatingMemberIsRejected) {
  const auto g = families::path(4);
  const std::vector<Bitset> sets{Bitset(4, {0})};
  EXPECT_THROW(interference_index(g, sets), NoDominatingSetError);
}

TEST(IndexSearchTest, MaxGroundIsHonoured) {
  IndexOptions opts;
  opts.max_m = 2;
  EXPECT_THROW(interference_index(families::complete(4), PatternFamily::all_dominating(), opts),
               ResourceError);
}

TEST(IndexSearchTest, SearchLimitsAreEnforced) {
  const auto g = families::complete(3);
  EXPECT_THROW(exists_interference(g, PatternFamily::singletons(), kMaxSearchGround + 1),
               ResourceError);
}

}  // namespace
}  // namespace interfere
