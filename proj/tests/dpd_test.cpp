#include "interfere/dpd.hpp"

#include <gtest/gtest.h>

#include "interfere/catalog.hpp"
#include "interfere/errors.hpp"
#include "interfere/families.hpp"

namespace interfere {
namespace {

TEST(DpdTest, Patterns) {
  const auto p = distance_pattern(families::path(4), Bitset(4, {0, 1}));
  EXPECT_EQ(p.diameter, 3u);
  EXPECT_EQ(p.patterns[0], Bitset(4, {0, 1}));
  EXPECT_EQ(p.patterns[3], Bitset(4, {2, 3}));
  EXPECT_THROW(distance_pattern(families::path(4), Bitset(4)), PreconditionError);
  EXPECT_THROW(distance_pattern(families::matching(2), Bitset(4, {0})), PreconditionError);
}

TEST(DpdTest, Examples) {
  EXPECT_TRUE(is_dpd_set(families::path(4), Bitset(4, {0, 1, 3})));
  EXPECT_FALSE(is_dpd_set(families::cycle(4), Bitset(4, {0, 2})));
}

TEST(DpdTest, PathSizes) {
  EXPECT_EQ(path_dpd_size(4), 3u);
  EXPECT_EQ(path_dpd_size(7), 4u);
  EXPECT_EQ(path_dpd_size(11), 5u);
  EXPECT_EQ(path_dpd_set(4), Bitset(4, {0, 1, 3}));
  EXPECT_EQ(path_dpd_set(7), Bitset(7, {0, 1, 3, 6}));
  EXPECT_EQ(path_dpd_set(11), Bitset(11, {0, 1, 3, 6, 10}));
  EXPECT_EQ(path_dpd_set(5), Bitset(5, {0, 1, 2, 4}));
}

TEST(DpdTest, PathConstructionIsSound) {
  for (std::size_t n = 4; n <= 40; ++n) {
    const auto g = families::path(n);
    const auto m = path_dpd_set(n);
    EXPECT_EQ(m.count(), path_dpd_size(n)) << n;
    EXPECT_TRUE(is_dpd_set(g, m)) << n;
    EXPECT_TRUE(dpd_interference_check(g, m)) << n;
  }
}

// A single vertex never yields an injective interference pattern.
TEST(DpdTest, SingletonNeverSuffices) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& g : connected_graphs(n))
      for (Vertex v = 0; v < n; ++v) EXPECT_FALSE(dpd_interference_check(g, Bitset(n, {v})));
}

}  // namespace
}  // namespace interfere
