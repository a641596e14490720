#include "interfere/sweep.hpp"

#include <gtest/gtest.h>

#include "interfere/errors.hpp"
#include "interfere/families.hpp"

namespace interfere {
namespace {

SweepReport run(const std::string& suite, std::size_t max_n, std::uint64_t seed = 1) {
  SweepOptions o;
  o.suite = suite;
  o.max_n = max_n;
  o.seed = seed;
  return run_sweep(o);
}

TEST(SweepTest, SmallSuitesPass) {
  for (const auto& suite : sweep_suites()) {
    const std::size_t max_n = suite == "construction" ? 16 : suite == "index-kn" ? 5 : 4;
    const auto r = run(suite, max_n);
    EXPECT_TRUE(r.pass()) << suite << ": " << (r.failures.empty() ? "" : r.failures[0].detail);
    EXPECT_GT(r.cases, 0u) << suite;
  }
}

TEST(SweepTest, DeterministicForSeed) {
  const auto a = run("nbd-oracle", 7, 9);
  const auto b = run("nbd-oracle", 7, 9);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.graphs, b.graphs);
  EXPECT_EQ(a.mismatches, b.mismatches);
}

TEST(SweepTest, ExplicitGraphList) {
  SweepOptions o;
  o.suite = "nbd-oracle";
  o.graphs = std::vector<Graph>{families::petersen(), families::wheel(5)};
  const auto r = run_sweep(o);
  EXPECT_EQ(r.graphs, 2u);
  EXPECT_TRUE(r.pass());
}

TEST(SweepTest, Errors) {
  EXPECT_THROW(run("no-such-suite", 4), PreconditionError);
  SweepOptions o;
  o.suite = "nbd-oracle";
  o.min_n = 5;
  o.max_n = 4;
  EXPECT_THROW(run_sweep(o), PreconditionError);
}

}  // namespace
}  // namespace interfere
