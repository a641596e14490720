#include "interfere/neighborhood.hpp"

#include <random>

#include <gtest/gtest.h>

#include "interfere/errors.hpp"
#include "interfere/families.hpp"
#include "interfere/metrics.hpp"
#include "interfere/oracles.hpp"
#include "test_support.hpp"

namespace interfere {
namespace {

Bitset range_set(std::size_t size, std::size_t lo, std::size_t hi) {
  Bitset s(size);
  for (std::size_t i = lo; i < hi; ++i) s.set(i);
  return s;
}

bool oracle_verdict(const Graph& g, const Bitset& d, const NbdLabelingReport& rep) {
  if (!rep.labeling) return false;
  return oracle::is_interference(families::complete(g.order()), d, rep.labeling->labels());
}

TEST(NbdLabelingTest, Validity) {
  const auto c4 = nbd_labeling(families::cycle(4));
  EXPECT_FALSE(c4.injective);
  EXPECT_EQ(c4.failure_witness, (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(nbd_labeling(families::empty(1)).has_empty_label);
  EXPECT_TRUE(nbd_labeling(families::cycle(5)).labeling.has_value());
  EXPECT_TRUE(cnbd_labeling(families::cycle(5)).labeling.has_value());
  EXPECT_FALSE(cnbd_labeling(families::cycle(5)).has_empty_label);
}

TEST(NbdTest, InterferenceExamples) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto sp = families::star_polygon(n);
    EXPECT_TRUE(nbd_interference_of(sp, range_set(2 * n, 0, n)).holds) << n;
    EXPECT_TRUE(nbd_interference_of(sp, range_set(2 * n, n, 2 * n)).holds) << n;
    const auto helm = families::helm(n);
    EXPECT_TRUE(nbd_interference_of(helm, range_set(2 * n + 1, n + 1, 2 * n + 1)).holds) << n;
    EXPECT_TRUE(nbd_interference_of(helm, range_set(2 * n + 1, 0, n)).holds) << n;
    const auto crown = families::crown(n);
    EXPECT_TRUE(nbd_interference_of(crown, range_set(2 * n, n, 2 * n)).holds) << n;
    EXPECT_TRUE(nbd_interference_of(crown, range_set(2 * n, 0, n)).holds) << n;
  }
  const auto p5 = nbd_interference_of(families::path(5), Bitset(5, {0}));
  EXPECT_FALSE(p5.holds);
  EXPECT_THROW(nbd_interference_of(families::path(3), Bitset(3)), PreconditionError);
}

TEST(NbdTest, CompleteExamples) {
  for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(nbd_complete(families::wheel(n)), n != 4) << n;
  // W_4 has twin rim vertices, so N is not injective there.
  EXPECT_FALSE(nbd_labeling(families::wheel(4)).injective);
  for (std::size_t n = 3; n <= 4; ++n)
    for (std::size_t m = 2; m <= 3; ++m) EXPECT_TRUE(nbd_complete(families::windmill(n, m)));
  EXPECT_TRUE(nbd_complete(families::husimi({3, 3})));
  EXPECT_TRUE(nbd_complete(families::husimi({3, 4, 5})));
  EXPECT_FALSE(nbd_complete(families::cycle(5)));
  EXPECT_FALSE(nbd_complete(families::empty(1)));
}

TEST(NbdTest, SingletonAndAllBut) {
  EXPECT_TRUE(nbd_singleton(families::wheel(5), 5).holds);
  EXPECT_FALSE(nbd_singleton(families::wheel(4), 4).holds);
  EXPECT_TRUE(nbd_allbut(families::path(5), 0).holds);
  EXPECT_FALSE(nbd_allbut(families::path(2), 0).holds);
  EXPECT_THROW(nbd_allbut(families::matching(2), 0), HypothesisError);
  EXPECT_THROW(nbd_singleton(families::path(3), 7), PreconditionError);
}

TEST(NbdTest, TwoPathComplete) {
  const auto g = join(families::complete(2), families::path(4));
  EXPECT_TRUE(is_two_path_complete(g));
  EXPECT_TRUE(nbd_complete(g));
  EXPECT_FALSE(is_two_path_complete(families::path(3)));
}

TEST(CnbdTest, Examples) {
  for (Vertex v = 0; v < 5; ++v) EXPECT_TRUE(cnbd_interference_of(families::cycle(5), Bitset(5, {v})).holds);
  EXPECT_FALSE(cnbd_interference_of(families::cycle(3), Bitset(3, {0})).holds);
  EXPECT_FALSE(cnbd_interference_of(families::cycle(4), Bitset(4, {0})).holds);
  for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(cnbd_complete(families::cycle(n)), n >= 5) << n;
  EXPECT_EQ(cnbd_sufficient(families::complete(4)), CnbdRule::None);
  EXPECT_FALSE(cnbd_complete(families::complete(4)));
  EXPECT_EQ(cnbd_sufficient(families::petersen()), CnbdRule::Regular);
  EXPECT_TRUE(cnbd_complete(families::petersen()));
}

TEST(ClosedNbdTest, SelfCheck) {
  EXPECT_TRUE(closed_nbd_universal_selfcheck(families::path(5)).holds);
  EXPECT_TRUE(closed_nbd_universal_selfcheck(families::cycle(6)).holds);
  const auto k2 = closed_nbd_universal_selfcheck(families::complete(2));
  EXPECT_FALSE(k2.holds);
  EXPECT_EQ(k2.rule, "not_injective");
}

TEST(NbdTest, OracleEquivalenceOnRandomGraphs) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + i % 7;
    const auto g = testing::random_graph(n, 0.5, rng);
    const auto d = testing::random_subset(n, rng);
    const auto nv = nbd_interference_of(g, d);
    const auto cv = cnbd_interference_of(g, d);
    EXPECT_EQ(nv.holds, oracle_verdict(g, d, nbd_labeling(g)));
    EXPECT_EQ(cv.holds, oracle_verdict(g, d, cnbd_labeling(g)));
    EXPECT_TRUE(nv.forms_agree);
    EXPECT_TRUE(cv.forms_agree);
    const auto nl = nbd_labeling(g);
    EXPECT_EQ(nbd_complete(g), nl.labeling && oracle::labels_pairwise_intersecting(nl.labeling->labels()));
    const auto cl = cnbd_labeling(g);
    EXPECT_EQ(cnbd_complete(g), cl.labeling && oracle::labels_pairwise_intersecting(cl.labeling->labels()));
    if (cnbd_sufficient(g) != CnbdRule::None && is_point_determining(g)) {
      EXPECT_TRUE(cnbd_complete(g));
    }
  }
}

}  // namespace
}  // namespace interfere
