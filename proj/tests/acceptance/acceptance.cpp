#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "interfere/bits.hpp"
#include "interfere/catalog.hpp"
#include "interfere/cross_intersecting.hpp"
#include "interfere/dpd.hpp"
#include "interfere/families.hpp"
#include "interfere/index_search.hpp"
#include "interfere/linegraph_interference.hpp"
#include "interfere/neighborhood.hpp"
#include "interfere/oracles.hpp"
#include "interfere/sweep.hpp"

namespace {

using namespace interfere;

constexpr double kIndexSecondsPerRun = 60.0;
constexpr double kNbdSweepSeconds = 600.0;
constexpr double kDpdSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240611;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) notes << "; ";
      pass = false;
      notes << what;
    }
  }
};

Bitset range_set(std::size_t size, std::size_t lo, std::size_t hi) {
  Bitset s(size);
  for (std::size_t i = lo; i < hi; ++i) s.set(i);
  return s;
}

SweepReport sweep(const std::string& suite, std::size_t min_n, std::size_t max_n) {
  SweepOptions o;
  o.suite = suite;
  o.min_n = min_n;
  o.max_n = max_n;
  o.seed = kSeed;
  return run_sweep(o);
}

void require_sweep(Outcome& out, const SweepReport& r) {
  std::string detail = r.suite + " mismatches=" + std::to_string(r.mismatches);
  if (!r.failures.empty()) detail += " first=" + r.failures[0].graph6 + " " + r.failures[0].detail;
  out.require(r.pass(), detail);
}

Outcome ac1() {
  Outcome out;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto g = families::complete(n);
    const auto t0 = Clock::now();
    const auto r = interference_index(g, PatternFamily::all_dominating());
    const std::size_t expected = ceil_log2(2 * n);
    out.require(r.index == expected, "K" + std::to_string(n) + " index " + std::to_string(r.index));
    // The phase below the index has to come back empty from the exhaustive search.
    const auto below = serial::exists_interference(g, minimal_dominating_sets(g).sets(), r.index - 1);
    out.require(!below.found(), "K" + std::to_string(n) + " phase index-1 found a labeling");
    const double secs = seconds_since(t0);
    out.require(secs < kIndexSecondsPerRun, "K" + std::to_string(n) + " took " + std::to_string(secs) + "s");
  }
  return out;
}

Outcome ac2() {
  Outcome out;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto g = families::wheel(n);
    const std::vector<Bitset> d{Bitset(n + 1, {n})};
    const auto r = interference_index(g, d);
    out.require(r.index == ceil_log2(n + 2), "W" + std::to_string(n) + " index " + std::to_string(r.index));
  }
  return out;
}

Outcome ac3() {
  Outcome out;
  for (std::size_t m = 2; m <= 5; ++m) {
    const std::size_t brute = oracle::b_r(2, m);
    const std::size_t value = b_r(2, m).b_value;
    const std::size_t law = (std::size_t{1} << m) - 4;
    out.require(brute == value, "b2(" + std::to_string(m) + ") search/brute disagree");
    out.require(brute == law, "b2(" + std::to_string(m) + ")=" + std::to_string(brute) + " expected " +
                                  std::to_string(law));
  }
  for (std::size_t s = 2; s <= 12; ++s) {
    const std::size_t idx = krs_index(2, s);
    out.require(idx == ceil_log2(s + 4), "krs(2," + std::to_string(s) + ")=" + std::to_string(idx));
    if (s <= 5) {
      const auto direct = interference_index(families::complete_bipartite(2, s), PatternFamily::all_dominating());
      out.require(direct.index == idx, "K2," + std::to_string(s) + " search " + std::to_string(direct.index));
    }
  }
  return out;
}

Outcome ac4() {
  Outcome out;
  for (std::size_t r = 3; r <= 4; ++r)
    for (std::size_t s = r; s <= 6; ++s) {
      const std::size_t idx = krs_index(r, s);
      out.require(idx == ceil_log2(r + s + r),
                  "krs(" + std::to_string(r) + "," + std::to_string(s) + ")=" + std::to_string(idx));
    }
  return out;
}

Outcome ac5() {
  Outcome out;
  const auto t0 = Clock::now();
  out.require(connected_graphs(6).size() == 112, "catalog size at n=6");
  require_sweep(out, sweep("nbd-oracle", 1, 6));
  const double secs = seconds_since(t0);
  out.require(secs < kNbdSweepSeconds, "took " + std::to_string(secs) + "s");
  return out;
}

Outcome ac6() {
  Outcome out;
  for (std::size_t n = 3; n <= 8; ++n)
    out.require(nbd_complete(families::wheel(n)), "wheel(" + std::to_string(n) + ") not complete");
  for (std::size_t n = 3; n <= 4; ++n)
    for (std::size_t m = 2; m <= 3; ++m)
      out.require(nbd_complete(families::windmill(n, m)),
                  "windmill(" + std::to_string(n) + "," + std::to_string(m) + ") not complete");
  out.require(nbd_complete(families::husimi({3, 3})), "husimi{3,3} not complete");
  out.require(nbd_complete(families::husimi({3, 4, 5})), "husimi{3,4,5} not complete");
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto tag = std::to_string(n);
    const auto helm = families::helm(n);
    out.require(nbd_interference_of(helm, range_set(2 * n + 1, 0, n)).holds, "helm(" + tag + ") cycle D");
    out.require(nbd_interference_of(helm, range_set(2 * n + 1, n + 1, 2 * n + 1)).holds,
                "helm(" + tag + ") pendant D");
    const auto crown = families::crown(n);
    out.require(nbd_interference_of(crown, range_set(2 * n, 0, n)).holds, "crown(" + tag + ") cycle D");
    out.require(nbd_interference_of(crown, range_set(2 * n, n, 2 * n)).holds, "crown(" + tag + ") pendant D");
    const auto sp = families::star_polygon(n);
    out.require(nbd_interference_of(sp, range_set(2 * n, 0, n)).holds, "star_polygon(" + tag + ") cycle D");
    out.require(nbd_interference_of(sp, range_set(2 * n, n, 2 * n)).holds, "star_polygon(" + tag + ") apex D");
  }
  return out;
}

Outcome ac7() {
  Outcome out;
  for (std::size_t n = 3; n <= 10; ++n)
    out.require(cnbd_complete(families::cycle(n)) == (n >= 5), "C" + std::to_string(n));
  return out;
}

Outcome ac8() {
  Outcome out;
  std::set<std::string> expected_false;
  for (const auto& g : {families::path(4), families::cycle(4), families::complete(4),
                        Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}),
                        Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}})})
    expected_false.insert(canonical_graph6(g));
  std::set<std::string> actual_false;
  for (const auto& g : connected_graphs(4))
    if (!nL_injective(g).injective) actual_false.insert(canonical_graph6(g));
  out.require(actual_false == expected_false, "order-4 obstruction set differs");
  out.require(nL_injective(families::path(5)).injective, "P5");
  for (std::size_t n = 5; n <= 7; ++n)
    for (const auto& g : connected_graphs(n))
      if (!nL_injective(g).injective) {
        out.require(false, "order " + std::to_string(n) + " graph not injective");
        break;
      }
  require_sweep(out, sweep("lg-injectivity", 2, 7));
  return out;
}

Outcome ac9() {
  Outcome out;
  require_sweep(out, sweep("lg-interference", 2, 6));
  for (const auto& [name, g] : {std::pair{"petersen", families::petersen()},
                                std::pair{"K4,4", families::complete_bipartite(4, 4)}}) {
    out.require(cnbdL_regular_rule(g), std::string(name) + " regular rule did not fire");
    const auto rep = cnbdL_labeling(g);
    const bool complete = rep.labeling && oracle::labels_pairwise_intersecting(rep.labeling->labels());
    out.require(complete, std::string(name) + " oracle not complete");
    if (cnbdL_indep_rule(g)) out.require(complete, std::string(name) + " indep rule violated");
  }
  return out;
}

Outcome ac10() {
  Outcome out;
  const auto t0 = Clock::now();
  for (std::size_t n = 4; n <= 40; ++n) {
    const auto g = families::path(n);
    const auto m = path_dpd_set(n);
    const auto tag = "P" + std::to_string(n);
    out.require(m.count() == path_dpd_size(n), tag + " size");
    out.require(is_dpd_set(g, m), tag + " not DPD");
    out.require(dpd_interference_check(g, m), tag + " not an interference");
  }
  require_sweep(out, sweep("dpd-singleton", 2, 6));
  const double secs = seconds_since(t0);
  out.require(secs < kDpdSeconds, "took " + std::to_string(secs) + "s");
  return out;
}

Outcome ac11() {
  Outcome out;
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto f = build_complete_interference(n);
    out.require(is_complete_interference(f), "n=" + std::to_string(n) + " not complete");
    out.require(f.ground_size() == 1 + ceil_log2(n), "n=" + std::to_string(n) + " ground size");
  }
  require_sweep(out, sweep("universality", 1, 5));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"complete-graph index", ac1},       {"fully-joined set", ac2},
      {"b2 law and K2,s index", ac3},      {"K_{r,s} equality window", ac4},
      {"neighbourhood oracle sweep", ac5}, {"family examples", ac6},
      {"complemented cycles", ac7},        {"line-graph injectivity", ac8},
      {"line-graph interference", ac9},    {"path DPD sets", ac10},
      {"construction soundness", ac11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("AC%zu %s %s (%.2fs)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), o.pass ? "" : ": ", o.notes.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
