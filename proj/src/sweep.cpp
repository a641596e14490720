#include "interfere/sweep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>

#include <omp.h>

#include "interfere/bits.hpp"
#include "interfere/catalog.hpp"
#include "interfere/domination.hpp"
#include "interfere/dpd.hpp"
#include "interfere/errors.hpp"
#include "interfere/families.hpp"
#include "interfere/graph_io.hpp"
#include "interfere/index_search.hpp"
#include "interfere/interference.hpp"
#include "interfere/linegraph_interference.hpp"
#include "interfere/metrics.hpp"
#include "interfere/neighborhood.hpp"
#include "interfere/oracles.hpp"

namespace interfere {

namespace {

constexpr std::size_t kMaxReportedFailures = 50;
constexpr std::size_t kNbdSampleOrder = 7;
constexpr std::size_t kNbdSamples = 500;
constexpr std::size_t kLineGraphSamples = 300;

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> details;

  void check(bool agree, const std::function<std::string()>& detail) {
    ++cases;
    if (!agree) {
      ++mismatches;
      if (details.size() < kMaxReportedFailures) details.push_back(detail());
    }
  }
};

std::string set_text(const Bitset& s) {
  std::string out = "{";
  s.for_each([&](std::size_t v) { out += (out.size() > 1 ? "," : "") + std::to_string(v); });
  return out + "}";
}

bool nbd_oracle(const Graph& g, const Bitset& d) {
  const auto rep = nbd_labeling(g);
  return rep.labeling && oracle::is_interference(families::complete(g.order()), d, rep.labeling->labels());
}

bool cnbd_oracle(const Graph& g, const Bitset& d) {
  const auto rep = cnbd_labeling(g);
  return rep.labeling && oracle::is_interference(families::complete(g.order()), d, rep.labeling->labels());
}

void nbd_case(const Graph& g, const Bitset& d, Tally& t) {
  const auto nv = nbd_interference_of(g, d);
  t.check(nv.holds == nbd_oracle(g, d) && nv.forms_agree, [&] { return "N on D=" + set_text(d); });
  const auto cv = cnbd_interference_of(g, d);
  t.check(cv.holds == cnbd_oracle(g, d) && cv.forms_agree, [&] { return "complemented N on D=" + set_text(d); });
}

void nbd_graph_checks(const Graph& g, Tally& t) {
  const auto n_rep = nbd_labeling(g);
  const bool n_oracle = n_rep.labeling && oracle::labels_pairwise_intersecting(n_rep.labeling->labels());
  t.check(nbd_complete(g) == n_oracle, [] { return std::string("N complete"); });
  const auto c_rep = cnbd_labeling(g);
  const bool c_oracle = c_rep.labeling && oracle::labels_pairwise_intersecting(c_rep.labeling->labels());
  t.check(cnbd_complete(g) == c_oracle, [] { return std::string("complemented N complete"); });
  if (is_point_determining(g) && cnbd_sufficient(g) != CnbdRule::None)
    t.check(c_oracle, [&] { return std::string("sufficient rule ") + to_string(cnbd_sufficient(g)); });
  if (is_point_determining(g) && g.order() >= 2 && is_two_path_complete(g))
    t.check(n_oracle, [] { return std::string("2-path-complete"); });
}

Tally suite_nbd(const Graph& g, std::mt19937_64&) {
  Tally t;
  const auto n = g.order();
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) nbd_case(g, Bitset::from_mask(n, mask), t);
  nbd_graph_checks(g, t);
  return t;
}

Tally suite_lg_injectivity(const Graph& g, std::mt19937_64&) {
  Tally t;
  if (g.size() == 0) return t;
  const bool oracle_injective = oracle::line_neighborhoods_injective(g);
  t.check(nL_injective(g).injective == oracle_injective, [] { return std::string("N_L injective"); });
  t.check(cnbdL_labeling(g).injective == oracle_injective,
          [] { return std::string("complemented N_L injective"); });
  return t;
}

Bitset random_nonempty(std::size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << size) - 1);
  return Bitset::from_mask(size, pick(rng));
}

Tally suite_lg_interference(const Graph& g, std::mt19937_64& rng) {
  Tally t;
  const auto m = g.size();
  if (m == 0 || m > 63) return t;
  const auto lg = line_graph(g);
  const auto kl = families::complete(m);
  const auto n_rep = nbd_labeling(lg.graph);
  const auto c_rep = cnbd_labeling(lg.graph);
  const bool big = g.order() >= 5 && is_connected(g);

  std::vector<Bitset> sets;
  if (m < 9) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) sets.push_back(Bitset::from_mask(m, mask));
  } else {
    for (std::size_t i = 0; i < kLineGraphSamples; ++i) sets.push_back(random_nonempty(m, rng));
  }
  for (const auto& d : sets) {
    const bool oracle_n = n_rep.labeling && oracle::is_interference(kl, d, n_rep.labeling->labels());
    t.check(nL_interference_of(g, d).holds == oracle_n, [&] { return "N_L on D=" + set_text(d); });
    if (!big) continue;
    const bool oracle_c = c_rep.labeling && oracle::is_interference(kl, d, c_rep.labeling->labels());
    t.check(cnbdL_interference_of(g, d).holds == oracle_c,
            [&] { return "complemented N_L on D=" + set_text(d); });
    if (d.count() >= 5)
      t.check(cnbdL_size_rule(g, d).holds, [&] { return "size rule on D=" + set_text(d); });
  }

  const bool c_complete = c_rep.labeling && oracle::labels_pairwise_intersecting(c_rep.labeling->labels());
  if (cnbdL_indep_rule(g)) t.check(c_complete, [] { return std::string("independence rule"); });
  if (cnbdL_regular_rule(g)) t.check(c_complete, [] { return std::string("regular rule"); });
  if (g.order() >= 3 && is_connected(g)) {
    const auto r = nL_complete(g);
    t.check(r.oracle == (r.sandwich_free && r.line_diameter_at_most_2 && r.adjacent_pair_clause),
            [] { return std::string("N_L complete clauses"); });
  }
  return t;
}

Tally suite_domination(const Graph& g, std::mt19937_64&) {
  Tally t;
  const auto fast = minimal_dominating_sets(g).sets();
  t.check(fast == oracle::minimal_dominating_sets(g), [] { return std::string("minimal dominating sets"); });
  const auto all = oracle::all_dominating_sets(g);
  const std::uint32_t limit = std::uint32_t{1} << g.order();
  std::size_t dominating = 0;
  for (std::uint32_t mask = 1; mask < limit; ++mask)
    if (is_dominating(g, Bitset::from_mask(g.order(), mask))) ++dominating;
  t.check(dominating == all.size(), [] { return std::string("dominating set count"); });
  return t;
}

Tally suite_universality(const Graph& g, std::mt19937_64&) {
  Tally t;
  if (g.order() == 0) return t;
  const auto f = build_complete_interference(g.order());
  for (const auto& d : oracle::minimal_dominating_sets(g))
    t.check(oracle::is_interference(g, d, f.labels()), [&] { return "construction on D=" + set_text(d); });
  const auto closed = closed_nbd_labeling(g);
  if (closed.injective)
    t.check(closed_nbd_universal_selfcheck(g).holds, [] { return std::string("closed neighbourhood"); });
  return t;
}

Tally suite_dpd_singleton(const Graph& g, std::mt19937_64&) {
  Tally t;
  if (g.order() < 2) return t;
  for (Vertex v = 0; v < g.order(); ++v)
    t.check(!dpd_interference_check(g, Bitset(g.order(), {v})), [&] { return "M={" + std::to_string(v) + "}"; });
  return t;
}

using GraphSuite = Tally (*)(const Graph&, std::mt19937_64&);

struct SuiteSpec {
  GraphSuite run;
  bool connected_only;
  std::size_t min_order;
  std::size_t max_order;
};

const std::map<std::string, SuiteSpec>& graph_suites() {
  static const std::map<std::string, SuiteSpec> suites = {
      {"nbd-oracle", {suite_nbd, true, 1, kMaxCatalogOrder}},
      {"lg-injectivity", {suite_lg_injectivity, true, 2, kMaxCatalogOrder}},
      {"lg-interference", {suite_lg_interference, true, 2, 7}},
      {"domination-oracle", {suite_domination, false, 1, 7}},
      {"universality", {suite_universality, false, 1, 7}},
      {"dpd-singleton", {suite_dpd_singleton, true, 2, kMaxCatalogOrder}},
  };
  return suites;
}

void finish(SweepReport& report, std::vector<SweepFailure> failures) {
  std::sort(failures.begin(), failures.end(), [](const SweepFailure& a, const SweepFailure& b) {
    return std::tie(a.graph_hash, a.graph6, a.detail) < std::tie(b.graph_hash, b.graph6, b.detail);
  });
  if (failures.size() > kMaxReportedFailures) failures.resize(kMaxReportedFailures);
  report.failures = std::move(failures);
}

std::uint64_t stable_hash(const Graph& g) {
  if (g.order() <= kMaxCanonicalOrder) return canonical_hash(g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : to_edge_list(g)) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string safe_graph6(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? to_graph6(g) : std::string("n=") + std::to_string(g.order());
}

SweepReport run_graph_suite(const SweepOptions& o, const SuiteSpec& spec) {
  std::vector<Graph> graphs;
  if (o.graphs) {
    graphs = *o.graphs;
  } else {
    if (o.max_n > spec.max_order)
      throw ResourceError("suite " + o.suite + ": max_n " + std::to_string(o.max_n) + " exceeds cap " +
                          std::to_string(spec.max_order));
    for (std::size_t n = std::max(o.min_n, spec.min_order); n <= o.max_n; ++n) {
      auto level = spec.connected_only ? connected_graphs(n) : all_graphs(n);
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
  }

  SweepReport report;
  report.suite = o.suite;
  report.graphs = graphs.size();

  const auto count = static_cast<std::int64_t>(graphs.size());
  std::vector<Tally> tallies(graphs.size());
  std::vector<std::uint64_t> hashes(graphs.size());
  std::exception_ptr failure;
  const int threads = o.threads > 0 ? o.threads : omp_get_max_threads();
  const bool sampled = o.suite == "nbd-oracle";

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto& g = graphs[i];
      hashes[i] = stable_hash(g);
      std::mt19937_64 rng(o.seed ^ hashes[i]);
      if (!(sampled && g.order() >= kNbdSampleOrder)) tallies[i] = spec.run(g, rng);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  // Larger orders of the neighbourhood suite: a fixed number of (G, D)
  // pairs drawn serially from the seed, then checked in parallel.
  if (sampled) {
    std::map<std::size_t, std::vector<std::size_t>> by_order;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if (graphs[i].order() >= kNbdSampleOrder) by_order[graphs[i].order()].push_back(i);
    for (const auto& [n, members] : by_order) {
      std::mt19937_64 rng(o.seed ^ (0x9e3779b97f4a7c15ull * n));
      std::vector<std::pair<std::size_t, Bitset>> pairs;
      std::uniform_int_distribution<std::size_t> which(0, members.size() - 1);
      for (std::size_t k = 0; k < kNbdSamples; ++k) {
        const auto gi = members[which(rng)];
        pairs.emplace_back(gi, random_nonempty(n, rng));
      }
      std::vector<Tally> local(pairs.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k)
        nbd_case(graphs[pairs[k].first], pairs[k].second, local[k]);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto& t = tallies[pairs[k].first];
        t.cases += local[k].cases;
        t.mismatches += local[k].mismatches;
        t.details.insert(t.details.end(), local[k].details.begin(), local[k].details.end());
      }
      for (auto gi : members) nbd_graph_checks(graphs[gi], tallies[gi]);
    }
  }

  std::vector<SweepFailure> failures;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.cases += tallies[i].cases;
    report.mismatches += tallies[i].mismatches;
    for (auto& d : tallies[i].details) failures.push_back({hashes[i], safe_graph6(graphs[i]), d});
  }
  finish(report, std::move(failures));
  return report;
}

SweepReport run_index_kn(const SweepOptions& o) {
  if (o.max_n > 10) throw ResourceError("suite index-kn: max_n exceeds cap 10");
  SweepReport report;
  report.suite = o.suite;
  std::vector<SweepFailure> failures;
  for (std::size_t n = std::max<std::size_t>(o.min_n, 1); n <= o.max_n; ++n) {
    const auto g = families::complete(n);
    ++report.graphs;
    IndexOptions opts;
    opts.search.threads = o.threads;
    const auto r = interference_index(g, PatternFamily::all_dominating(), opts);
    const std::size_t expected = 1 + ceil_log2(n);
    bool ok = r.index == expected;
    for (const auto& p : r.trace)
      if (p.ground_size + 1 == r.index && p.found) ok = false;
    ++report.cases;
    if (!ok) {
      ++report.mismatches;
      failures.push_back({stable_hash(g), safe_graph6(g),
                          "K" + std::to_string(n) + ": index " + std::to_string(r.index) + ", expected " +
                              std::to_string(expected)});
    }
  }
  finish(report, std::move(failures));
  return report;
}

SweepReport run_construction(const SweepOptions& o) {
  if (o.max_n > 64) throw ResourceError("suite construction: max_n exceeds cap 64");
  SweepReport report;
  report.suite = o.suite;
  std::vector<SweepFailure> failures;
  for (std::size_t n = std::max<std::size_t>(o.min_n, 1); n <= o.max_n; ++n) {
    const auto f = build_complete_interference(n);
    ++report.graphs;
    ++report.cases;
    const bool ok = validate_labeling(f) && f.ground_size() == 1 + ceil_log2(n) &&
                    oracle::labels_injective(f.labels()) && oracle::labels_pairwise_intersecting(f.labels());
    if (!ok) {
      ++report.mismatches;
      failures.push_back({n, "", "construction n=" + std::to_string(n)});
    }
  }
  finish(report, std::move(failures));
  return report;
}

}  // namespace

std::vector<std::string> sweep_suites() {
  return {"nbd-oracle", "lg-injectivity", "lg-interference", "index-kn",
          "domination-oracle", "universality", "construction", "dpd-singleton"};
}

SweepReport run_sweep(const SweepOptions& options) {
  if (options.min_n > options.max_n) throw PreconditionError("sweep: min_n exceeds max_n");
  if (options.suite == "index-kn") return run_index_kn(options);
  if (options.suite == "construction") return run_construction(options);
  const auto& suites = graph_suites();
  const auto it = suites.find(options.suite);
  if (it == suites.end()) throw PreconditionError("unknown sweep suite '" + options.suite + "'");
  return run_graph_suite(options, it->second);
}

}  // namespace interfere
