#include "interfere/neighborhood.hpp"

#include <unordered_map>

#include "interfere/errors.hpp"
#include "interfere/interference.hpp"
#include "interfere/metrics.hpp"
#include "interfere/oracles.hpp"

namespace interfere {

namespace {

NbdLabelingReport report_for(const Graph& g, std::vector<Bitset> labels) {
  if (g.order() == 0) throw PreconditionError("neighbourhood labeling of the empty graph");
  NbdLabelingReport r;
  r.injective = true;
  std::unordered_map<Bitset, Vertex, BitsetHash> seen;
  for (Vertex v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = seen.emplace(labels[v], v);
    if (!inserted && r.injective) {
      r.injective = false;
      r.failure_witness = {it->second, v};
    }
    if (labels[v].none() && !r.has_empty_label) {
      r.has_empty_label = true;
      if (r.injective) r.failure_witness = {v};
    }
  }
  if (r.injective && !r.has_empty_label)
    r.labeling = SetLabeling(GroundSet(g.order()), std::move(labels));
  return r;
}

RuleVerdict verdict(bool holds, std::string rule, std::optional<Vertex> v = std::nullopt) {
  return {holds, std::move(rule), v, true};
}

void require_nonempty(const Graph& g, const Bitset& d) {
  g.check_vertex_set(d);
  if (d.none()) throw PreconditionError("vertex set D must be nonempty");
}

// Some v in D adjacent to u with a common neighbour (uv in a triangle).
bool triangle_form(const Graph& g, Vertex u, const Bitset& d) {
  bool found = false;
  (d & g.neighbors(u)).for_each([&](std::size_t v) {
    if (g.neighbors(u).intersects(g.neighbors(static_cast<Vertex>(v)))) found = true;
  });
  return found;
}

// Not every member of D ∩ N(u) is isolated in the subgraph induced by N(u).
bool induced_form(const Graph& g, Vertex u, const Bitset& d) {
  const Bitset& nu = g.neighbors(u);
  bool found = false;
  (d & nu).for_each([&](std::size_t v) {
    const Bitset inside = g.neighbors(static_cast<Vertex>(v)) & nu;
    if (inside.any()) found = true;
  });
  return found;
}

Bitset common_neighbourhood(const Graph& g, const Bitset& d) {
  Bitset common = Bitset::full(g.order());
  d.for_each([&](std::size_t v) { common &= g.neighbors(static_cast<Vertex>(v)); });
  return common;
}

}  // namespace

NbdLabelingReport nbd_labeling(const Graph& g) {
  std::vector<Bitset> labels;
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(neighborhood(g, v));
  return report_for(g, std::move(labels));
}

NbdLabelingReport cnbd_labeling(const Graph& g) {
  std::vector<Bitset> labels;
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(complemented_neighborhood(g, v));
  return report_for(g, std::move(labels));
}

NbdLabelingReport closed_nbd_labeling(const Graph& g) {
  std::vector<Bitset> labels;
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(closed_neighborhood(g, v));
  return report_for(g, std::move(labels));
}

RuleVerdict nbd_interference_of(const Graph& g, const Bitset& d) {
  require_nonempty(g, d);
  if (!is_point_determining(g)) return verdict(false, "not_point_determining");
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).none()) return verdict(false, "isolated_vertex", v);

  const auto dist = distances_to_set(g, d);
  RuleVerdict out = verdict(true, "holds");
  for (Vertex u = 0; u < g.order(); ++u) {
    if (d.test(u)) continue;
    const bool by_triangle = triangle_form(g, u, d);
    if (by_triangle != induced_form(g, u, d)) out.forms_agree = false;
    if (!out.holds) continue;
    if (dist[u] > Distance(2)) {
      out = {false, "distance_exceeds_two", u, out.forms_agree};
      continue;
    }
    const bool d_at_two = (d & second_neighborhood(g, u)).any();
    if (!d_at_two && !by_triangle) out = {false, "no_triangle", u, out.forms_agree};
  }
  return out;
}

bool nbd_complete(const Graph& g) {
  if (g.order() < 2 || !is_point_determining(g)) return false;
  if (diameter(g) > Distance(2)) return false;
  for (const auto& e : g.edges())
    if (!edge_in_triangle(g, e)) return false;
  return true;
}

RuleVerdict nbd_singleton(const Graph& g, Vertex v) {
  g.check_vertex(v);
  RuleVerdict out = [&] {
    if (!is_point_determining(g)) return verdict(false, "not_point_determining");
    if (g.order() < 2) return verdict(false, "order_below_two");
    const auto dist = bfs_distances(g, v);
    for (Vertex u = 0; u < g.order(); ++u)
      if (dist[u] > Distance(2)) return verdict(false, "distance_exceeds_two", u);
    const Bitset& nv = g.neighbors(v);
    std::optional<Vertex> lonely;
    nv.for_each([&](std::size_t u) {
      if (!lonely && !(g.neighbors(static_cast<Vertex>(u)) & nv).any()) lonely = static_cast<Vertex>(u);
    });
    if (lonely) return verdict(false, "isolated_in_neighbourhood", lonely);
    return verdict(true, "holds");
  }();
  out.forms_agree = nbd_interference_of(g, Bitset(g.order(), {v})).holds == out.holds;
  return out;
}

RuleVerdict nbd_allbut(const Graph& g, Vertex v) {
  g.check_vertex(v);
  if (!is_connected(g)) throw HypothesisError("nbd_allbut: graph must be connected");
  RuleVerdict out = [&] {
    if (!is_point_determining(g)) return verdict(false, "not_point_determining");
    if (has_isolated_vertex(g)) return verdict(false, "isolated_vertex");
    bool found = false;
    g.neighbors(v).for_each([&](std::size_t u) {
      if (g.degree(static_cast<Vertex>(u)) >= 2) found = true;
    });
    return found ? verdict(true, "holds") : verdict(false, "no_neighbour_of_degree_two", v);
  }();
  if (g.order() >= 2) {
    Bitset d = Bitset::full(g.order());
    d.reset(v);
    out.forms_agree = nbd_interference_of(g, d).holds == out.holds;
  }
  return out;
}

bool is_two_path_complete(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.neighbors(u).intersects(g.neighbors(v))) return false;
  return true;
}

RuleVerdict cnbd_interference_of(const Graph& g, const Bitset& d) {
  require_nonempty(g, d);
  if (!is_point_determining(g)) return verdict(false, "not_point_determining");
  const Bitset common = common_neighbourhood(g, d);
  RuleVerdict out = verdict(true, "holds");
  for (Vertex u = 0; u < g.order(); ++u) {
    if (d.test(u)) continue;
    // Direct form: u adjacent to all of D needs a non-neighbour that is not.
    bool direct = true;
    if (d.is_subset_of(g.neighbors(u))) {
      direct = false;
      for (Vertex x = 0; x < g.order(); ++x)
        if (x != u && !g.adjacent(u, x) && !d.is_subset_of(g.neighbors(x))) direct = true;
    }
    // Set form over the common neighbourhood of D.
    const bool set_form = !common.test(u) || !complemented_neighborhood(g, u).is_subset_of(common);
    if (direct != set_form) out.forms_agree = false;
    if (out.holds && !direct) out = {false, "nonneighbours_adjacent_to_all_of_d", u, out.forms_agree};
  }
  return out;
}

bool cnbd_complete(const Graph& g) {
  if (!is_point_determining(g)) return false;
  for (const auto& e : g.edges())
    if ((g.neighbors(e.u) | g.neighbors(e.v)).count() == g.order()) return false;
  return true;
}

const char* to_string(CnbdRule r) {
  switch (r) {
    case CnbdRule::Regular: return "regular_rule";
    case CnbdRule::DegreeSum: return "degree_sum_rule";
    case CnbdRule::Distance2: return "distance2_rule";
    case CnbdRule::None: return "none";
  }
  return "unknown";
}

CnbdRule cnbd_sufficient(const Graph& g) {
  const auto n = g.order();
  if (auto k = regular_degree(g); k && n > 2 * *k) return CnbdRule::Regular;
  bool sums_below = true;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.degree(u) + g.degree(v) >= n) sums_below = false;
  if (sums_below) return CnbdRule::DegreeSum;
  const auto dist = all_pairs_distances(g);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const auto sum = g.degree(u) + g.degree(v);
      if (dist(u, v) == Distance(2) ? sum > n : sum >= n) return CnbdRule::None;
    }
  return CnbdRule::Distance2;
}

RuleVerdict closed_nbd_universal_selfcheck(const Graph& g) {
  auto report = closed_nbd_labeling(g);
  if (!report.injective) return verdict(false, "not_injective");
  for (const auto& d : oracle::minimal_dominating_sets(g)) {
    if (!oracle::is_interference(g, d, report.labeling->labels()))
      return verdict(false, "oracle_rejects", static_cast<Vertex>(d.first()));
  }
  return verdict(true, "holds");
}

}  // namespace interfere
