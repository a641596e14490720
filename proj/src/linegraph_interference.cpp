#include "interfere/linegraph_interference.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "interfere/errors.hpp"
#include "interfere/interference.hpp"
#include "interfere/metrics.hpp"

namespace interfere {

namespace {

// Edges of g sharing an endpoint with edge i (excluding i).
struct EdgeAdjacency {
  std::vector<Bitset> nbrs;

  explicit EdgeAdjacency(const Graph& g) {
    const auto m = g.size();
    std::vector<Bitset> incident(g.order(), Bitset(m));
    for (std::size_t i = 0; i < m; ++i) {
      incident[g.edge(i).u].set(i);
      incident[g.edge(i).v].set(i);
    }
    nbrs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      Bitset b = incident[g.edge(i).u] | incident[g.edge(i).v];
      b.reset(i);
      nbrs.push_back(std::move(b));
    }
  }
};

std::size_t edges_within(const Graph& g, const Bitset& vertices) {
  std::size_t count = 0;
  for (const auto& e : g.edges())
    if (vertices.test(e.u) && vertices.test(e.v)) ++count;
  return count;
}

// Exactly four vertices spanned by a path.
bool is_sandwich(const Graph& g, const Bitset& comp) {
  if (comp.count() != 4) return false;
  auto vs = comp.to_vector();
  std::sort(vs.begin(), vs.end());
  do {
    bool path = true;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
      if (!g.adjacent(static_cast<Vertex>(vs[i]), static_cast<Vertex>(vs[i + 1]))) path = false;
    if (path) return true;
  } while (std::next_permutation(vs.begin(), vs.end()));
  return false;
}

struct ComponentScan {
  std::size_t isolated_edges = 0;
  std::vector<Bitset> sandwiches;
};

ComponentScan scan_components(const Graph& g) {
  ComponentScan s;
  for (const auto& c : components(g)) {
    if (c.count() == 2 && edges_within(g, c) == 1) ++s.isolated_edges;
    if (is_sandwich(g, c)) s.sandwiches.push_back(c);
  }
  return s;
}

void require_edges(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("graph has no edges");
}

void require_edge_set(const Graph& g, const EdgeSet& d) {
  if (d.size() != g.size())
    throw PreconditionError("edge set has universe " + std::to_string(d.size()) + ", graph has " +
                            std::to_string(g.size()) + " edges");
  if (d.none()) throw PreconditionError("edge set D must be nonempty");
}

void require_connected_order5(const Graph& g, const char* what) {
  if (g.order() < 5 || !is_connected(g))
    throw HypothesisError(std::string(what) + ": graph must be connected of order >= 5");
}

// Every edge outside D has a neighbouring edge that has a neighbouring edge
// in D; returns the first edge that fails.
std::optional<std::size_t> second_neighbour_gap(const EdgeAdjacency& adj, const EdgeSet& d) {
  for (std::size_t e = 0; e < adj.nbrs.size(); ++e) {
    if (d.test(e)) continue;
    bool ok = false;
    adj.nbrs[e].for_each([&](std::size_t f) {
      if (!ok && adj.nbrs[f].intersects(d)) ok = true;
    });
    if (!ok) return e;
  }
  return std::nullopt;
}

RuleVerdict verdict(bool holds, std::string rule, std::optional<Vertex> v = std::nullopt) {
  return {holds, std::move(rule), v, true};
}

}  // namespace

LgInjectivity nL_injective(const Graph& g) {
  require_edges(g);
  auto scan = scan_components(g);
  LgInjectivity out;
  out.isolated_edges = scan.isolated_edges;
  out.sandwich_components = std::move(scan.sandwiches);
  out.injective = out.isolated_edges <= 1 && out.sandwich_components.empty();
  return out;
}

RuleVerdict nL_interference_of(const Graph& g, const EdgeSet& d) {
  require_edges(g);
  require_edge_set(g, d);
  const auto scan = scan_components(g);
  if (scan.isolated_edges > 0) return verdict(false, "k2_component");
  if (!scan.sandwiches.empty()) return verdict(false, "sandwich_component");
  const EdgeAdjacency adj(g);
  if (auto gap = second_neighbour_gap(adj, d))
    return verdict(false, "edge_too_far_from_d", static_cast<Vertex>(*gap));
  return verdict(true, "holds");
}

RuleVerdict nL_singleton(const Graph& g, std::size_t f) {
  require_edges(g);
  if (f >= g.size()) throw PreconditionError("edge index " + std::to_string(f) + " out of range");
  RuleVerdict out = [&] {
    Bitset touched(g.order());
    for (const auto& e : g.edges()) touched.set(e.u).set(e.v);
    if (!is_connected(induced_subgraph(g, touched).graph)) return verdict(false, "not_connected");
    if (g.size() < 2) return verdict(false, "single_edge");
    if (is_sandwich(g, touched)) return verdict(false, "sandwich_component");
    const EdgeAdjacency adj(g);
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (e == f) continue;
      bool ok = false;
      adj.nbrs[e].for_each([&](std::size_t x) {
        if (adj.nbrs[x].test(f)) ok = true;
      });
      if (!ok) return verdict(false, "edge_too_far_from_f", static_cast<Vertex>(e));
    }
    return verdict(true, "holds");
  }();
  out.forms_agree = nL_interference_of(g, Bitset(g.size(), {f})).holds == out.holds;
  return out;
}

NlCompleteReport nL_complete(const Graph& g) {
  if (g.order() < 3 || !is_connected(g))
    throw HypothesisError("nL_complete: graph must be connected of order >= 3");
  NlCompleteReport r;
  r.sandwich_free = !is_sandwich(g, Bitset::full(g.order()));

  const auto m = g.size();
  r.line_diameter_at_most_2 = true;
  for (std::size_t i = 0; i < m && r.line_diameter_at_most_2; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge& a = g.edge(i);
      const Edge& b = g.edge(j);
      if (a.shares_endpoint(b)) continue;
      if (!g.adjacent(a.u, b.u) && !g.adjacent(a.u, b.v) && !g.adjacent(a.v, b.u) &&
          !g.adjacent(a.v, b.v)) {
        r.line_diameter_at_most_2 = false;
        break;
      }
    }

  r.pendant_edges_ok = true;
  for (const auto& e : g.edges()) {
    const auto du = g.degree(e.u);
    const auto dv = g.degree(e.v);
    if ((du == 1 || dv == 1) && du < 3 && dv < 3) r.pendant_edges_ok = false;
  }

  r.adjacent_pair_clause = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) continue;
    const auto nb = g.neighbors(v).to_vector();
    if (nb.size() == 2 && !g.adjacent(static_cast<Vertex>(nb[0]), static_cast<Vertex>(nb[1])))
      r.adjacent_pair_clause = false;
  }

  const auto lg = line_graph(g);
  const auto labels = nbd_labeling(lg.graph);
  r.oracle = labels.labeling && is_complete_interference(*labels.labeling);
  r.holds = r.oracle;
  r.flagged = r.sandwich_free && r.line_diameter_at_most_2 && r.pendant_edges_ok && !r.oracle;
  return r;
}

RuleVerdict cnbdL_interference_of(const Graph& g, const EdgeSet& d) {
  require_connected_order5(g, "cnbdL_interference_of");
  require_edge_set(g, d);
  const EdgeAdjacency adj(g);
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (d.test(e) || !d.is_subset_of(adj.nbrs[e])) continue;
    const Edge& ee = g.edge(e);
    bool escape = false;
    for (std::size_t f = 0; f < g.size() && !escape; ++f) {
      if (f == e || adj.nbrs[e].test(f)) continue;
      const Edge& ff = g.edge(f);
      bool all_between = true;
      d.for_each([&](std::size_t x) {
        const Edge& dx = g.edge(x);
        const bool between = (ee.has_endpoint(dx.u) && ff.has_endpoint(dx.v)) ||
                             (ee.has_endpoint(dx.v) && ff.has_endpoint(dx.u));
        if (!between) all_between = false;
      });
      if (!all_between) escape = true;
    }
    if (!escape) return verdict(false, "d_between_e_and_every_f", static_cast<Vertex>(e));
  }
  return verdict(true, "holds");
}

SizeRuleReport cnbdL_size_rule(const Graph& g, const EdgeSet& d) {
  require_connected_order5(g, "cnbdL_size_rule");
  require_edge_set(g, d);
  if (d.count() < 5) throw HypothesisError("cnbdL_size_rule: D must contain at least five edges");
  SizeRuleReport r;
  r.interference = cnbdL_interference_of(g, d).holds;
  const EdgeAdjacency adj(g);
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (d.test(e)) continue;
    if (adj.nbrs[e].count() + 1 == g.size()) {
      r.universal_edge = e;
      break;
    }
  }
  r.holds = r.interference || r.universal_edge.has_value();
  return r;
}

bool cnbdL_indep_rule(const Graph& g) {
  if (!is_connected(g)) return false;
  return independence_number(g) + 4 < g.order();
}

bool cnbdL_regular_rule(const Graph& g) {
  return g.order() >= 8 && is_connected(g) && regular_degree(g).has_value();
}

NbdLabelingReport nL_labeling(const Graph& g) {
  require_edges(g);
  return nbd_labeling(line_graph(g).graph);
}

NbdLabelingReport cnbdL_labeling(const Graph& g) {
  require_edges(g);
  return cnbd_labeling(line_graph(g).graph);
}

EdgeSet parse_edge_set(const Graph& g, std::string_view text) {
  EdgeSet out(g.size());
  std::size_t i = 0;
  auto parse_num = [&](std::string_view tok, std::string_view part) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw FormatError("edge token '" + std::string(tok) + "' is not of the form u-v");
    return v;
  };
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) break;
    const auto tok = text.substr(start, i - start);
    const auto dash = tok.find('-');
    if (dash == std::string_view::npos)
      throw FormatError("edge token '" + std::string(tok) + "' is not of the form u-v");
    const Vertex a = parse_num(tok, tok.substr(0, dash));
    const Vertex b = parse_num(tok, tok.substr(dash + 1));
    const auto idx = g.edge_index(a, b);
    if (!idx) throw PreconditionError("'" + std::string(tok) + "' is not an edge of the graph");
    out.set(*idx);
  }
  return out;
}

}  // namespace interfere
