#include "interfere/graph.hpp"

#include <algorithm>
#include <string>

#include "interfere/errors.hpp"

namespace interfere {

std::uint32_t Distance::value() const {
  if (!is_finite()) throw PreconditionError("Distance::value() on infinite distance");
  return hops_;
}

Graph::Graph(std::size_t n) : adjacency_(n, Bitset(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const auto& raw : edges) {
    if (raw.u >= n || raw.v >= n)
      throw PreconditionError("edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                              ") has an endpoint >= n=" + std::to_string(n));
    if (raw.u == raw.v) throw PreconditionError("self-loop at vertex " + std::to_string(raw.u));
    const Edge e = Edge::canonical(raw.u, raw.v);
    if (adjacency_[e.u].test(e.v))
      throw PreconditionError("duplicate edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ")");
    adjacency_[e.u].set(e.v);
    adjacency_[e.v].set(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].test(v);
}

const Bitset& Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return adjacency_[u];
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a >= order() || b >= order() || a == b) return std::nullopt;
  const Edge e = Edge::canonical(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

const Edge& Graph::edge(std::size_t index) const {
  if (index >= edges_.size()) throw PreconditionError("edge index out of range");
  return edges_[index];
}

void Graph::check_vertex(Vertex u) const {
  if (u >= order())
    throw PreconditionError("vertex " + std::to_string(u) + " out of range (n=" +
                            std::to_string(order()) + ")");
}

void Graph::check_vertex_set(const Bitset& s) const {
  if (s.size() != order())
    throw PreconditionError("vertex set universe " + std::to_string(s.size()) +
                            " does not match graph order " + std::to_string(order()));
}

LineGraph line_graph(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("line graph of a graph without edges");
  const auto& es = g.edges();
  std::vector<Edge> ledges;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].shares_endpoint(es[j]))
        ledges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return {Graph(es.size(), ledges), es};
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& vertices) {
  g.check_vertex_set(vertices);
  std::vector<Vertex> original;
  std::vector<Vertex> position(g.order(), 0);
  vertices.for_each([&](std::size_t v) {
    position[v] = static_cast<Vertex>(original.size());
    original.push_back(static_cast<Vertex>(v));
  });
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (vertices.test(e.u) && vertices.test(e.v)) edges.push_back({position[e.u], position[e.v]});
  return {Graph(original.size(), edges), std::move(original)};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = g.edges();
  for (const auto& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = g.edges();
  for (const auto& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < h.order(); ++b) edges.push_back({a, b + shift});
  return Graph(g.order() + h.order(), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph(g.order(), edges);
}

}  // namespace interfere
