#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "interfere/bitset.hpp"

namespace interfere {

using Vertex = std::uint32_t;

/// Undirected edge stored in canonical (min, max) order.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool has_endpoint(Vertex x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const {
    return has_endpoint(o.u) || has_endpoint(o.v);
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Shortest-path length, or infinity between components. No arithmetic is
/// defined on purpose: callers must test is_finite() before using value().
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}
  static constexpr Distance infinity() { return Distance(kInfinite, 0); }

  constexpr bool is_finite() const { return hops_ != kInfinite; }
  std::uint32_t value() const;

  friend constexpr auto operator<=>(const Distance&, const Distance&) = default;

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  constexpr Distance(std::uint32_t raw, int) : hops_(raw) {}
  std::uint32_t hops_ = 0;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);
  /// Throws PreconditionError on self-loops, duplicate edges or out-of-range
  /// endpoints. Endpoint order within an edge is irrelevant.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const;
  const Bitset& neighbors(Vertex u) const;
  std::size_t degree(Vertex u) const { return neighbors(u).count(); }

  /// Edges in canonical order: sorted by (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  const Edge& edge(std::size_t index) const;

  void check_vertex(Vertex u) const;
  void check_vertex_set(const Bitset& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<Bitset> adjacency_;
  std::vector<Edge> edges_;
};

/// Line graph with the edge <-> vertex correspondence: vertex i of `graph`
/// is `edges[i]` of the source graph.
struct LineGraph {
  Graph graph;
  std::vector<Edge> edges;
};

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the source vertex mapped to vertex i.
  std::vector<Vertex> original;
};

LineGraph line_graph(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const Bitset& vertices);
/// Join G + H: disjoint union plus every edge between the two parts. H's
/// vertices are shifted by G.order().
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

}  // namespace interfere
