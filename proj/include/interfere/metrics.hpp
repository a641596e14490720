#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "interfere/graph.hpp"

namespace interfere {

Bitset neighborhood(const Graph& g, Vertex u);
/// V \ N(u). Always contains u.
Bitset complemented_neighborhood(const Graph& g, Vertex u);
/// N(u) with u added.
Bitset closed_neighborhood(const Graph& g, Vertex u);
/// Vertices at distance exactly 2 from u.
Bitset second_neighborhood(const Graph& g, Vertex u);

/// Single-source BFS.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
Distance distance(const Graph& g, Vertex u, Vertex v);
/// min over D of d(u, v). Throws PreconditionError on empty D.
Distance distance_to_set(const Graph& g, Vertex u, const Bitset& d);
/// Multi-source BFS: d(x, D) for every x.
std::vector<Distance> distances_to_set(const Graph& g, const Bitset& d);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), rows_(n * n, Distance::infinity()) {}

  std::size_t order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return rows_[u * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return rows_[u * n_ + v]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> rows_;
};

/// All-pairs distances, one BFS per source, sources fanned out over OpenMP
/// threads.
DistanceMatrix all_pairs_distances(const Graph& g);

namespace serial {
DistanceMatrix all_pairs_distances(const Graph& g);
}  // namespace serial

/// Infinity for disconnected graphs; 0 for K1 and the empty graph.
Distance diameter(const Graph& g);
bool is_connected(const Graph& g);
/// Vertex sets of connected components, ordered by smallest member.
std::vector<Bitset> components(const Graph& g);

bool is_point_determining(const Graph& g);
bool edge_in_triangle(const Graph& g, const Edge& e);
bool has_isolated_vertex(const Graph& g);

inline constexpr std::size_t kDefaultExactCap = 16;

/// Exact independence number by branch and bound. Throws ResourceError when
/// the order exceeds `cap`.
std::size_t independence_number(const Graph& g, std::size_t cap = kDefaultExactCap);

/// The common degree when the graph is regular (K0 is not regular).
std::optional<std::size_t> regular_degree(const Graph& g);
/// (min, max) degree; (0, 0) for the empty graph.
std::pair<std::size_t, std::size_t> min_max_degree(const Graph& g);
std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace interfere
