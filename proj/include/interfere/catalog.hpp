#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interfere/graph.hpp"

namespace interfere {

inline constexpr std::size_t kMaxCanonicalOrder = 11;
inline constexpr std::size_t kMaxCatalogOrder = 9;

/// Isomorphism-invariant relabelling of g (n <= kMaxCanonicalOrder):
/// equitable colour refinement followed by a pruned search for the
/// maximal adjacency code among cell-respecting orderings.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
/// FNV-1a of the canonical graph6 string.
std::uint64_t canonical_hash(const Graph& g);

/// All connected graphs on n vertices up to isomorphism, in canonical form,
/// sorted by graph6. Built by vertex augmentation of the (n-1)-vertex
/// catalog with canonical-form isomorph rejection; parents are processed in
/// parallel.
std::vector<Graph> connected_graphs(std::size_t n);
/// All graphs (connected or not) on n vertices up to isomorphism.
std::vector<Graph> all_graphs(std::size_t n);

namespace serial {
std::vector<Graph> connected_graphs(std::size_t n);
}  // namespace serial

}  // namespace interfere
