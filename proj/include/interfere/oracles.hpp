#pragma once

// Definitional brute-force routes. Nothing here calls the optimised paths
// it is meant to check; sweeps and tests compare against these.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "interfere/graph.hpp"
#include "interfere/labeling.hpp"

namespace interfere::oracle {

/// Every nonempty subset filtered by the closed-neighbourhood definition
/// (n <= 20).
std::vector<Bitset> all_dominating_sets(const Graph& g);
/// Subsets that dominate and have no dominating proper subset, by checking
/// all subsets (n <= 16).
std::vector<Bitset> minimal_dominating_sets(const Graph& g);

/// The interference condition checked literally, without the library predicate.
bool is_interference(const Graph& interference_graph, const Bitset& d,
                     const std::vector<Bitset>& labels);
bool labels_injective(const std::vector<Bitset>& labels);
bool labels_pairwise_intersecting(const std::vector<Bitset>& labels);

/// Plain backtracking over injective assignments of nonempty subsets of
/// {0..m-1}, no propagation and no symmetry breaking (n <= 8, m <= 4).
std::optional<std::vector<std::uint32_t>> find_interference(
    const Graph& interference_graph, const std::vector<Bitset>& pattern_sets, std::size_t m);

/// b_r(m) over all r-combinations of subsets, no symmetry reduction.
std::size_t b_r(std::size_t r, std::size_t m);

/// Open neighbourhoods of the materialised line graph compared pairwise.
bool line_neighborhoods_injective(const Graph& g);

}  // namespace interfere::oracle
