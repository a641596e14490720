#pragma once

#include <optional>
#include <vector>

#include "interfere/graph.hpp"
#include "interfere/labeling.hpp"
#include "interfere/neighborhood.hpp"

namespace interfere {

/// Edge subsets are Bitsets over G.edges() indices.
using EdgeSet = Bitset;

struct LgInjectivity {
  bool injective = false;
  std::size_t isolated_edges = 0;
  /// Components G' with P4 ⊆ G' ⊆ K4 (exactly four vertices and a
  /// Hamiltonian path).
  std::vector<Bitset> sandwich_components;
};

/// N_L (equivalently N̄_L) is injective: at most one K2 component and no
/// component with P4 ⊆ G' ⊆ K4. Requires at least one edge.
LgInjectivity nL_injective(const Graph& g);

/// N_L is an interference of D ⊆ E(G): no K2 component, no sandwich
/// component, and every edge outside D has a neighbouring edge that has a
/// neighbouring edge in D. Evaluated on G without building L(G).
RuleVerdict nL_interference_of(const Graph& g, const EdgeSet& d);

/// N_L is an interference of {f}: the non-isolated part of G is connected,
/// has at least two edges, is not a P4..K4 sandwich, and every edge is a
/// neighbour of a neighbour of f.
RuleVerdict nL_singleton(const Graph& g, std::size_t f);

struct NlCompleteReport {
  bool sandwich_free = false;
  bool line_diameter_at_most_2 = false;
  bool pendant_edges_ok = false;
  /// Every two adjacent edges va, vb have deg(v) >= 3 or ab ∈ E: the
  /// triangle clause of L(G) written over G.
  bool adjacent_pair_clause = false;
  /// is_complete_interference of N_L on L(G), with validity.
  bool oracle = false;
  bool holds = false;
  /// Unambiguous clauses pass but the oracle rejects.
  bool flagged = false;
};

/// Requires G connected of order >= 3 (HypothesisError otherwise). The final
/// verdict is the definitional oracle on L(G).
NlCompleteReport nL_complete(const Graph& g);

/// N̄_L is an interference of D. Requires G connected of order >= 5.
RuleVerdict cnbdL_interference_of(const Graph& g, const EdgeSet& d);

struct SizeRuleReport {
  bool interference = false;
  std::optional<std::size_t> universal_edge;
  bool holds = false;
};

/// With |D| >= 5: N̄_L is an interference of D, or some edge outside D
/// meets every other edge. Requires G connected, order >= 5.
SizeRuleReport cnbdL_size_rule(const Graph& g, const EdgeSet& d);

/// α(G) < n - 4 for connected G (sufficient for N̄_L complete).
bool cnbdL_indep_rule(const Graph& g);
/// G regular and connected with n >= 8 (sufficient for N̄_L complete).
bool cnbdL_regular_rule(const Graph& g);

/// N_L / N̄_L labelings computed on the materialised line graph.
NbdLabelingReport nL_labeling(const Graph& g);
NbdLabelingReport cnbdL_labeling(const Graph& g);

/// Parses "u-v" tokens separated by commas or whitespace into an edge set
/// of g. Throws FormatError / PreconditionError.
EdgeSet parse_edge_set(const Graph& g, std::string_view text);

}  // namespace interfere
