#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "interfere/interference.hpp"

namespace interfere {

/// ceil(log2(n + 1)): injectivity alone forces this many ground elements.
std::size_t index_lower_bound(std::size_t n);
/// ceil(log2(2n)): the complete-interference construction always fits.
std::size_t universal_upper_bound(std::size_t n);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::size_t kMaxSearchGround = 8;
inline constexpr std::size_t kMaxSearchOrder = 64;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// 0 = OpenMP default team size.
  int threads = 0;
  /// Restrict branching to labels whose new ground elements extend the
  /// already-used prefix {0..k-1} contiguously. Verdict-preserving.
  bool symmetry_breaking = true;
  /// Minimal-dominating enumeration cap used when expanding symbolic
  /// patterns.
  std::size_t pattern_cap = kDefaultExactCap;
};

struct DecisionResult {
  std::optional<SetLabeling> witness;
  std::uint64_t nodes = 0;
  bool found() const { return witness.has_value(); }
};

/// Exhaustive decision: is there a P-interference over a ground set of size
/// m? Throws ResourceError when the node budget runs out (distinct from a
/// "none" answer) or when m > kMaxSearchGround / n > kMaxSearchOrder.
/// Top-level branches are distributed over OpenMP threads; the witness is the
/// one a depth-first serial search would find first.
DecisionResult exists_interference(const Graph& interference_graph,
                                   const std::vector<Bitset>& pattern_sets, std::size_t m,
                                   const SearchOptions& options = {});
DecisionResult exists_interference(const Graph& interference_graph, const PatternFamily& pattern,
                                   std::size_t m, const SearchOptions& options = {});

namespace serial {
DecisionResult exists_interference(const Graph& interference_graph,
                                   const std::vector<Bitset>& pattern_sets, std::size_t m,
                                   const SearchOptions& options = {});
}  // namespace serial

struct PhaseTrace {
  std::size_t ground_size = 0;
  bool found = false;
  std::uint64_t nodes = 0;
};

struct IndexResult {
  std::size_t index = 0;
  SetLabeling witness{GroundSet(1), {}};
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  std::uint64_t nodes_explored = 0;
  std::vector<PhaseTrace> trace;
  /// Range of k in [1, n] with index == ceil(log2(n + k)).
  std::size_t k_min = 0;
  std::size_t k_max = 0;
};

struct IndexOptions {
  SearchOptions search;
  /// Stop scanning after this ground size (ResourceError if not reached).
  std::optional<std::size_t> max_m;
};

/// Smallest m admitting a P-interference, scanning upward from
/// index_lower_bound(n). Throws NoDominatingSetError when some member of the
/// expanded family is not dominating (no labeling can then work).
IndexResult interference_index(const Graph& interference_graph, const PatternFamily& pattern,
                               const IndexOptions& options = {});
IndexResult interference_index(const Graph& interference_graph,
                               const std::vector<Bitset>& pattern_sets,
                               const IndexOptions& options = {});

}  // namespace interfere
