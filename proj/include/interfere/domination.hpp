#pragma once

#include <vector>

#include "interfere/graph.hpp"
#include "interfere/metrics.hpp"

namespace interfere {

/// True iff D is nonempty and every vertex is in D or adjacent to D.
bool is_dominating(const Graph& g, const Bitset& d);

/// D dominates and dropping any single vertex breaks domination.
bool is_minimal_dominating(const Graph& g, const Bitset& d);

/// Inclusion-minimal dominating sets of a fixed graph, sorted by size then
/// lexicographically by member list.
class DominatingSetFamily {
 public:
  DominatingSetFamily() = default;
  DominatingSetFamily(std::size_t order, std::vector<Bitset> sets);

  std::size_t order() const { return order_; }
  const std::vector<Bitset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

 private:
  std::size_t order_ = 0;
  std::vector<Bitset> sets_;
};

/// Enumerates every minimal dominating set by branching on the undominated
/// vertex with the fewest remaining dominators. Throws ResourceError when
/// the order exceeds `cap` (at most 64).
DominatingSetFamily minimal_dominating_sets(const Graph& g, std::size_t cap = kDefaultExactCap);

}  // namespace interfere
