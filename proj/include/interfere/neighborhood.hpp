#pragma once

#include <optional>
#include <string>
#include <vector>

#include "interfere/graph.hpp"
#include "interfere/labeling.hpp"

namespace interfere {

/// N, N̄ or N[.] viewed as a labeling V -> 2^V.
struct NbdLabelingReport {
  bool injective = false;
  bool has_empty_label = false;
  /// Present iff injective and no label is empty.
  std::optional<SetLabeling> labeling;
  /// A colliding vertex pair, or the vertex with an empty label.
  std::vector<Vertex> failure_witness;
};

NbdLabelingReport nbd_labeling(const Graph& g);
NbdLabelingReport cnbd_labeling(const Graph& g);
NbdLabelingReport closed_nbd_labeling(const Graph& g);

/// Outcome of a characterisation check, with the rule that decided it.
struct RuleVerdict {
  bool holds = false;
  /// Stable snake_case identifier, e.g. "holds", "not_point_determining".
  std::string rule;
  std::optional<Vertex> vertex;
  /// Both equivalent forms of the deciding condition evaluated identically.
  bool forms_agree = true;
  explicit operator bool() const { return holds; }
};

/// N is an interference of D (I = K_n): G point-determining without isolated
/// vertices, and every u outside D has d(u, D) <= 2 and, when no member of D
/// is at distance 2, a neighbour in D sharing a triangle with u.
RuleVerdict nbd_interference_of(const Graph& g, const Bitset& d);

/// N is a complete interference: point-determining, n >= 2, diameter <= 2,
/// every edge in a triangle.
bool nbd_complete(const Graph& g);

/// N is an interference of {v}.
RuleVerdict nbd_singleton(const Graph& g, Vertex v);
/// N is an interference of V \ {v}. G must be connected.
RuleVerdict nbd_allbut(const Graph& g, Vertex v);
/// Every two distinct vertices have a common neighbour.
bool is_two_path_complete(const Graph& g);

/// N̄ is an interference of D: G point-determining, and every u outside D
/// adjacent to all of D has a non-neighbour not adjacent to all of D.
RuleVerdict cnbd_interference_of(const Graph& g, const Bitset& d);

/// N̄ is a complete interference: point-determining and N(u) ∪ N(v) != V
/// for every edge uv.
bool cnbd_complete(const Graph& g);

enum class CnbdRule { Regular, DegreeSum, Distance2, None };
const char* to_string(CnbdRule r);

/// First sufficient degree rule that applies (regular with n > 2k; every
/// pair of degrees sums below n; pairs at distance 2 sum to at most n and
/// all other pairs below n). Point-determinacy is not part of the rules.
CnbdRule cnbd_sufficient(const Graph& g);

/// Checks u -> N[u] against every minimal dominating set of I = G with the
/// definitional predicate. rule is "not_injective" when N[.] collides.
RuleVerdict closed_nbd_universal_selfcheck(const Graph& g);

}  // namespace interfere
