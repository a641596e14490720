#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "interfere/domination.hpp"
#include "interfere/graph.hpp"
#include "interfere/labeling.hpp"

namespace interfere {

/// A vertex u outside D with no v in D ∩ N(u) whose label meets f(u).
struct Violation {
  Vertex vertex = 0;
  /// D ∩ N_I(u); empty exactly when D fails to dominate u.
  Bitset candidates;
};

struct InterferenceVerdict {
  bool holds = false;
  std::optional<Violation> violation;
  explicit operator bool() const { return holds; }
};

/// f is an interference of D with respect to the interference graph I: every
/// u outside D has a neighbour v in D with f(u) ∩ f(v) nonempty.
/// Throws PreconditionError for empty D, size mismatches or an invalid f.
InterferenceVerdict is_interference(const Graph& interference_graph, const Bitset& d,
                                    const SetLabeling& f);

/// Same predicate phrased as f(u) ∩ f(D ∩ N(u)) != ∅.
bool is_interference_image_form(const Graph& interference_graph, const Bitset& d,
                                const SetLabeling& f);

/// A family of nonempty vertex subsets, explicit or symbolic.
class PatternFamily {
 public:
  enum class Kind { Explicit, AllDominating, AllMinimalDominating, Singletons, CrossPairs };

  static PatternFamily explicit_sets(std::vector<Bitset> sets);
  static PatternFamily all_dominating();
  static PatternFamily all_minimal_dominating();
  static PatternFamily singletons();
  /// Every pair {u, w}, u in U, w in W.
  static PatternFamily cross_pairs(Bitset u_side, Bitset w_side);

  Kind kind() const { return kind_; }
  const std::vector<Bitset>& explicit_members() const { return sets_; }

  /// Concrete member list against I. AllDominating expands to the minimal
  /// dominating sets: f is an interference of every dominating set iff it is
  /// one of every minimal dominating set.
  std::vector<Bitset> expand(const Graph& interference_graph,
                             std::size_t cap = kDefaultExactCap) const;

 private:
  PatternFamily(Kind kind, std::vector<Bitset> sets) : kind_(kind), sets_(std::move(sets)) {}
  Kind kind_;
  std::vector<Bitset> sets_;
};

const char* to_string(PatternFamily::Kind k);

struct PatternVerdict {
  bool holds = false;
  /// First member of the expanded family that fails.
  std::optional<Bitset> failing_set;
  std::optional<Violation> violation;
  std::size_t sets_checked = 0;
  explicit operator bool() const { return holds; }
};

PatternVerdict is_pattern_interference(const Graph& interference_graph,
                                       const PatternFamily& pattern, const SetLabeling& f);
PatternVerdict is_pattern_interference(const Graph& interference_graph,
                                       const std::vector<Bitset>& sets, const SetLabeling& f);

/// Labels pairwise intersect. Throws PreconditionError for an invalid f.
bool is_complete_interference(const SetLabeling& f);

/// Complete interference on n >= 1 vertices over 1 + ceil(log2 n) elements:
/// vertex i gets {0} plus {j + 1 : bit j of i is set}.
SetLabeling build_complete_interference(std::size_t n);

}  // namespace interfere
