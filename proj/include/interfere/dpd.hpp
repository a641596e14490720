#pragma once

#include <cstddef>
#include <vector>

#include "interfere/graph.hpp"
#include "interfere/labeling.hpp"

namespace interfere {

/// f_M(u) = {d(u, v) : v in M}, each pattern a subset of {0..diameter}.
struct DistancePattern {
  std::size_t diameter = 0;
  std::vector<Bitset> patterns;

  /// The patterns as a labeling over ground set {0..diameter}.
  SetLabeling as_labeling() const;
};

/// Requires G connected and M nonempty.
DistancePattern distance_pattern(const Graph& g, const Bitset& m);
/// f_M injective.
bool is_dpd_set(const Graph& g, const Bitset& m);

/// ceil((1 + sqrt(8n - 7)) / 2), computed in integers.
std::size_t path_dpd_size(std::size_t n);

/// Distance-pattern distinguishing set of P_n (n >= 4, vertices 0-based) of
/// size path_dpd_size(n): positions j(j-1)/2 that fit on the path, completed
/// when the formula asks for one more vertex than fit.
Bitset path_dpd_set(std::size_t n);

/// f_M is injective and is an interference of M with I = K_n.
bool dpd_interference_check(const Graph& g, const Bitset& m);

}  // namespace interfere
