#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "interfere/graph.hpp"

namespace interfere::families {

// Vertex numbering is part of the contract; tests and CLI output depend on it.

/// Path 0-1-...-(n-1), n >= 1.
Graph path(std::size_t n);
/// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle(std::size_t n);
/// K_n, n >= 1.
Graph complete(std::size_t n);
/// K_{r,s}: side U = 0..r-1, side W = r..r+s-1.
Graph complete_bipartite(std::size_t r, std::size_t s);
/// K_{1,k} with centre 0 and leaves 1..k.
Graph star(std::size_t k);
/// k disjoint edges (2i, 2i+1).
Graph matching(std::size_t k);
/// W_n: cycle 0..n-1, centre n. W_3 is K_4.
Graph wheel(std::size_t n);
/// D_n^(m): m copies of K_n glued at vertex 0. Copy c occupies
/// 1 + c(n-1) .. (c+1)(n-1).
Graph windmill(std::size_t n, std::size_t m);
/// Complete blocks of the given orders sharing cut-vertex 0, blocks laid out
/// consecutively after 0. At least two blocks, each of order >= 2.
Graph husimi(const std::vector<std::size_t>& block_orders);
/// Star n-gon: cycle 0..n-1, apex n+i on cycle edge (i, i+1 mod n).
Graph star_polygon(std::size_t n);
/// Helm H_n: wheel W_n plus pendant n+1+i on cycle vertex i.
Graph helm(std::size_t n);
/// Crown C_n o K_1: cycle 0..n-1 plus pendant n+i on cycle vertex i.
Graph crown(std::size_t n);
Graph petersen();
/// Edgeless graph on n vertices.
Graph empty(std::size_t n);

/// Parses the family DSL ("wheel:5", "windmill:3,4", "kpq:2,5", ...).
/// Throws FormatError on unknown names or malformed parameters and
/// PreconditionError on out-of-range parameters.
Graph from_spec(std::string_view spec);

/// Names accepted by from_spec.
std::vector<std::string> names();

}  // namespace interfere::families
