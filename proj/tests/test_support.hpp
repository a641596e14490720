#pragma once

#include <random>
#include <vector>

#include "interfere/graph.hpp"

namespace interfere::testing {

// G(n, p) with a fixed engine; deterministic per seed.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Bitset random_subset(std::size_t n, std::mt19937_64& rng, bool nonempty = true) {
  std::uniform_int_distribution<std::uint64_t> pick(nonempty ? 1 : 0, (std::uint64_t{1} << n) - 1);
  return Bitset::from_mask(n, pick(rng));
}

}  // namespace interfere::testing
