#include "interfere/metrics.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include <omp.h>

#include "interfere/errors.hpp"

namespace interfere {

Bitset neighborhood(const Graph& g, Vertex u) { return g.neighbors(u); }

Bitset complemented_neighborhood(const Graph& g, Vertex u) { return g.neighbors(u).complement(); }

Bitset closed_neighborhood(const Graph& g, Vertex u) {
  Bitset b = g.neighbors(u);
  b.set(u);
  return b;
}

Bitset second_neighborhood(const Graph& g, Vertex u) {
  const Bitset& first = g.neighbors(u);
  Bitset reach(g.order());
  first.for_each([&](std::size_t v) { reach |= g.neighbors(static_cast<Vertex>(v)); });
  reach -= first;
  reach.reset(u);
  return reach;
}

namespace {

void bfs_into(const Graph& g, std::deque<Vertex>& queue, std::vector<Distance>& dist) {
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    const Distance next(dist[x].value() + 1);
    g.neighbors(x).for_each([&](std::size_t y) {
      if (!dist[y].is_finite()) {
        dist[y] = next;
        queue.push_back(static_cast<Vertex>(y));
      }
    });
  }
}

}  // namespace

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.order(), Distance::infinity());
  std::deque<Vertex> queue{source};
  dist[source] = Distance(0);
  bfs_into(g, queue, dist);
  return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  return bfs_distances(g, u)[v];
}

std::vector<Distance> distances_to_set(const Graph& g, const Bitset& d) {
  g.check_vertex_set(d);
  if (d.none()) throw PreconditionError("distance to an empty set");
  std::vector<Distance> dist(g.order(), Distance::infinity());
  std::deque<Vertex> queue;
  d.for_each([&](std::size_t v) {
    dist[v] = Distance(0);
    queue.push_back(static_cast<Vertex>(v));
  });
  bfs_into(g, queue, dist);
  return dist;
}

Distance distance_to_set(const Graph& g, Vertex u, const Bitset& d) {
  g.check_vertex(u);
  return distances_to_set(g, d)[u];
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  DistanceMatrix m(g.order());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, static_cast<Vertex>(s));
    for (std::int64_t t = 0; t < n; ++t)
      m.at(static_cast<Vertex>(s), static_cast<Vertex>(t)) = row[t];
  }
  return m;
}

namespace serial {
DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) m.at(s, t) = row[t];
  }
  return m;
}
}  // namespace serial

Distance diameter(const Graph& g) {
  Distance best(0);
  for (Vertex s = 0; s < g.order(); ++s)
    for (const auto& d : bfs_distances(g, s)) best = std::max(best, d);
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](Distance d) { return d.is_finite(); });
}

std::vector<Bitset> components(const Graph& g) {
  std::vector<Bitset> out;
  Bitset seen(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.test(s)) continue;
    Bitset comp(g.order());
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < g.order(); ++v)
      if (dist[v].is_finite()) comp.set(v);
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_point_determining(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) return false;
  return true;
}

bool edge_in_triangle(const Graph& g, const Edge& e) {
  if (!g.adjacent(e.u, e.v)) throw PreconditionError("edge_in_triangle: not an edge of the graph");
  return g.neighbors(e.u).intersects(g.neighbors(e.v));
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.neighbors(u).none()) return true;
  return false;
}

namespace {

void max_independent(const std::vector<std::uint64_t>& closed, std::uint64_t candidates,
                     std::size_t size, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  // Branch on a candidate of maximum residual degree.
  int pick = -1;
  int pick_deg = -1;
  for (std::uint64_t c = candidates; c; c &= c - 1) {
    const int v = std::countr_zero(c);
    const int deg = std::popcount(closed[v] & candidates);
    if (deg > pick_deg) {
      pick = v;
      pick_deg = deg;
    }
  }
  const std::uint64_t bit = std::uint64_t{1} << pick;
  max_independent(closed, candidates & ~closed[pick], size + 1, best);
  if (pick_deg > 1) max_independent(closed, candidates & ~bit, size, best);
}

}  // namespace

std::size_t independence_number(const Graph& g, std::size_t cap) {
  if (g.order() > cap || g.order() > 64)
    throw ResourceError("independence_number: order " + std::to_string(g.order()) +
                        " exceeds exact-search cap " + std::to_string(std::min<std::size_t>(cap, 64)));
  std::vector<std::uint64_t> closed(g.order());
  for (Vertex v = 0; v < g.order(); ++v) closed[v] = g.neighbors(v).to_mask() | (std::uint64_t{1} << v);
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  std::size_t best = 0;
  max_independent(closed, all, 0, best);
  return best;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const auto d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::pair<std::size_t, std::size_t> min_max_degree(const Graph& g) {
  if (g.order() == 0) return {0, 0};
  std::size_t lo = g.degree(0), hi = lo;
  for (Vertex v = 1; v < g.order(); ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  return {lo, hi};
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace interfere
