#include "interfere/dpd.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "interfere/errors.hpp"
#include "interfere/families.hpp"
#include "interfere/metrics.hpp"
#include "interfere/oracles.hpp"

namespace interfere {

SetLabeling DistancePattern::as_labeling() const {
  return SetLabeling(GroundSet(diameter + 1), patterns);
}

DistancePattern distance_pattern(const Graph& g, const Bitset& m) {
  g.check_vertex_set(m);
  if (m.none()) throw PreconditionError("distance pattern: M must be nonempty");
  if (!is_connected(g)) throw PreconditionError("distance pattern: graph must be connected");
  DistancePattern out;
  out.diameter = diameter(g).value();
  out.patterns.assign(g.order(), Bitset(out.diameter + 1));
  m.for_each([&](std::size_t v) {
    const auto dist = bfs_distances(g, static_cast<Vertex>(v));
    for (Vertex u = 0; u < g.order(); ++u) out.patterns[u].set(dist[u].value());
  });
  return out;
}

bool is_dpd_set(const Graph& g, const Bitset& m) {
  const auto p = distance_pattern(g, m);
  std::unordered_set<Bitset, BitsetHash> seen(p.patterns.begin(), p.patterns.end());
  return seen.size() == p.patterns.size();
}

std::size_t path_dpd_size(std::size_t n) {
  if (n == 0) throw PreconditionError("path_dpd_size: n must be positive");
  // Smallest r with 2r - 1 >= sqrt(8n - 7).
  std::size_t r = 1;
  while ((2 * r - 1) * (2 * r - 1) < 8 * n - 7) ++r;
  return r;
}

namespace {

bool anchored(const Graph& g, const Bitset& m, std::size_t r) {
  const auto p = distance_pattern(g, m);
  Bitset values(p.diameter + 1);
  m.for_each([&](std::size_t v) { values |= p.patterns[v]; });
  for (std::size_t k = 1; k < r; ++k)
    if (k > p.diameter || !values.test(k)) return false;
  const auto dist = distances_to_set(g, m);
  for (Vertex w = 0; w < g.order(); ++w)
    if (!m.test(w) && dist[w] > Distance(static_cast<std::uint32_t>(r - 1))) return false;
  return true;
}

bool acceptable(const Graph& g, const Bitset& m, std::size_t r) {
  return is_dpd_set(g, m) && dpd_interference_check(g, m) && anchored(g, m, r);
}

bool first_subset(const Graph& g, std::size_t r, std::size_t from, Bitset& cur, std::size_t picked) {
  if (picked == r) return acceptable(g, cur, r);
  for (std::size_t v = from; v < g.order(); ++v) {
    cur.set(v);
    if (first_subset(g, r, v + 1, cur, picked + 1)) return true;
    cur.reset(v);
  }
  return false;
}

}  // namespace

Bitset path_dpd_set(std::size_t n) {
  if (n < 4) throw PreconditionError("path_dpd_set: n must be at least 4");
  const auto r = path_dpd_size(n);
  const auto g = families::path(n);
  Bitset m(n);
  for (std::size_t j = 1; j * (j - 1) / 2 <= n - 1; ++j) m.set(j * (j - 1) / 2);
  if (m.count() == r) return m;
  if (m.count() + 1 != r) throw std::logic_error("path_dpd_set: size formula out of step");
  for (std::size_t x = 0; x < n; ++x) {
    if (m.test(x)) continue;
    Bitset candidate = m;
    candidate.set(x);
    if (acceptable(g, candidate, r)) return candidate;
  }
  Bitset cur(n);
  if (first_subset(g, r, 0, cur, 0)) return cur;
  throw std::logic_error("path_dpd_set: no admissible set of size " + std::to_string(r));
}

bool dpd_interference_check(const Graph& g, const Bitset& m) {
  const auto p = distance_pattern(g, m);
  if (!oracle::labels_injective(p.patterns)) return false;
  return oracle::is_interference(families::complete(g.order()), m, p.patterns);
}

}  // namespace interfere
