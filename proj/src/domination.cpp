#include "interfere/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "interfere/errors.hpp"

namespace interfere {

bool is_dominating(const Graph& g, const Bitset& d) {
  g.check_vertex_set(d);
  if (d.none()) return false;
  Bitset covered = d;
  d.for_each([&](std::size_t v) { covered |= g.neighbors(static_cast<Vertex>(v)); });
  return covered.count() == g.order();
}

bool is_minimal_dominating(const Graph& g, const Bitset& d) {
  if (!is_dominating(g, d)) return false;
  bool minimal = true;
  d.for_each([&](std::size_t v) {
    if (!minimal) return;
    Bitset smaller = d;
    smaller.reset(v);
    if (smaller.any() && is_dominating(g, smaller)) minimal = false;
  });
  return minimal;
}

DominatingSetFamily::DominatingSetFamily(std::size_t order, std::vector<Bitset> sets)
    : order_(order), sets_(std::move(sets)) {
  for (const auto& s : sets_)
    if (s.size() != order_) throw PreconditionError("DominatingSetFamily: set over wrong universe");
  std::sort(sets_.begin(), sets_.end(), size_then_lex_less);
}

namespace {

struct Enumerator {
  std::size_t n;
  std::uint64_t all;
  std::vector<std::uint64_t> closed;
  std::vector<std::uint64_t> found;

  std::uint64_t cover(std::uint64_t c) const {
    std::uint64_t out = 0;
    for (auto s = c; s; s &= s - 1) out |= closed[std::countr_zero(s)];
    return out;
  }

  bool every_member_private(std::uint64_t c) const {
    for (auto s = c; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      if ((closed[v] & ~cover(c & ~(std::uint64_t{1} << v))) == 0) return false;
    }
    return true;
  }

  void run(std::uint64_t chosen, std::uint64_t forbidden) {
    const std::uint64_t covered = cover(chosen);
    if (covered == all) {
      found.push_back(chosen);
      return;
    }
    int best_count = 65;
    std::uint64_t best_cands = 0;
    for (auto s = all & ~covered; s; s &= s - 1) {
      const int u = std::countr_zero(s);
      const std::uint64_t cands = closed[u] & ~forbidden;
      const int c = std::popcount(cands);
      if (c < best_count) {
        best_count = c;
        best_cands = cands;
        if (c == 0) return;
      }
    }
    std::uint64_t earlier = 0;
    for (auto s = best_cands; s; s &= s - 1) {
      const std::uint64_t bit = s & -s;
      const std::uint64_t next = chosen | bit;
      if (every_member_private(next)) run(next, forbidden | earlier);
      earlier |= bit;
    }
  }
};

}  // namespace

DominatingSetFamily minimal_dominating_sets(const Graph& g, std::size_t cap) {
  const auto n = g.order();
  if (n > cap || n > 64)
    throw ResourceError("minimal_dominating_sets: order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(std::min<std::size_t>(cap, 64)));
  if (n == 0) return DominatingSetFamily(0, {});
  Enumerator e{n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, {}, {}};
  e.closed.resize(n);
  for (Vertex v = 0; v < n; ++v) e.closed[v] = g.neighbors(v).to_mask() | (std::uint64_t{1} << v);
  e.run(0, 0);
  std::vector<Bitset> sets;
  sets.reserve(e.found.size());
  for (auto m : e.found) sets.push_back(Bitset::from_mask(n, m));
  return DominatingSetFamily(n, std::move(sets));
}

}  // namespace interfere
