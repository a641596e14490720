#include "interfere/oracles.hpp"

#include <algorithm>
#include <string>

#include "interfere/errors.hpp"

namespace interfere::oracle {

namespace {

std::vector<bool> dominating_masks(const Graph& g) {
  const auto n = g.order();
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    for (Vertex w = 0; w < n; ++w)
      if (g.adjacent(v, w)) closed[v] |= std::uint32_t{1} << w;
  }
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<bool> dom(limit, false);
  for (std::uint32_t s = 1; s < limit; ++s) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) ok = (closed[u] & s) != 0;
    dom[s] = ok;
  }
  return dom;
}

void cap(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit)
    throw ResourceError(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(limit));
}

}  // namespace

std::vector<Bitset> all_dominating_sets(const Graph& g) {
  cap(g, 20, "oracle::all_dominating_sets");
  const auto dom = dominating_masks(g);
  std::vector<Bitset> out;
  for (std::uint32_t s = 1; s < dom.size(); ++s)
    if (dom[s]) out.push_back(Bitset::from_mask(g.order(), s));
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

std::vector<Bitset> minimal_dominating_sets(const Graph& g) {
  cap(g, 16, "oracle::minimal_dominating_sets");
  const auto dom = dominating_masks(g);
  std::vector<Bitset> out;
  for (std::uint32_t s = 1; s < dom.size(); ++s) {
    if (!dom[s]) continue;
    bool minimal = true;
    for (auto b = s; b && minimal; b &= b - 1) minimal = !dom[s & ~(b & -b)];
    if (minimal) out.push_back(Bitset::from_mask(g.order(), s));
  }
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

bool is_interference(const Graph& interference_graph, const Bitset& d,
                     const std::vector<Bitset>& labels) {
  const auto n = interference_graph.order();
  for (Vertex u = 0; u < n; ++u) {
    if (d.test(u)) continue;
    bool met = false;
    for (Vertex v = 0; v < n && !met; ++v)
      met = d.test(v) && interference_graph.adjacent(u, v) && labels[u].intersects(labels[v]);
    if (!met) return false;
  }
  return true;
}

bool labels_injective(const std::vector<Bitset>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) return false;
  return true;
}

bool labels_pairwise_intersecting(const std::vector<Bitset>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (!labels[i].intersects(labels[j])) return false;
  return true;
}

namespace {

struct Backtrack {
  const Graph& g;
  const std::vector<Bitset>& sets;
  std::size_t m;
  std::vector<std::uint32_t> labels;

  // Checks every (D, u) whose vertices are all labelled once vertex k is.
  bool consistent(std::size_t k) const {
    for (const auto& d : sets) {
      for (Vertex u = 0; u < g.order(); ++u) {
        if (d.test(u)) continue;
        std::size_t last = u;
        bool met = false;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (!d.test(v) || !g.adjacent(u, v)) continue;
          last = std::max<std::size_t>(last, v);
        }
        if (last != k) continue;
        for (Vertex v = 0; v < g.order(); ++v)
          if (d.test(v) && g.adjacent(u, v) && (labels[u] & labels[v])) met = true;
        if (!met) return false;
      }
    }
    return true;
  }

  bool run(std::size_t k) {
    if (k == g.order()) return true;
    for (std::uint32_t l = 1; l < (std::uint32_t{1} << m); ++l) {
      if (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(k), l) !=
          labels.begin() + static_cast<std::ptrdiff_t>(k))
        continue;
      labels[k] = l;
      if (consistent(k) && run(k + 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::uint32_t>> find_interference(
    const Graph& interference_graph, const std::vector<Bitset>& pattern_sets, std::size_t m) {
  cap(interference_graph, 8, "oracle::find_interference");
  if (m == 0 || m > 4) throw ResourceError("oracle::find_interference: m must be in 1..4");
  for (const auto& d : pattern_sets)
    if (d.none()) throw PreconditionError("oracle::find_interference: empty pattern member");
  Backtrack bt{interference_graph, pattern_sets, m, std::vector<std::uint32_t>(interference_graph.order(), 0)};
  if (bt.run(0)) return bt.labels;
  return std::nullopt;
}

std::size_t b_r(std::size_t r, std::size_t m) {
  if (r == 0 || m == 0 || m > 6) throw PreconditionError("oracle::b_r: need r >= 1 and 1 <= m <= 6");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  if (full < r) throw PreconditionError("oracle::b_r: fewer than r nonempty subsets");
  std::vector<std::uint32_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = static_cast<std::uint32_t>(i + 1);
  std::size_t best = 0;
  while (true) {
    std::size_t count = 0;
    for (std::uint32_t y = 1; y <= full; ++y) {
      bool member = false;
      bool meets_all = true;
      for (auto z : pick) {
        if (z == y) member = true;
        if ((z & y) == 0) meets_all = false;
      }
      if (!member && meets_all) ++count;
    }
    best = std::max(best, count);
    // Next r-combination of {1..full} in lexicographic order.
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == full - (r - i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

bool line_neighborhoods_injective(const Graph& g) {
  const auto lg = line_graph(g);
  const auto& l = lg.graph;
  for (Vertex a = 0; a < l.order(); ++a)
    for (Vertex b = a + 1; b < l.order(); ++b)
      if (l.neighbors(a) == l.neighbors(b)) return false;
  return true;
}

}  // namespace interfere::oracle
