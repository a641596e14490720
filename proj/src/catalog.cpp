#include "interfere/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include <omp.h>

#include "interfere/errors.hpp"
#include "interfere/graph_io.hpp"

namespace interfere {

namespace {

using Row = std::uint32_t;

struct CanonicalSearch {
  std::size_t n = 0;
  std::vector<Row> adj;
  std::vector<int> cell_of_position;
  std::vector<int> color;
  std::vector<Row> twins;  // twins[v]: vertices interchangeable with v

  std::vector<int> order;
  std::vector<Row> cols;
  std::vector<int> best_order;
  std::vector<Row> best_cols;
  bool have_best = false;

  // Column p of the adjacency code: bit (p-1-i) set when the vertex placed at
  // position i is adjacent to v. Larger column = lexicographically larger code.
  Row column(int v, std::size_t p) const {
    Row c = 0;
    for (std::size_t i = 0; i < p; ++i)
      if (adj[v] >> order[i] & 1u) c |= Row{1} << (p - 1 - i);
    return c;
  }

  void dfs(std::size_t p, Row used) {
    if (have_best) {
      for (std::size_t i = 0; i < p; ++i) {
        if (cols[i] < best_cols[i]) return;
        if (cols[i] > best_cols[i]) break;
      }
    }
    if (p == n) {
      if (!have_best || cols > best_cols) {
        best_cols = cols;
        best_order = order;
        have_best = true;
      }
      return;
    }
    std::vector<std::pair<Row, int>> cands;
    Row tried = 0;
    for (int v = 0; v < static_cast<int>(n); ++v) {
      if (used >> v & 1u) continue;
      if (color[v] != cell_of_position[p]) continue;
      cands.push_back({column(v, p), v});
    }
    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    for (auto [c, v] : cands) {
      if (twins[v] & tried) continue;
      tried |= Row{1} << v;
      order[p] = v;
      cols[p] = c;
      dfs(p + 1, used | (Row{1} << v));
    }
  }
};

std::vector<int> refine_colors(const std::vector<Row>& adj, std::size_t n) {
  std::vector<int> color(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> nb;
      for (std::size_t w = 0; w < n; ++w)
        if (adj[v] >> w & 1u) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), static_cast<int>(v)};
    }
    std::vector<std::vector<int>> distinct;
    for (const auto& s : sig) distinct.push_back(s.first);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v].first) -
                                  distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const auto n = g.order();
  if (n > kMaxCanonicalOrder)
    throw ResourceError("canonical_form: order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxCanonicalOrder));
  if (n == 0) return g;
  CanonicalSearch cs;
  cs.n = n;
  cs.adj.resize(n);
  for (Vertex v = 0; v < n; ++v) cs.adj[v] = static_cast<Row>(g.neighbors(v).to_mask());
  cs.color = refine_colors(cs.adj, n);
  std::vector<int> sizes;
  for (int c : cs.color) {
    if (static_cast<std::size_t>(c) >= sizes.size()) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  for (std::size_t c = 0; c < sizes.size(); ++c)
    for (int k = 0; k < sizes[c]; ++k) cs.cell_of_position.push_back(static_cast<int>(c));
  cs.twins.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && cs.color[u] == cs.color[v] &&
          (cs.adj[u] & ~(Row{1} << v)) == (cs.adj[v] & ~(Row{1} << u)))
        cs.twins[v] |= Row{1} << u;
  cs.order.assign(n, -1);
  cs.cols.assign(n, 0);
  cs.dfs(0, 0);

  std::vector<Vertex> position(n);
  for (std::size_t p = 0; p < n; ++p) position[cs.best_order[p]] = static_cast<Vertex>(p);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(Edge::canonical(position[e.u], position[e.v]));
  return Graph(n, edges);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

std::uint64_t canonical_hash(const Graph& g) { return fnv1a(canonical_graph6(g)); }

namespace {

Graph augment(const Graph& parent, std::uint32_t subset) {
  const auto n = parent.order();
  std::vector<Edge> edges = parent.edges();
  for (Vertex v = 0; v < n; ++v)
    if (subset >> v & 1u) edges.push_back({v, static_cast<Vertex>(n)});
  return Graph(n + 1, edges);
}

std::vector<std::string> children_of(const Graph& parent, bool connected_only) {
  std::vector<std::string> out;
  const std::uint32_t limit = std::uint32_t{1} << parent.order();
  for (std::uint32_t s = connected_only ? 1 : 0; s < limit; ++s)
    out.push_back(canonical_graph6(augment(parent, s)));
  return out;
}

std::vector<Graph> finish(std::vector<std::string> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(from_graph6(c));
  return out;
}

std::vector<Graph> generate(std::size_t n, bool connected_only, bool parallel);

std::vector<Graph> cached(std::size_t n, bool connected_only) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, bool>, std::vector<Graph>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({n, connected_only}); it != memo.end()) return it->second;
  }
  auto result = generate(n, connected_only, true);
  std::lock_guard lock(mu);
  memo.emplace(std::make_pair(n, connected_only), result);
  return result;
}

std::vector<Graph> generate(std::size_t n, bool connected_only, bool parallel) {
  if (n > kMaxCatalogOrder)
    throw ResourceError("graph catalog: order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxCatalogOrder));
  if (n == 0) return {Graph(0)};
  if (n == 1) return {Graph(1)};
  const auto parents = parallel ? cached(n - 1, connected_only) : generate(n - 1, connected_only, false);
  std::vector<std::string> codes;
  if (parallel) {
    const auto count = static_cast<std::int64_t>(parents.size());
#pragma omp parallel
    {
      std::vector<std::string> local;
#pragma omp for schedule(dynamic, 4) nowait
      for (std::int64_t i = 0; i < count; ++i) {
        auto c = children_of(parents[i], connected_only);
        local.insert(local.end(), c.begin(), c.end());
      }
#pragma omp critical
      codes.insert(codes.end(), local.begin(), local.end());
    }
  } else {
    for (const auto& p : parents) {
      auto c = children_of(p, connected_only);
      codes.insert(codes.end(), c.begin(), c.end());
    }
  }
  return finish(std::move(codes));
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) { return cached(n, true); }
std::vector<Graph> all_graphs(std::size_t n) { return cached(n, false); }

namespace serial {
std::vector<Graph> connected_graphs(std::size_t n) { return generate(n, true, false); }
}  // namespace serial

}  // namespace interfere
