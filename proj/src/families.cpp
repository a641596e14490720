#include "interfere/families.hpp"

#include <charconv>
#include <string>

#include "interfere/errors.hpp"

namespace interfere::families {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.push_back({members[i], members[j]});
}

void add_cycle(std::vector<Edge>& edges, std::size_t n) {
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
}

}  // namespace

Graph path(std::size_t n) {
  require(n >= 1, "path: n >= 1 required");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle: n >= 3 required");
  std::vector<Edge> edges;
  add_cycle(edges, n);
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete: n >= 1 required");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t r, std::size_t s) {
  require(r >= 1 && s >= 1, "kpq: r, s >= 1 required");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < r; ++i)
    for (Vertex j = 0; j < s; ++j) edges.push_back({i, static_cast<Vertex>(r + j)});
  return Graph(r + s, edges);
}

Graph star(std::size_t k) { return complete_bipartite(1, k); }

Graph matching(std::size_t k) {
  require(k >= 1, "matching: k >= 1 required");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
  return Graph(2 * k, edges);
}

Graph wheel(std::size_t n) {
  require(n >= 3, "wheel: n >= 3 required");
  std::vector<Edge> edges;
  add_cycle(edges, n);
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>(n)});
  return Graph(n + 1, edges);
}

Graph windmill(std::size_t n, std::size_t m) {
  require(n >= 3 && m >= 2, "windmill: n >= 3 and m >= 2 required");
  return husimi(std::vector<std::size_t>(m, n));
}

Graph husimi(const std::vector<std::size_t>& block_orders) {
  require(block_orders.size() >= 2, "husimi: at least two blocks required");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (auto order : block_orders) {
    require(order >= 2, "husimi: block orders >= 2 required");
    std::vector<Vertex> members{0};
    for (std::size_t i = 1; i < order; ++i) members.push_back(next++);
    add_clique(edges, members);
  }
  return Graph(next, edges);
}

Graph star_polygon(std::size_t n) {
  require(n >= 3, "star_polygon: n >= 3 required");
  std::vector<Edge> edges;
  add_cycle(edges, n);
  for (Vertex i = 0; i < n; ++i) {
    const auto apex = static_cast<Vertex>(n + i);
    edges.push_back({i, apex});
    edges.push_back({static_cast<Vertex>((i + 1) % n), apex});
  }
  return Graph(2 * n, edges);
}

Graph helm(std::size_t n) {
  require(n >= 3, "helm: n >= 3 required");
  std::vector<Edge> edges = wheel(n).edges();
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>(n + 1 + i)});
  return Graph(2 * n + 1, edges);
}

Graph crown(std::size_t n) {
  require(n >= 3, "crown: n >= 3 required");
  std::vector<Edge> edges;
  add_cycle(edges, n);
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>(n + i)});
  return Graph(2 * n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});           // outer 5-cycle
    edges.push_back({i, i + 5});                 // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});   // inner pentagram
  }
  return Graph(10, edges);
}

Graph empty(std::size_t n) { return Graph(n); }

namespace {

std::vector<std::size_t> parse_params(std::string_view text, std::string_view spec) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw FormatError("family spec '" + std::string(spec) + "': bad parameter '" +
                        std::string(tok) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

void arity(const std::vector<std::size_t>& p, std::size_t want, std::string_view spec) {
  if (p.size() != want)
    throw FormatError("family spec '" + std::string(spec) + "': expected " +
                      std::to_string(want) + " parameter(s)");
}

}  // namespace

Graph from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  const auto p = parse_params(colon == std::string_view::npos ? std::string_view{}
                                                               : spec.substr(colon + 1),
                              spec);
  if (name == "petersen") {
    arity(p, 0, spec);
    return petersen();
  }
  if (name == "husimi") {
    if (p.empty()) throw FormatError("family spec '" + std::string(spec) + "': block orders missing");
    return husimi(p);
  }
  if (name == "windmill" || name == "kpq") {
    arity(p, 2, spec);
    return name == "kpq" ? complete_bipartite(p[0], p[1]) : windmill(p[0], p[1]);
  }
  arity(p, 1, spec);
  const auto n = p[0];
  if (name == "path") return path(n);
  if (name == "cycle") return cycle(n);
  if (name == "complete") return complete(n);
  if (name == "star") return star(n);
  if (name == "matching") return matching(n);
  if (name == "wheel") return wheel(n);
  if (name == "star_polygon") return star_polygon(n);
  if (name == "helm") return helm(n);
  if (name == "crown") return crown(n);
  if (name == "empty") return empty(n);
  throw FormatError("unknown graph family '" + std::string(name) + "'");
}

std::vector<std::string> names() {
  return {"path",  "cycle", "complete", "kpq",   "star",     "matching", "wheel",
          "windmill", "husimi", "star_polygon", "helm", "crown", "petersen", "empty"};
}

}  // namespace interfere::families
