#include "interfere/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "interfere/errors.hpp"

namespace interfere {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw FormatError("edge list line " + std::to_string(line_no) + ": malformed '" +
                        std::string(line) + "'");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto nums = parse_numbers(line, line_no);
    if (!n) {
      if (nums.size() != 1)
        throw FormatError("edge list line " + std::to_string(line_no) + ": expected vertex count");
      n = nums[0];
      continue;
    }
    if (nums.size() != 2)
      throw FormatError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    if (nums[0] >= *n || nums[1] >= *n)
      throw FormatError("edge list line " + std::to_string(line_no) + ": vertex index >= n");
    if (nums[0] == nums[1])
      throw FormatError("edge list line " + std::to_string(line_no) + ": self-loop");
    edges.push_back(Edge::canonical(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1])));
  }
  if (!n) throw FormatError("edge list: missing vertex count");
  try {
    return Graph(*n, edges);
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw FormatError("graph6: empty input");
  for (char c : line)
    if (c < 63 || c > 126) throw FormatError("graph6: invalid character");
  const auto n = static_cast<std::size_t>(line[0] - 63);
  if (n > kMaxGraph6Order) throw FormatError("graph6: long form (n > 62) not supported");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (line.size() - 1 < chars) throw FormatError("graph6: truncated bit payload");
  if (line.size() - 1 > chars) throw FormatError("graph6: trailing characters");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const auto n = g.order();
  if (n > kMaxGraph6Order) throw PreconditionError("graph6: long form (n > 62) not supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (!line.empty()) out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace interfere
