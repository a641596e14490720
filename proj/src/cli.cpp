#include "interfere/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "interfere/catalog.hpp"
#include "interfere/cross_intersecting.hpp"
#include "interfere/domination.hpp"
#include "interfere/dpd.hpp"
#include "interfere/errors.hpp"
#include "interfere/families.hpp"
#include "interfere/graph_io.hpp"
#include "interfere/index_search.hpp"
#include "interfere/interference.hpp"
#include "interfere/linegraph_interference.hpp"
#include "interfere/metrics.hpp"
#include "interfere/neighborhood.hpp"
#include "interfere/oracles.hpp"
#include "interfere/report.hpp"
#include "interfere/sweep.hpp"

namespace interfere::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

Graph load_graph(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    const auto path = spec.substr(5);
    const auto text = read_file(path);
    if (ends_with(path, ".g6")) {
      auto graphs = read_graph6_lines(text);
      if (graphs.empty()) throw FormatError("no graph in '" + path + "'");
      return graphs.front();
    }
    return from_edge_list(text);
  }
  if (spec.rfind("g6:", 0) == 0) return from_graph6(spec.substr(3));
  return families::from_spec(spec);
}

std::size_t parse_index(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw FormatError("'" + std::string(tok) + "' is not a nonnegative integer");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Bitset parse_vertex_set(const Graph& g, std::string_view text) {
  Bitset out(g.order());
  for (auto tok : split(text, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    const auto v = parse_index(tok);
    if (v >= g.order())
      throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(g.order()));
    out.set(v);
  }
  return out;
}

std::vector<Bitset> parse_set_family(const Graph& g, std::string_view text) {
  std::vector<Bitset> out;
  for (auto part : split(text, ';')) {
    if (trim(part).empty()) continue;
    out.push_back(parse_vertex_set(g, part));
  }
  return out;
}

SetLabeling load_labeling(const std::string& arg) {
  const std::string text = !arg.empty() && arg.front() == '{' ? arg : read_file(arg);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("labeling JSON: ") + e.what());
  }
  return labeling_from_json(j);
}

std::uint64_t node_budget() {
  const char* env = std::getenv("INTERFERE_BUDGET");
  if (!env) return kDefaultNodeBudget;
  try {
    return parse_index(env);
  } catch (const FormatError&) {
    throw UsageError(std::string("INTERFERE_BUDGET must be a nonnegative integer, got '") + env + "'");
  }
}

json header(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

struct Options {
  std::string graph;
  std::string labeling;
  std::string set;
  std::string sets;
  std::string pattern;
  std::string cross;
  bool complete = false;
  std::optional<std::size_t> singleton;
  std::optional<std::size_t> allbut;
  std::optional<std::size_t> max_m;
  int threads = 0;
  bool no_symmetry = false;
  std::size_t r = 0;
  std::size_t m = 0;
  std::string krs;
  std::string nbd_kind = "open";
  std::string edge_set;
  std::string edge;
  std::string lg_check = "injective";
  bool path_construction = false;
  std::size_t cap = kDefaultExactCap;
  std::string suite;
  std::size_t min_n = 1;
  std::size_t max_n = 6;
  std::uint64_t seed = 0;
  std::string graphs_file;
  std::string family;
  std::optional<std::size_t> connected;
  std::optional<std::size_t> all;
  std::string format = "graph6";
};

std::vector<Bitset> pattern_sets(const Graph& g, const Options& o, std::size_t cap) {
  if (!o.set.empty()) return {parse_vertex_set(g, o.set)};
  if (!o.sets.empty()) return parse_set_family(g, o.sets);
  if (!o.cross.empty()) {
    const auto sides = split(o.cross, '|');
    if (sides.size() != 2) throw FormatError("--cross expects 'U|W'");
    return PatternFamily::cross_pairs(parse_vertex_set(g, sides[0]), parse_vertex_set(g, sides[1])).expand(g, cap);
  }
  const std::string p = o.pattern.empty() ? "all-dominating" : o.pattern;
  if (p == "all-dominating") return PatternFamily::all_dominating().expand(g, cap);
  if (p == "minimal-dominating") return PatternFamily::all_minimal_dominating().expand(g, cap);
  if (p == "singletons") return PatternFamily::singletons().expand(g, cap);
  throw UsageError("unknown pattern '" + p + "'");
}

json cmd_check(const Options& o) {
  const auto g = load_graph(o.graph);
  const auto f = load_labeling(o.labeling);
  json out = header("check");
  out["graph"] = fingerprint(g);
  if (o.complete) {
    out["complete"] = is_complete_interference(f);
    return out;
  }
  const auto sets = pattern_sets(g, o, kDefaultExactCap);
  const auto v = is_pattern_interference(g, sets, f);
  out["holds"] = v.holds;
  out["sets_checked"] = v.sets_checked;
  out["failing_set"] = v.failing_set ? to_json(*v.failing_set) : json(nullptr);
  out["violation"] = v.violation ? to_json(*v.violation) : json(nullptr);
  return out;
}

json cmd_index(const Options& o) {
  const auto g = load_graph(o.graph);
  IndexOptions opts;
  opts.search.node_budget = node_budget();
  opts.search.threads = o.threads;
  opts.search.symmetry_breaking = !o.no_symmetry;
  opts.max_m = o.max_m;
  const auto sets = pattern_sets(g, o, opts.search.pattern_cap);
  json out = header("index");
  out["graph"] = fingerprint(g);
  out["pattern_size"] = sets.size();
  auto r = to_json(interference_index(g, sets, opts));
  for (auto& [k, v] : r.items()) out[k] = v;
  return out;
}

json cmd_brm(const Options& o) {
  json out = header("brm");
  if (!o.krs.empty()) {
    const auto parts = split(o.krs, ',');
    if (parts.size() != 2) throw FormatError("--krs expects 'r,s'");
    const auto r = parse_index(trim(parts[0]));
    const auto s = parse_index(trim(parts[1]));
    out["krs"] = to_json(krs_index_report(r, s));
    return out;
  }
  if (o.r == 0 || o.m == 0) throw UsageError("brm needs --r and --m, or --krs");
  out["b_r"] = to_json(b_r(o.r, o.m));
  return out;
}

json cmd_nbd(const Options& o) {
  const auto g = load_graph(o.graph);
  json out = header("nbd");
  out["graph"] = fingerprint(g);
  out["labeling_kind"] = o.nbd_kind;
  const auto n = g.order();
  auto whole_minus = [&](std::size_t v) {
    if (v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    Bitset d = Bitset::full(n);
    d.reset(v);
    return d;
  };
  auto single = [&](std::size_t v) {
    if (v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    return Bitset(n, {v});
  };

  if (o.nbd_kind == "closed") {
    out["labeling"] = to_json(closed_nbd_labeling(g));
    if (o.complete) out["verdict"] = to_json(closed_nbd_universal_selfcheck(g));
    else if (!o.set.empty() || o.singleton || o.allbut)
      throw UsageError("closed labeling supports --complete only");
    return out;
  }
  const bool open = o.nbd_kind == "open";
  if (!open && o.nbd_kind != "complemented") throw UsageError("--labeling must be open, complemented or closed");
  const auto rep = open ? nbd_labeling(g) : cnbd_labeling(g);
  out["labeling"] = to_json(rep);

  auto check_set = [&](const Bitset& d) {
    const auto v = open ? nbd_interference_of(g, d) : cnbd_interference_of(g, d);
    const bool oracle_verdict =
        rep.labeling && oracle::is_interference(families::complete(n), d, rep.labeling->labels());
    out["set"] = to_json(d);
    out["verdict"] = to_json(v);
    out["oracle"] = oracle_verdict;
    out["oracle_agrees"] = oracle_verdict == v.holds;
  };

  if (o.complete) {
    const bool c = open ? nbd_complete(g) : cnbd_complete(g);
    const bool oracle_verdict = rep.labeling && oracle::labels_pairwise_intersecting(rep.labeling->labels());
    out["complete"] = c;
    out["oracle"] = oracle_verdict;
    out["oracle_agrees"] = c == oracle_verdict;
    if (open) out["two_path_complete"] = is_two_path_complete(g);
    else out["sufficient_rule"] = to_string(cnbd_sufficient(g));
  } else if (o.singleton) {
    if (open) out["rule_check"] = to_json(nbd_singleton(g, static_cast<Vertex>(*o.singleton)));
    check_set(single(*o.singleton));
  } else if (o.allbut) {
    if (open) out["rule_check"] = to_json(nbd_allbut(g, static_cast<Vertex>(*o.allbut)));
    check_set(whole_minus(*o.allbut));
  } else if (!o.set.empty()) {
    check_set(parse_vertex_set(g, o.set));
  }
  return out;
}

json cmd_linegraph(const Options& o) {
  const auto g = load_graph(o.graph);
  json out = header("linegraph");
  out["graph"] = fingerprint(g);
  out["check"] = o.lg_check;
  auto need_edges = [&] {
    if (o.edge_set.empty()) throw UsageError("--check " + o.lg_check + " needs --edge-set");
    return parse_edge_set(g, o.edge_set);
  };
  const auto& c = o.lg_check;
  if (c == "injective") {
    out["result"] = to_json(nL_injective(g));
    out["oracle"] = oracle::line_neighborhoods_injective(g);
  } else if (c == "interference") {
    const auto d = need_edges();
    const auto v = nL_interference_of(g, d);
    const auto rep = nL_labeling(g);
    const bool oracle_verdict = rep.labeling && oracle::is_interference(families::complete(g.size()), d,
                                                                       rep.labeling->labels());
    out["edge_set"] = edge_set_to_json(g, d);
    out["verdict"] = to_json(v);
    out["oracle"] = oracle_verdict;
    out["oracle_agrees"] = oracle_verdict == v.holds;
  } else if (c == "singleton") {
    if (o.edge.empty()) throw UsageError("--check singleton needs --edge");
    const auto d = parse_edge_set(g, o.edge);
    if (d.count() != 1) throw UsageError("--edge takes exactly one u-v token");
    out["verdict"] = to_json(nL_singleton(g, d.first()));
  } else if (c == "complete") {
    out["result"] = to_json(nL_complete(g));
  } else if (c == "cnbd") {
    const auto d = need_edges();
    const auto v = cnbdL_interference_of(g, d);
    const auto rep = cnbdL_labeling(g);
    const bool oracle_verdict = rep.labeling && oracle::is_interference(families::complete(g.size()), d,
                                                                       rep.labeling->labels());
    out["edge_set"] = edge_set_to_json(g, d);
    out["verdict"] = to_json(v);
    out["oracle"] = oracle_verdict;
    out["oracle_agrees"] = oracle_verdict == v.holds;
  } else if (c == "size") {
    out["result"] = to_json(cnbdL_size_rule(g, need_edges()));
  } else if (c == "rules") {
    const auto rep = cnbdL_labeling(g);
    out["independence_rule"] = cnbdL_indep_rule(g);
    out["regular_rule"] = cnbdL_regular_rule(g);
    out["oracle_complete"] = rep.labeling && oracle::labels_pairwise_intersecting(rep.labeling->labels());
  } else {
    throw UsageError("unknown --check '" + c + "'");
  }
  return out;
}

json cmd_dpd(const Options& o) {
  const auto g = load_graph(o.graph);
  json out = header("dpd");
  out["graph"] = fingerprint(g);
  out["indexing"] = "0-based";
  Bitset m;
  if (o.path_construction) {
    m = path_dpd_set(g.order());
    out["r"] = path_dpd_size(g.order());
    out["is_path"] = g == families::path(g.order());
  } else {
    if (o.set.empty()) throw UsageError("dpd needs --set or --path-construction");
    m = parse_vertex_set(g, o.set);
  }
  const auto p = distance_pattern(g, m);
  json patterns = json::array();
  for (const auto& s : p.patterns) patterns.push_back(to_json(s));
  out["M"] = to_json(m);
  out["diameter"] = p.diameter;
  out["patterns"] = patterns;
  out["dpd"] = is_dpd_set(g, m);
  out["interference"] = dpd_interference_check(g, m);
  return out;
}

json cmd_domsets(const Options& o) {
  const auto g = load_graph(o.graph);
  const auto family = minimal_dominating_sets(g, o.cap);
  json sets = json::array();
  for (const auto& s : family.sets()) sets.push_back(to_json(s));
  json out = header("domsets");
  out["graph"] = fingerprint(g);
  out["count"] = family.size();
  out["sets"] = sets;
  return out;
}

json cmd_sweep(const Options& o) {
  SweepOptions so;
  so.suite = o.suite;
  so.min_n = o.min_n;
  so.max_n = o.max_n;
  so.seed = o.seed;
  so.threads = o.threads;
  if (!o.graphs_file.empty()) so.graphs = read_graph6_lines(read_file(o.graphs_file));
  const auto r = run_sweep(so);
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"graph_hash", f.graph_hash}, {"graph6", f.graph6}, {"detail", f.detail}});
  json out = header("sweep");
  out["suite"] = r.suite;
  out["min_n"] = o.min_n;
  out["max_n"] = o.max_n;
  out["seed"] = o.seed;
  out["graphs"] = r.graphs;
  out["cases"] = r.cases;
  out["mismatches"] = r.mismatches;
  out["pass"] = r.pass();
  out["failures"] = failures;
  return out;
}

void cmd_gen(const Options& o, std::ostream& out) {
  std::vector<Graph> graphs;
  if (!o.family.empty()) graphs.push_back(load_graph(o.family));
  else if (o.connected) graphs = connected_graphs(*o.connected);
  else if (o.all) graphs = all_graphs(*o.all);
  else throw UsageError("gen needs --family, --connected or --all");

  if (o.format == "graph6") {
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
  } else if (o.format == "edges") {
    for (std::size_t i = 0; i < graphs.size(); ++i) out << (i ? "\n" : "") << to_edge_list(graphs[i]);
  } else if (o.format == "json") {
    json arr = json::array();
    for (const auto& g : graphs) {
      json edges = json::array();
      for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
      arr.push_back({{"n", g.order()}, {"edges", edges}});
    }
    json doc = header("gen");
    doc["graphs"] = arr;
    out << doc.dump(2) << '\n';
  } else {
    throw UsageError("unknown --format '" + o.format + "'");
  }
}

int fail(std::ostream& out, std::ostream& err, int code, const char* kind, const std::string& msg) {
  json j = {{"schema", kSchemaVersion}, {"error", {{"kind", kind}, {"message", msg}}}};
  out << j.dump(2) << '\n';
  err << "interfere: " << msg << '\n';
  return code;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of interference labelings of graphs", "interfere"};
  app.require_subcommand(1, 1);
  Options o;

  auto* check = app.add_subcommand("check", "Test a labeling against a set or pattern family");
  check->add_option("--graph", o.graph, "Interference graph spec")->required();
  check->add_option("--labeling", o.labeling, "Labeling JSON file or inline object")->required();
  check->add_option("--set", o.set, "Vertex set D, comma separated");
  check->add_option("--sets", o.sets, "Explicit family, sets separated by ';'");
  check->add_option("--pattern", o.pattern, "all-dominating | minimal-dominating | singletons");
  check->add_option("--cross", o.cross, "Cross pairs 'U|W'");
  check->add_flag("--complete", o.complete, "Test pairwise intersection of the labels");

  auto* index = app.add_subcommand("index", "Interference index by exhaustive search");
  index->add_option("--graph", o.graph, "Interference graph spec")->required();
  index->add_option("--set", o.set, "Single vertex set D");
  index->add_option("--sets", o.sets, "Explicit family, sets separated by ';'");
  index->add_option("--pattern", o.pattern, "all-dominating | minimal-dominating | singletons");
  index->add_option("--cross", o.cross, "Cross pairs 'U|W'");
  index->add_option("--max-m", o.max_m, "Largest ground set to try");
  index->add_option("--threads", o.threads, "Worker threads (0 = default)");
  index->add_flag("--no-symmetry", o.no_symmetry, "Disable ground-element symmetry breaking");

  auto* brm = app.add_subcommand("brm", "Cross-intersecting extremal values and K_{r,s} indices");
  brm->add_option("--r", o.r, "Size of the first family");
  brm->add_option("--m", o.m, "Ground set size");
  brm->add_option("--krs", o.krs, "Report the index of K_{r,s}, given as 'r,s'");

  auto* nbd = app.add_subcommand("nbd", "Neighbourhood labelings with complete interference graph");
  nbd->add_option("--graph", o.graph, "Graph spec")->required();
  nbd->add_option("--labeling", o.nbd_kind, "open | complemented | closed");
  nbd->add_option("--set", o.set, "Vertex set D");
  nbd->add_flag("--complete", o.complete, "Complete interference check");
  nbd->add_option("--singleton", o.singleton, "D = {v}");
  nbd->add_option("--allbut", o.allbut, "D = V minus {v}");

  auto* lg = app.add_subcommand("linegraph", "Neighbourhood labelings of the line graph");
  lg->add_option("--graph", o.graph, "Graph spec")->required();
  lg->add_option("--edge-set", o.edge_set, "Edges as u-v tokens");
  lg->add_option("--edge", o.edge, "Single edge u-v for --check singleton");
  lg->add_option("--check", o.lg_check, "injective | interference | singleton | complete | cnbd | size | rules");

  auto* dpd = app.add_subcommand("dpd", "Distance patterns and DPD sets");
  dpd->add_option("--graph", o.graph, "Graph spec")->required();
  dpd->add_option("--set", o.set, "Vertex set M");
  dpd->add_flag("--path-construction", o.path_construction, "Use the path construction for M");

  auto* dom = app.add_subcommand("domsets", "Enumerate minimal dominating sets");
  dom->add_option("--graph", o.graph, "Graph spec")->required();
  dom->add_option("--cap", o.cap, "Largest order accepted");

  auto* sweep = app.add_subcommand("sweep", "Oracle-equivalence sweep over the small-graph catalog");
  sweep->add_option("--suite", o.suite, "Suite name")->required();
  sweep->add_option("--min-n", o.min_n, "Smallest order");
  sweep->add_option("--max-n", o.max_n, "Largest order");
  sweep->add_option("--seed", o.seed, "Seed for sampled sets");
  sweep->add_option("--graphs-file", o.graphs_file, "graph6 file replacing the catalog");
  sweep->add_option("--threads", o.threads, "Worker threads (0 = default)");

  auto* gen = app.add_subcommand("gen", "Generate graphs");
  gen->add_option("--family", o.family, "Graph spec");
  gen->add_option("--connected", o.connected, "All connected graphs of this order");
  gen->add_option("--all", o.all, "All graphs of this order");
  gen->add_option("--format", o.format, "graph6 | edges | json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    return fail(out, err, kUsage, "usage", e.what());
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    json result;
    if (*gen) {
      cmd_gen(o, out);
      return kOk;
    }
    if (*check) result = cmd_check(o);
    else if (*index) result = cmd_index(o);
    else if (*brm) result = cmd_brm(o);
    else if (*nbd) result = cmd_nbd(o);
    else if (*lg) result = cmd_linegraph(o);
    else if (*dpd) result = cmd_dpd(o);
    else if (*dom) result = cmd_domsets(o);
    else if (*sweep) result = cmd_sweep(o);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    result["timing_ms"] = elapsed.count();
    out << result.dump(2) << '\n';
    return kOk;
  } catch (const UsageError& e) {
    return fail(out, err, kUsage, "usage", e.what());
  } catch (const FormatError& e) {
    return fail(out, err, kInput, "input", e.what());
  } catch (const json::exception& e) {
    return fail(out, err, kInput, "input", e.what());
  } catch (const ResourceError& e) {
    return fail(out, err, kBudget, "resource", e.what());
  } catch (const HypothesisError& e) {
    return fail(out, err, kUsage, "hypothesis", e.what());
  } catch (const PreconditionError& e) {
    return fail(out, err, kUsage, "precondition", e.what());
  }
}

}  // namespace interfere::cli
