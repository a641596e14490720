#include "interfere/interference.hpp"

#include <algorithm>
#include <string>

#include "interfere/bits.hpp"
#include "interfere/errors.hpp"

namespace interfere {

namespace {

void check_inputs(const Graph& g, const Bitset& d, const SetLabeling& f) {
  if (d.size() != g.order())
    throw PreconditionError("vertex set has universe " + std::to_string(d.size()) +
                            ", graph has order " + std::to_string(g.order()));
  if (d.none()) throw PreconditionError("vertex set D must be nonempty");
  if (f.order() != g.order())
    throw PreconditionError("labeling covers " + std::to_string(f.order()) + " vertices, graph has " +
                            std::to_string(g.order()));
}

void check_labeling(const SetLabeling& f) {
  const auto diag = diagnose_labeling(f);
  if (!diag.ok()) {
    std::string msg = std::string("invalid labeling: ") + to_string(diag.defect);
    for (auto v : diag.vertices) msg += " " + std::to_string(v);
    throw PreconditionError(msg);
  }
}

InterferenceVerdict check_unvalidated(const Graph& g, const Bitset& d, const SetLabeling& f) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (d.test(u)) continue;
    const Bitset candidates = d & g.neighbors(u);
    bool met = false;
    candidates.for_each([&](std::size_t v) {
      if (!met && f.label(u).intersects(f.label(static_cast<Vertex>(v)))) met = true;
    });
    if (!met) return {false, Violation{u, candidates}};
  }
  return {true, std::nullopt};
}

}  // namespace

InterferenceVerdict is_interference(const Graph& interference_graph, const Bitset& d,
                                    const SetLabeling& f) {
  check_inputs(interference_graph, d, f);
  check_labeling(f);
  return check_unvalidated(interference_graph, d, f);
}

bool is_interference_image_form(const Graph& interference_graph, const Bitset& d,
                                const SetLabeling& f) {
  check_inputs(interference_graph, d, f);
  check_labeling(f);
  for (Vertex u = 0; u < interference_graph.order(); ++u) {
    if (d.test(u)) continue;
    if (!f.label(u).intersects(f.image(d & interference_graph.neighbors(u)))) return false;
  }
  return true;
}

PatternFamily PatternFamily::explicit_sets(std::vector<Bitset> sets) {
  return PatternFamily(Kind::Explicit, std::move(sets));
}
PatternFamily PatternFamily::all_dominating() { return PatternFamily(Kind::AllDominating, {}); }
PatternFamily PatternFamily::all_minimal_dominating() {
  return PatternFamily(Kind::AllMinimalDominating, {});
}
PatternFamily PatternFamily::singletons() { return PatternFamily(Kind::Singletons, {}); }
PatternFamily PatternFamily::cross_pairs(Bitset u_side, Bitset w_side) {
  if (u_side.size() != w_side.size()) throw PreconditionError("cross_pairs: sides over different universes");
  return PatternFamily(Kind::CrossPairs, {std::move(u_side), std::move(w_side)});
}

std::vector<Bitset> PatternFamily::expand(const Graph& interference_graph, std::size_t cap) const {
  const auto n = interference_graph.order();
  switch (kind_) {
    case Kind::Explicit:
      for (const auto& s : sets_) interference_graph.check_vertex_set(s);
      return sets_;
    case Kind::AllDominating:
    case Kind::AllMinimalDominating:
      return minimal_dominating_sets(interference_graph, cap).sets();
    case Kind::Singletons: {
      std::vector<Bitset> out;
      for (std::size_t v = 0; v < n; ++v) out.push_back(Bitset(n, {v}));
      return out;
    }
    case Kind::CrossPairs: {
      interference_graph.check_vertex_set(sets_[0]);
      interference_graph.check_vertex_set(sets_[1]);
      std::vector<Bitset> out;
      sets_[0].for_each([&](std::size_t u) {
        sets_[1].for_each([&](std::size_t w) {
          if (u != w) out.push_back(Bitset(n, {u, w}));
        });
      });
      std::sort(out.begin(), out.end(), size_then_lex_less);
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

const char* to_string(PatternFamily::Kind k) {
  switch (k) {
    case PatternFamily::Kind::Explicit: return "explicit";
    case PatternFamily::Kind::AllDominating: return "all-dominating";
    case PatternFamily::Kind::AllMinimalDominating: return "all-minimal-dominating";
    case PatternFamily::Kind::Singletons: return "singletons";
    case PatternFamily::Kind::CrossPairs: return "cross-pairs";
  }
  return "unknown";
}

PatternVerdict is_pattern_interference(const Graph& interference_graph,
                                       const std::vector<Bitset>& sets, const SetLabeling& f) {
  check_labeling(f);
  PatternVerdict out;
  for (const auto& d : sets) {
    check_inputs(interference_graph, d, f);
    ++out.sets_checked;
    auto v = check_unvalidated(interference_graph, d, f);
    if (!v.holds) {
      out.failing_set = d;
      out.violation = v.violation;
      return out;
    }
  }
  out.holds = true;
  return out;
}

PatternVerdict is_pattern_interference(const Graph& interference_graph,
                                       const PatternFamily& pattern, const SetLabeling& f) {
  return is_pattern_interference(interference_graph, pattern.expand(interference_graph), f);
}

bool is_complete_interference(const SetLabeling& f) {
  check_labeling(f);
  const auto& labels = f.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (!labels[i].intersects(labels[j])) return false;
  return true;
}

SetLabeling build_complete_interference(std::size_t n) {
  if (n == 0) throw PreconditionError("build_complete_interference: n must be positive");
  const std::size_t m = 1 + ceil_log2(n);
  std::vector<Bitset> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Bitset l(m, {0});
    for (std::size_t j = 0; j + 1 < m; ++j)
      if (i >> j & 1u) l.set(j + 1);
    labels.push_back(std::move(l));
  }
  return SetLabeling(GroundSet(m), std::move(labels));
}

}  // namespace interfere
