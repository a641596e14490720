#include "interfere/index_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "interfere/bits.hpp"
#include "interfere/errors.hpp"

namespace interfere {

std::size_t index_lower_bound(std::size_t n) { return ceil_log2(n + 1); }
std::size_t universal_upper_bound(std::size_t n) { return n == 0 ? 0 : ceil_log2(2 * n); }

namespace {

using Mask = std::uint64_t;

// Set of labels 1..255, one bit per label value.
struct LabelSet {
  std::array<std::uint64_t, 4> w{};

  bool test(unsigned l) const { return w[l >> 6] >> (l & 63) & 1u; }
  void set(unsigned l) { w[l >> 6] |= std::uint64_t{1} << (l & 63); }
  void reset(unsigned l) { w[l >> 6] &= ~(std::uint64_t{1} << (l & 63)); }
  bool none() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  unsigned count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  unsigned first() const {
    for (unsigned i = 0; i < 4; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return 0;
  }
  LabelSet& operator&=(const LabelSet& o) {
    for (unsigned i = 0; i < 4; ++i) w[i] &= o.w[i];
    return *this;
  }
  LabelSet& operator|=(const LabelSet& o) {
    for (unsigned i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  bool operator==(const LabelSet&) const = default;

  // Union of all labels in the set, as a ground-element mask.
  unsigned support() const {
    unsigned s = 0;
    for (unsigned i = 0; i < 4; ++i)
      for (auto b = w[i]; b; b &= b - 1) s |= i * 64 + std::countr_zero(b);
    return s;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (unsigned i = 0; i < 4; ++i)
      for (auto b = w[i]; b; b &= b - 1) fn(i * 64 + static_cast<unsigned>(std::countr_zero(b)));
  }
};

struct Clause {
  unsigned u;
  Mask supporters;
};

struct Problem {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Clause> clauses;
  std::vector<std::vector<std::size_t>> clauses_of;  // clauses per constrained vertex
  std::vector<unsigned> clause_count;                 // clauses touching each vertex
  std::array<LabelSet, 256> meets{};
  LabelSet all_labels;
};

struct State {
  std::array<std::uint8_t, 64> label{};  // 0 = unassigned
  std::array<LabelSet, 64> dom{};
};

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void charge() {
    if (used_.fetch_add(1, std::memory_order_relaxed) + 1 > limit_)
      throw ResourceError("interference search: node budget of " + std::to_string(limit_) + " exhausted");
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

Problem build_problem(const Graph& g, const std::vector<Bitset>& sets, std::size_t m) {
  Problem p;
  p.n = g.order();
  p.m = m;
  const unsigned full = (1u << m) - 1;
  for (unsigned l = 1; l <= full; ++l) p.all_labels.set(l);
  for (unsigned mask = 0; mask < 256; ++mask)
    for (unsigned l = 1; l <= full; ++l)
      if (l & mask) p.meets[mask].set(l);

  std::vector<std::vector<Mask>> raw(p.n);
  for (const auto& d : sets) {
    const Mask dm = d.to_mask();
    for (unsigned u = 0; u < p.n; ++u)
      if (!(dm >> u & 1u)) raw[u].push_back(dm & g.neighbors(u).to_mask());
  }
  p.clauses_of.resize(p.n);
  p.clause_count.assign(p.n, 0);
  for (unsigned u = 0; u < p.n; ++u) {
    auto& ws = raw[u];
    std::sort(ws.begin(), ws.end(),
              [](Mask a, Mask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    std::vector<Mask> kept;
    for (Mask w : ws) {
      bool implied = false;
      for (Mask k : kept)
        if ((k & w) == k) implied = true;
      if (!implied) kept.push_back(w);
    }
    for (Mask w : kept) {
      p.clauses_of[u].push_back(p.clauses.size());
      p.clauses.push_back({u, w});
      ++p.clause_count[u];
      for (auto s = w; s; s &= s - 1) ++p.clause_count[std::countr_zero(s)];
    }
  }
  return p;
}

// Fixpoint of clause, all-different and Hall-count reasoning. False on a
// dead end.
bool propagate(const Problem& p, State& s) {
  bool changed = true;
  std::array<unsigned, 64> support{};
  while (changed) {
    changed = false;
    for (unsigned v = 0; v < p.n; ++v)
      support[v] = s.label[v] ? s.label[v] : s.dom[v].support();

    for (const auto& c : p.clauses) {
      const unsigned u = c.u;
      if (s.label[u]) {
        const unsigned lu = s.label[u];
        bool satisfied = false;
        int open = 0;
        unsigned last = 0;
        for (auto b = c.supporters; b; b &= b - 1) {
          const unsigned v = std::countr_zero(b);
          if (s.label[v]) {
            if (s.label[v] & lu) { satisfied = true; break; }
          } else if (support[v] & lu) {
            ++open;
            last = v;
          }
        }
        if (satisfied) continue;
        if (open == 0) return false;
        if (open == 1) {
          LabelSet before = s.dom[last];
          s.dom[last] &= p.meets[lu];
          if (!(before == s.dom[last])) {
            if (s.dom[last].none()) return false;
            support[last] = s.dom[last].support();
            changed = true;
          }
        }
      } else {
        unsigned reach = 0;
        for (auto b = c.supporters; b; b &= b - 1) reach |= support[std::countr_zero(b)];
        LabelSet before = s.dom[u];
        s.dom[u] &= p.meets[reach];
        if (!(before == s.dom[u])) {
          if (s.dom[u].none()) return false;
          support[u] = s.dom[u].support();
          changed = true;
        }
      }
    }

    LabelSet open_union;
    unsigned unassigned = 0;
    for (unsigned v = 0; v < p.n; ++v) {
      if (!s.label[v]) continue;
      for (unsigned w = 0; w < p.n; ++w) {
        if (w == v) continue;
        if (s.label[w] == s.label[v]) return false;
        if (!s.label[w] && s.dom[w].test(s.label[v])) {
          s.dom[w].reset(s.label[v]);
          changed = true;
        }
      }
    }
    for (unsigned v = 0; v < p.n; ++v) {
      if (s.label[v]) continue;
      if (s.dom[v].none()) return false;
      if (s.dom[v].count() == 1) {
        s.label[v] = static_cast<std::uint8_t>(s.dom[v].first());
        changed = true;
        continue;
      }
      ++unassigned;
      open_union |= s.dom[v];
    }
    if (open_union.count() < unassigned) return false;
  }
  return true;
}

// Unassigned vertex with the smallest domain, ties to the most clauses,
// then the lowest index; -1 when complete.
int pick_vertex(const Problem& p, const State& s) {
  int best = -1;
  unsigned best_size = 0;
  for (unsigned v = 0; v < p.n; ++v) {
    if (s.label[v]) continue;
    const unsigned size = s.dom[v].count();
    if (best < 0 || size < best_size ||
        (size == best_size && p.clause_count[v] > p.clause_count[best])) {
      best = static_cast<int>(v);
      best_size = size;
    }
  }
  return best;
}

// Ground elements no assigned label uses are interchangeable, so a branch
// label only ever takes the lowest few of them.
bool canonical_under_symmetry(const Problem& p, const State& s, unsigned label) {
  unsigned used = 0;
  for (unsigned v = 0; v < p.n; ++v) used |= s.label[v];
  const unsigned free = ((1u << p.m) - 1) & ~used;
  const unsigned fresh = label & free;
  unsigned expected = 0;
  unsigned remaining = std::popcount(fresh);
  for (unsigned b = free; remaining; b &= b - 1, --remaining) expected |= b & -b;
  return fresh == expected;
}

std::vector<State> children(const Problem& p, const State& s, bool symmetry, Budget& budget,
                            std::uint64_t& nodes) {
  std::vector<State> out;
  const int v = pick_vertex(p, s);
  if (v < 0) return out;
  s.dom[v].for_each([&](unsigned l) {
    if (symmetry && !canonical_under_symmetry(p, s, l)) return;
    budget.charge();
    ++nodes;
    State child = s;
    child.label[v] = static_cast<std::uint8_t>(l);
    if (propagate(p, child)) out.push_back(child);
  });
  return out;
}

bool complete(const Problem& p, const State& s) {
  for (unsigned v = 0; v < p.n; ++v)
    if (!s.label[v]) return false;
  return true;
}

struct Abort {};

bool dfs(const Problem& p, const State& s, bool symmetry, Budget& budget, std::uint64_t& nodes,
         State& found, const std::atomic<std::size_t>* winner, std::size_t task) {
  if (complete(p, s)) {
    found = s;
    return true;
  }
  if (winner && winner->load(std::memory_order_relaxed) < task) throw Abort{};
  const int v = pick_vertex(p, s);
  bool hit = false;
  s.dom[v].for_each([&](unsigned l) {
    if (hit) return;
    if (symmetry && !canonical_under_symmetry(p, s, l)) return;
    budget.charge();
    ++nodes;
    State child = s;
    child.label[v] = static_cast<std::uint8_t>(l);
    if (propagate(p, child) && dfs(p, child, symmetry, budget, nodes, found, winner, task)) hit = true;
  });
  return hit;
}

SetLabeling to_labeling(const Problem& p, const State& s) {
  std::vector<std::uint64_t> masks(p.n);
  for (unsigned v = 0; v < p.n; ++v) masks[v] = s.label[v];
  return SetLabeling::from_masks(p.m, masks);
}

struct Prepared {
  Problem problem;
  State root;
  bool feasible = false;
};

Prepared prepare(const Graph& g, const std::vector<Bitset>& sets, std::size_t m) {
  const auto n = g.order();
  if (m == 0) throw PreconditionError("ground set size must be positive");
  if (m > kMaxSearchGround)
    throw ResourceError("interference search: ground size " + std::to_string(m) + " exceeds cap " +
                        std::to_string(kMaxSearchGround));
  if (n > kMaxSearchOrder)
    throw ResourceError("interference search: order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxSearchOrder));
  for (const auto& d : sets) {
    g.check_vertex_set(d);
    if (d.none()) throw PreconditionError("pattern contains the empty set");
  }
  Prepared out;
  out.problem = build_problem(g, sets, m);
  if (n >= (std::size_t{1} << m)) return out;
  for (const auto& c : out.problem.clauses)
    if (c.supporters == 0) return out;
  for (unsigned v = 0; v < n; ++v) out.root.dom[v] = out.problem.all_labels;
  out.feasible = propagate(out.problem, out.root);
  return out;
}

void verify(const Graph& g, const std::vector<Bitset>& sets, const SetLabeling& f) {
  if (!is_pattern_interference(g, sets, f).holds)
    throw std::logic_error("interference search produced an invalid witness");
}

}  // namespace

namespace serial {

DecisionResult exists_interference(const Graph& interference_graph,
                                   const std::vector<Bitset>& pattern_sets, std::size_t m,
                                   const SearchOptions& options) {
  auto prep = prepare(interference_graph, pattern_sets, m);
  DecisionResult out;
  if (!prep.feasible) return out;
  Budget budget(options.node_budget);
  State found;
  if (dfs(prep.problem, prep.root, options.symmetry_breaking, budget, out.nodes, found, nullptr, 0)) {
    out.witness = to_labeling(prep.problem, found);
    verify(interference_graph, pattern_sets, *out.witness);
  }
  return out;
}

}  // namespace serial

DecisionResult exists_interference(const Graph& interference_graph,
                                   const std::vector<Bitset>& pattern_sets, std::size_t m,
                                   const SearchOptions& options) {
  constexpr std::size_t kTargetTasks = 256;
  constexpr std::size_t kMaxSplitDepth = 6;
  auto prep = prepare(interference_graph, pattern_sets, m);
  DecisionResult out;
  if (!prep.feasible) return out;
  const auto& p = prep.problem;
  const bool sym = options.symmetry_breaking;
  Budget budget(options.node_budget);

  // Level-by-level expansion keeps the frontier in depth-first order.
  std::vector<State> frontier{prep.root};
  for (std::size_t depth = 0; depth < kMaxSplitDepth && frontier.size() < kTargetTasks; ++depth) {
    std::vector<State> next;
    bool expanded = false;
    for (const auto& s : frontier) {
      if (complete(p, s)) {
        next.push_back(s);
        continue;
      }
      expanded = true;
      auto kids = children(p, s, sym, budget, out.nodes);
      next.insert(next.end(), kids.begin(), kids.end());
    }
    frontier = std::move(next);
    if (!expanded || frontier.empty()) break;
  }
  if (frontier.empty()) return out;

  const auto tasks = frontier.size();
  std::atomic<std::size_t> winner{tasks};
  std::vector<std::uint64_t> task_nodes(tasks, 0);
  std::vector<State> task_found(tasks);
  std::vector<char> task_hit(tasks, 0);
  std::exception_ptr failure;
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t) {
    const auto task = static_cast<std::size_t>(t);
    if (winner.load() < task) continue;
    try {
      if (dfs(p, frontier[task], sym, budget, task_nodes[task], task_found[task], &winner, task)) {
        task_hit[task] = 1;
        auto cur = winner.load();
        while (task < cur && !winner.compare_exchange_weak(cur, task)) {
        }
      }
    } catch (const Abort&) {
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  const auto win = winner.load();
  for (std::size_t t = 0; t < tasks && t <= win; ++t) out.nodes += task_nodes[t];
  if (win < tasks) {
    out.witness = to_labeling(p, task_found[win]);
    verify(interference_graph, pattern_sets, *out.witness);
  }
  return out;
}

DecisionResult exists_interference(const Graph& interference_graph, const PatternFamily& pattern,
                                   std::size_t m, const SearchOptions& options) {
  return exists_interference(interference_graph, pattern.expand(interference_graph, options.pattern_cap),
                             m, options);
}

IndexResult interference_index(const Graph& interference_graph,
                               const std::vector<Bitset>& pattern_sets, const IndexOptions& options) {
  const auto n = interference_graph.order();
  if (n == 0) throw PreconditionError("interference_index: empty graph");
  for (const auto& d : pattern_sets) {
    interference_graph.check_vertex_set(d);
    if (d.none()) throw PreconditionError("pattern contains the empty set");
    if (!is_dominating(interference_graph, d)) {
      std::string members;
      for (auto v : d.to_vector()) members += (members.empty() ? "" : ",") + std::to_string(v);
      throw NoDominatingSetError("pattern member {" + members + "} does not dominate the graph");
    }
  }
  IndexResult r;
  r.lower_bound = index_lower_bound(n);
  r.upper_bound = universal_upper_bound(n);
  for (std::size_t m = r.lower_bound;; ++m) {
    if (options.max_m && m > *options.max_m)
      throw ResourceError("interference_index: no interference with at most " +
                          std::to_string(*options.max_m) + " ground elements");
    PhaseTrace phase{m, false, 0};
    std::optional<SetLabeling> witness;
    if (m == r.upper_bound) {
      // Pairwise-intersecting labels serve every dominating set.
      auto f = build_complete_interference(n);
      if (is_pattern_interference(interference_graph, pattern_sets, f).holds) witness = std::move(f);
    }
    if (!witness) {
      auto d = exists_interference(interference_graph, pattern_sets, m, options.search);
      phase.nodes = d.nodes;
      witness = std::move(d.witness);
    }
    phase.found = witness.has_value();
    r.nodes_explored += phase.nodes;
    r.trace.push_back(phase);
    if (witness) {
      r.index = m;
      r.witness = std::move(*witness);
      break;
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    if (ceil_log2(n + k) != r.index) continue;
    if (r.k_min == 0) r.k_min = k;
    r.k_max = k;
  }
  return r;
}

IndexResult interference_index(const Graph& interference_graph, const PatternFamily& pattern,
                               const IndexOptions& options) {
  return interference_index(interference_graph,
                            pattern.expand(interference_graph, options.search.pattern_cap), options);
}

}  // namespace interfere
