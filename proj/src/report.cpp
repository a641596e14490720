#include "interfere/report.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "interfere/catalog.hpp"
#include "interfere/errors.hpp"
#include "interfere/graph_io.hpp"
#include "interfere/metrics.hpp"

namespace interfere {

namespace {

json mask_members(std::uint32_t mask) {
  json out = json::array();
  for (unsigned b = 0; mask >> b; ++b)
    if (mask >> b & 1u) out.push_back(b);
  return out;
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

json to_json(const Bitset& s) {
  json out = json::array();
  s.for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

json labeling_to_json(const SetLabeling& f) {
  json labels = json::array();
  for (const auto& l : f.labels()) labels.push_back(to_json(l));
  return {{"ground_set_size", f.ground_size()}, {"labels", labels}};
}

SetLabeling labeling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground_set_size") || !j.contains("labels"))
    throw FormatError("labeling JSON needs \"ground_set_size\" and \"labels\"");
  const auto& m = j["ground_set_size"];
  if (!m.is_number_unsigned() || m.get<std::size_t>() == 0)
    throw FormatError("\"ground_set_size\" must be a positive integer");
  const auto size = m.get<std::size_t>();
  if (!j["labels"].is_array()) throw FormatError("\"labels\" must be an array");
  std::vector<Bitset> labels;
  for (const auto& l : j["labels"]) {
    if (!l.is_array()) throw FormatError("each label must be an array of ground elements");
    Bitset b(size);
    for (const auto& e : l) {
      if (!e.is_number_unsigned() || e.get<std::size_t>() >= size)
        throw FormatError("label element outside the ground set");
      b.set(e.get<std::size_t>());
    }
    labels.push_back(std::move(b));
  }
  return SetLabeling(GroundSet(size), std::move(labels));
}

json to_json(const Violation& v) {
  return {{"vertex", v.vertex}, {"candidates", to_json(v.candidates)}};
}

json to_json(const IndexResult& r) {
  json trace = json::array();
  for (const auto& p : r.trace)
    trace.push_back({{"ground_size", p.ground_size}, {"found", p.found}, {"nodes", p.nodes}});
  json k_range = nullptr;
  if (r.k_min) k_range = json::array({r.k_min, r.k_max});
  return {{"index", r.index},
          {"lower_bound", r.lower_bound},
          {"upper_bound", r.upper_bound},
          {"nodes_explored", r.nodes_explored},
          {"k_range", k_range},
          {"witness", labeling_to_json(r.witness)},
          {"trace", trace}};
}

json to_json(const CrossIntersectingResult& r) {
  json first = json::array();
  json partners = json::array();
  for (auto z : r.first) first.push_back(mask_members(z));
  for (auto y : r.partners) partners.push_back(mask_members(y));
  return {{"r", r.r}, {"m", r.m}, {"b", r.b_value}, {"first", first}, {"partners", partners}};
}

json to_json(const KrsIndexReport& r) {
  return {{"r", r.r},
          {"s", r.s},
          {"index", r.index},
          {"upper_bound", r.upper_bound},
          {"equality_claimed", r.equality_claimed},
          {"matches_upper_bound", r.matches_upper_bound}};
}

json to_json(const RuleVerdict& v) {
  json out = {{"holds", v.holds}, {"rule", v.rule}};
  out["vertex"] = v.vertex ? json(*v.vertex) : json(nullptr);
  out["forms_agree"] = v.forms_agree;
  return out;
}

json to_json(const NbdLabelingReport& r) {
  return {{"injective", r.injective},
          {"has_empty_label", r.has_empty_label},
          {"valid", r.labeling.has_value()},
          {"labeling", r.labeling ? labeling_to_json(*r.labeling) : json(nullptr)},
          {"failure_witness", r.failure_witness}};
}

json to_json(const LgInjectivity& r) {
  json comps = json::array();
  for (const auto& c : r.sandwich_components) comps.push_back(to_json(c));
  return {{"injective", r.injective}, {"isolated_edges", r.isolated_edges}, {"sandwich_components", comps}};
}

json to_json(const NlCompleteReport& r) {
  return {{"holds", r.holds},
          {"sandwich_free", r.sandwich_free},
          {"line_diameter_at_most_2", r.line_diameter_at_most_2},
          {"pendant_edges_ok", r.pendant_edges_ok},
          {"adjacent_pair_clause", r.adjacent_pair_clause},
          {"oracle", r.oracle},
          {"flagged", r.flagged}};
}

json to_json(const SizeRuleReport& r) {
  return {{"holds", r.holds},
          {"interference", r.interference},
          {"universal_edge", r.universal_edge ? json(*r.universal_edge) : json(nullptr)}};
}

json edge_set_to_json(const Graph& g, const EdgeSet& s) {
  json out = json::array();
  s.for_each([&](std::size_t i) { out.push_back({g.edge(i).u, g.edge(i).v}); });
  return out;
}

json fingerprint(const Graph& g) {
  auto degrees = degree_sequence(g);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const bool canonical = g.order() <= kMaxCanonicalOrder;
  std::uint64_t h = 0;
  if (canonical) {
    h = canonical_hash(g);
  } else {
    h = 1469598103934665603ull;
    for (unsigned char c : to_edge_list(g)) h = (h ^ c) * 1099511628211ull;
  }
  return {{"n", g.order()},
          {"m", g.size()},
          {"degree_sequence", degrees},
          {"hash", hex(h)},
          {"hash_is_canonical", canonical}};
}

}  // namespace interfere
