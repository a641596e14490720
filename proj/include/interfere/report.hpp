#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "interfere/cross_intersecting.hpp"
#include "interfere/dpd.hpp"
#include "interfere/index_search.hpp"
#include "interfere/labeling.hpp"
#include "interfere/linegraph_interference.hpp"
#include "interfere/neighborhood.hpp"

namespace interfere {

inline constexpr const char* kSchemaVersion = "1";

using json = nlohmann::ordered_json;

json to_json(const Bitset& s);
/// {"ground_set_size": m, "labels": [[e, ...], ...]}
json labeling_to_json(const SetLabeling& f);
/// Throws FormatError on schema violations.
SetLabeling labeling_from_json(const json& j);

json to_json(const Violation& v);
json to_json(const IndexResult& r);
json to_json(const CrossIntersectingResult& r);
json to_json(const KrsIndexReport& r);
json to_json(const RuleVerdict& v);
json to_json(const NbdLabelingReport& r);
json to_json(const LgInjectivity& r);
json to_json(const NlCompleteReport& r);
json to_json(const SizeRuleReport& r);
json edge_set_to_json(const Graph& g, const EdgeSet& s);

/// n, edge count, degree sequence and hash. The hash is canonical
/// (isomorphism-invariant) for orders up to kMaxCanonicalOrder.
json fingerprint(const Graph& g);

}  // namespace interfere
