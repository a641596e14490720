#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "interfere/graph.hpp"

namespace interfere {

struct SweepOptions {
  std::string suite;
  std::size_t min_n = 1;
  std::size_t max_n = 6;
  std::uint64_t seed = 0;
  /// Replaces the internal catalog when set (graph6 input).
  std::optional<std::vector<Graph>> graphs;
  int threads = 0;
};

struct SweepFailure {
  std::uint64_t graph_hash = 0;
  std::string graph6;
  std::string detail;
};

struct SweepReport {
  std::string suite;
  std::size_t graphs = 0;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  /// Sorted by (hash, detail); truncated to the first 50.
  std::vector<SweepFailure> failures;
  bool pass() const { return mismatches == 0; }
};

/// Registered suites: nbd-oracle, lg-injectivity, lg-interference, index-kn,
/// domination-oracle, universality, construction, dpd-singleton.
std::vector<std::string> sweep_suites();

/// Runs an oracle-equivalence suite over the small-graph catalog. Graphs are
/// processed in parallel; per-graph randomness derives from the seed and the
/// graph's canonical hash, so reports do not depend on scheduling.
/// Throws PreconditionError for an unknown suite, ResourceError past caps.
SweepReport run_sweep(const SweepOptions& options);

}  // namespace interfere
