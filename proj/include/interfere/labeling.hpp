#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "interfere/bitset.hpp"
#include "interfere/graph.hpp"

namespace interfere {

/// Ground set {0, ..., m-1}, m >= 1.
class GroundSet {
 public:
  explicit GroundSet(std::size_t size);
  std::size_t size() const { return size_; }
  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::size_t size_;
};

/// Vertex -> subset of the ground set. Construction does not validate; call
/// validate_labeling() (the predicates in interference.hpp do so).
class SetLabeling {
 public:
  SetLabeling(GroundSet ground, std::vector<Bitset> labels);
  /// Labels given as bitmasks over a ground set of size <= 64.
  static SetLabeling from_masks(std::size_t ground_size, std::span<const std::uint64_t> masks);

  std::size_t order() const { return labels_.size(); }
  const GroundSet& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  const Bitset& label(Vertex v) const;
  const std::vector<Bitset>& labels() const { return labels_; }

  /// f(D): union of the labels of D's members.
  Bitset image(const Bitset& d) const;

  friend bool operator==(const SetLabeling&, const SetLabeling&) = default;

 private:
  GroundSet ground_;
  std::vector<Bitset> labels_;
};

enum class LabelingDefect { None, WrongUniverse, EmptyLabel, NotInjective };

struct LabelingDiagnosis {
  LabelingDefect defect = LabelingDefect::None;
  /// The offending vertex (empty label / wrong universe) or vertex pair.
  std::vector<Vertex> vertices;
  bool ok() const { return defect == LabelingDefect::None; }
};

LabelingDiagnosis diagnose_labeling(const SetLabeling& f);
/// Every label nonempty and labels pairwise distinct.
bool validate_labeling(const SetLabeling& f);

const char* to_string(LabelingDefect d);

}  // namespace interfere
