#include "interfere/labeling.hpp"

#include <string>
#include <unordered_map>

#include "interfere/errors.hpp"

namespace interfere {

GroundSet::GroundSet(std::size_t size) : size_(size) {
  if (size == 0) throw PreconditionError("ground set must be nonempty");
}

SetLabeling::SetLabeling(GroundSet ground, std::vector<Bitset> labels)
    : ground_(ground), labels_(std::move(labels)) {}

SetLabeling SetLabeling::from_masks(std::size_t ground_size, std::span<const std::uint64_t> masks) {
  if (ground_size > 64) throw PreconditionError("from_masks: ground set larger than 64");
  std::vector<Bitset> labels;
  labels.reserve(masks.size());
  for (auto m : masks) {
    if (ground_size < 64 && (m >> ground_size) != 0)
      throw PreconditionError("from_masks: label outside ground set");
    labels.push_back(Bitset::from_mask(ground_size, m));
  }
  return SetLabeling(GroundSet(ground_size), std::move(labels));
}

const Bitset& SetLabeling::label(Vertex v) const {
  if (v >= labels_.size())
    throw PreconditionError("label: vertex " + std::to_string(v) + " out of range");
  return labels_[v];
}

Bitset SetLabeling::image(const Bitset& d) const {
  if (d.size() != labels_.size()) throw PreconditionError("image: vertex set over wrong universe");
  Bitset out(ground_.size());
  d.for_each([&](std::size_t v) { out |= labels_[v]; });
  return out;
}

LabelingDiagnosis diagnose_labeling(const SetLabeling& f) {
  const auto& labels = f.labels();
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (labels[v].size() != f.ground_size()) return {LabelingDefect::WrongUniverse, {v}};
    if (labels[v].none()) return {LabelingDefect::EmptyLabel, {v}};
  }
  std::unordered_map<Bitset, Vertex, BitsetHash> seen;
  for (Vertex v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = seen.emplace(labels[v], v);
    if (!inserted) return {LabelingDefect::NotInjective, {it->second, v}};
  }
  return {};
}

bool validate_labeling(const SetLabeling& f) { return diagnose_labeling(f).ok(); }

const char* to_string(LabelingDefect d) {
  switch (d) {
    case LabelingDefect::None: return "ok";
    case LabelingDefect::WrongUniverse: return "label outside ground set";
    case LabelingDefect::EmptyLabel: return "empty label";
    case LabelingDefect::NotInjective: return "labels not distinct";
  }
  return "unknown";
}

}  // namespace interfere
