#pragma once

#include <stdexcept>
#include <string>

namespace interfere {

/// Malformed textual input (edge lists, graph6, labeling JSON, graph specs).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-side contract violation: vertex out of range, empty set where a
/// nonempty one is required, a structural hypothesis that does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The graph (or its line graph) violates a hypothesis of the characterization
/// being evaluated. Distinct from a "false" verdict.
class HypothesisError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A pattern family with a member that dominates nothing useful: no labeling
/// can be an interference of it.
class NoDominatingSetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Exact search refused to run or was aborted: size cap or node budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace interfere
