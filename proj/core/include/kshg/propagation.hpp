#pragma once

#include "kshg/expansion.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kshg {

// Partial valuation: nullopt means unassigned. Values other than 0 and 1
// are rejected by ks_propagate.
using PartialAssignment = std::vector<std::optional<int>>;

struct ForcedByInput {};
// Set to 0 because an adjacent vertex holds 1.
struct ForcedByExclusivity {
    std::size_t neighbor;
};
// Set to 1 because the other two members of a basis hold 0.
struct ForcedByCompleteness {
    std::size_t basis;
};

using StepReason = std::variant<ForcedByInput, ForcedByExclusivity, ForcedByCompleteness>;

struct PropagationStep {
    std::size_t vertex;
    int value;
    StepReason reason;
    int wave;  // 0 for the input, then one per round of rule applications
};

struct AdjacentOnes {
    std::size_t u;
    std::size_t v;
};
struct EmptyBasis {
    std::size_t basis;
};
using Violation = std::variant<AdjacentOnes, EmptyBasis>;

struct PropagationOutcome {
    // Consistent: values reached at the fixpoint; vertices no rule touched
    // stay unassigned.
    PartialAssignment values;
    std::vector<PropagationStep> trace;
    std::optional<Violation> violation;

    bool contradiction() const { return violation.has_value(); }
};

// Applies, in synchronous waves until nothing changes:
//   exclusivity  - a vertex at 1 forces all its neighbours to 0;
//   completeness - a basis with two members at 0 forces the third to 1.
// Stops at the first violated constraint.
PropagationOutcome ks_propagate(const ExpandedGraph& g, const PartialAssignment& forced);

std::string describe(const ExpandedGraph& g, const PropagationStep& step);
std::string describe(const ExpandedGraph& g, const Violation& violation);

} // namespace kshg
