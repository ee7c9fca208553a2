#pragma once

#include "kshg/expansion.hpp"
#include "kshg/families.hpp"
#include "kshg/hypergraph.hpp"
#include "kshg/linalg3.hpp"
#include "kshg/mis.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kshg {

// Non-contextual maximum 2*sum(n_i) + |U|.
struct ClassicalBound {
    long total = 0;
    long weight_term = 0;
    long independence_term = 0;
    std::vector<std::size_t> witness;  // empty for closed-form bounds
};

ClassicalBound classical_bound(const HyperGraph& h, const MisOptions& options = {});

// Closed form from the family's independence formula.
ClassicalBound family_bound(const FamilySpec& spec);

struct DecompositionCheck {
    bool holds = false;
    long lhs = 0;  // (|V| - 2) <G>
    long rhs = 0;  // sum_i <G^i> - sum_i <P_i>
};

// Evaluates both sides of the vertex-removal identity
//   (|V| - 2) <G> = sum_i <G^i> - sum_i <P_i>
// for an assignment on expand(h). Each <G^i> is computed on the expansion
// of remove_vertex(h, i) under the restricted assignment.
DecompositionCheck check_subgraph_decomposition(const HyperGraph& h, const Assignment& a);

struct DecompositionTrials {
    std::size_t trials = 0;
    std::size_t failures = 0;
};

// Uniformly random assignments from a seeded generator.
DecompositionTrials check_subgraph_decomposition(const HyperGraph& h, std::size_t trials, std::uint64_t seed);

struct QuantumRange {
    long weight_term = 0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    // Hyper-edges whose weight is below the minimal weight for their
    // overlap, when the check is downgraded to a warning.
    std::vector<std::string> warnings;
};

struct QuantumOptions {
    bool allow_unrealizable = false;
};

// Hyper-edge observables contribute exactly 2n each; the state-dependent
// part is the spectrum of the sum of vertex projectors.
QuantumRange quantum_range(const HyperGraph& h, const QuantumOptions& options = {});

enum class Classification { StateIndependent, StateDependent, NoViolation };

std::string_view classification_name(Classification c);

struct ViolationReport {
    ClassicalBound classical;
    QuantumRange quantum;
    Classification classification = Classification::NoViolation;
    double margin = 0.0;
};

inline constexpr double spectral_tolerance = 1e-9;

// Strict comparisons against |U| with a 1e-9 margin; ties resolve to the
// weaker class.
ViolationReport classify(const HyperGraph& h, const QuantumOptions& options = {},
                         const MisOptions& mis = {});

// Four tetrahedron rays followed by the standard basis rotated by `delta`
// radians about the (1,1,1) axis.
std::vector<Ray> wheel7_demo_rays(double delta = 0.005);

} // namespace kshg
