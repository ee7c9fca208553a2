#pragma once

#include "kshg/hypergraph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kshg {

enum class Family {
    Complete,
    Linear,
    Cyclic,
    FractalTree,
    FractalCyclic,
    SquareLattice,
    TorusLattice,
    Wheel7,
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

// Parameters of a generated family. `k` is used by the complete, linear,
// cyclic and fractal families; `mx`, `my` by the lattices. Edge weights are
// either `uniform_weight` or, when non-empty, one entry per generated edge.
// When rays are supplied the weights are recomputed from ray overlaps.
struct FamilySpec {
    Family family = Family::Complete;
    int k = 0;
    int mx = 0;
    int my = 0;
    int uniform_weight = 1;
    std::vector<int> edge_weights;
    std::optional<std::vector<Ray>> rays;
};

// Throws ValidationError naming the violated constraint.
void validate(const FamilySpec& spec);

std::size_t family_vertex_count(const FamilySpec& spec);
std::size_t family_edge_count(const FamilySpec& spec);

// Lattice site (i, j), 1-based, to 0-based vertex index; row-major in x.
inline std::size_t lattice_index(int i, int j, int mx)
{
    return std::size_t(j - 1) * std::size_t(mx) + std::size_t(i - 1);
}

HyperGraph generate(const FamilySpec& spec);

// Independence number of the family by closed formula.
long closed_form_independence(const FamilySpec& spec);

// False for torus lattices outside the cases the formula is known to cover
// (both sides even, or shorter side 3). It overcounts e.g. 4x5.
bool closed_form_verified(const FamilySpec& spec);

} // namespace kshg
