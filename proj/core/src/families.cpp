#include "kshg/families.hpp"

#include "kshg/error.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace kshg {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> names{{
    {Family::Complete, "complete"},
    {Family::Linear, "linear"},
    {Family::Cyclic, "cyclic"},
    {Family::FractalTree, "fractal-tree"},
    {Family::FractalCyclic, "fractal-cyclic"},
    {Family::SquareLattice, "square-lattice"},
    {Family::TorusLattice, "torus-lattice"},
    {Family::Wheel7, "wheel7"},
}};

// Fractal families grow as 2^k; cap k so vertex counts stay addressable.
constexpr int max_fractal_depth = 24;

std::size_t pow2(int e) { return std::size_t{1} << e; }

void require(bool ok, std::string_view family, const std::string& constraint)
{
    if (!ok)
        throw ValidationError(std::string(family) + " requires " + constraint);
}

// 1-based pairs as written for each family, converted to 0-based.
std::vector<std::pair<std::size_t, std::size_t>> topology(const FamilySpec& spec)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto link = [&pairs](std::size_t a, std::size_t b) { pairs.emplace_back(a - 1, b - 1); };
    const auto k = std::size_t(spec.k);

    switch (spec.family) {
    case Family::Complete:
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j)
                link(i, j);
        break;
    case Family::Linear:
        for (std::size_t i = 1; i < k; ++i)
            link(i, i + 1);
        break;
    case Family::Cyclic:
        for (std::size_t i = 1; i <= k; ++i)
            link(i, i % k + 1);
        break;
    case Family::FractalTree:
        for (std::size_t i = 1; i <= pow2(spec.k) - 1; ++i) {
            link(i, 2 * i);
            link(i, 2 * i + 1);
        }
        break;
    case Family::FractalCyclic:
        link(1, 2);
        link(1, 3);
        link(2, 3);
        for (std::size_t i = 1; i <= 3 * (pow2(spec.k - 1) - 1); ++i) {
            link(i, 2 * i + 2);
            link(i, 2 * i + 3);
            link(2 * i + 2, 2 * i + 3);
        }
        break;
    case Family::SquareLattice: {
        auto at = [&](int i, int j) { return lattice_index(i, j, spec.mx) + 1; };
        for (int i = 1; i < spec.mx; ++i)
            for (int j = 1; j <= spec.my; ++j)
                link(at(i, j), at(i + 1, j));
        for (int i = 1; i <= spec.mx; ++i)
            for (int j = 1; j < spec.my; ++j)
                link(at(i, j), at(i, j + 1));
        break;
    }
    case Family::TorusLattice: {
        auto at = [&](int i, int j) { return lattice_index(i, j, spec.mx) + 1; };
        for (int i = 1; i <= spec.mx; ++i)
            for (int j = 1; j <= spec.my; ++j) {
                link(at(i, j), at(i % spec.mx + 1, j));
                link(at(i, j), at(i, j % spec.my + 1));
            }
        break;
    }
    case Family::Wheel7:
        for (std::size_t i = 1; i <= 7; ++i) {
            link(i, (i % 7) + 1);
            link(i, ((i + 2) % 7) + 1);
        }
        break;
    }
    return pairs;
}

} // namespace

std::string_view family_name(Family f)
{
    for (const auto& [family, name] : names)
        if (family == f)
            return name;
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (const auto& [family, n] : names)
        if (n == name)
            return family;
    throw ValidationError("unknown family '" + std::string(name) +
                          "' (expected complete, linear, cyclic, fractal-tree, fractal-cyclic, square-lattice, "
                          "torus-lattice or wheel7)");
}

void validate(const FamilySpec& spec)
{
    const auto name = family_name(spec.family);
    switch (spec.family) {
    case Family::Complete:
    case Family::Linear:
        require(spec.k >= 2, name, "k >= 2");
        break;
    case Family::Cyclic:
        require(spec.k >= 3, name, "k >= 3");
        break;
    case Family::FractalTree:
    case Family::FractalCyclic:
        require(spec.k >= 1, name, "k >= 1");
        require(spec.k <= max_fractal_depth, name, "k <= " + std::to_string(max_fractal_depth));
        break;
    case Family::SquareLattice:
        require(spec.mx >= 1 && spec.my >= 1, name, "m_x, m_y >= 1");
        break;
    case Family::TorusLattice:
        require(spec.mx >= 3 && spec.my >= 3, name, "m_x, m_y >= 3");
        break;
    case Family::Wheel7:
        break;
    }
    require(spec.uniform_weight >= 0, name, "a non-negative weight");
    if (!spec.edge_weights.empty()) {
        const auto expected = family_edge_count(spec);
        require(spec.edge_weights.size() == expected, name,
                std::to_string(expected) + " per-edge weights, got " + std::to_string(spec.edge_weights.size()));
        require(std::all_of(spec.edge_weights.begin(), spec.edge_weights.end(), [](int w) { return w >= 0; }), name,
                "non-negative weights");
    }
    if (spec.rays)
        require(spec.rays->size() == family_vertex_count(spec), name,
                std::to_string(family_vertex_count(spec)) + " rays, got " + std::to_string(spec.rays->size()));
}

std::size_t family_vertex_count(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::Complete:
    case Family::Linear:
    case Family::Cyclic:
        return std::size_t(spec.k);
    case Family::FractalTree:
        return pow2(spec.k + 1) - 1;
    case Family::FractalCyclic:
        return 3 * (pow2(spec.k) - 1);
    case Family::SquareLattice:
    case Family::TorusLattice:
        return std::size_t(spec.mx) * std::size_t(spec.my);
    case Family::Wheel7:
        return 7;
    }
    return 0;
}

std::size_t family_edge_count(const FamilySpec& spec)
{
    const auto k = std::size_t(spec.k);
    const auto mx = std::size_t(spec.mx);
    const auto my = std::size_t(spec.my);
    switch (spec.family) {
    case Family::Complete:
        return k * (k - 1) / 2;
    case Family::Linear:
        return k - 1;
    case Family::Cyclic:
        return k;
    case Family::FractalTree:
        return pow2(spec.k + 1) - 2;
    case Family::FractalCyclic:
        return 9 * (pow2(spec.k - 1) - 1) + 3;
    case Family::SquareLattice:
        return mx * (my - 1) + my * (mx - 1);
    case Family::TorusLattice:
        return 2 * mx * my;
    case Family::Wheel7:
        return 14;
    }
    return 0;
}

HyperGraph generate(const FamilySpec& spec)
{
    validate(spec);
    const auto pairs = topology(spec);

    std::vector<HyperEdge> edges;
    edges.reserve(pairs.size());
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        const int w = spec.edge_weights.empty() ? spec.uniform_weight : spec.edge_weights[e];
        edges.push_back({pairs[e].first, pairs[e].second, w});
    }

    HyperGraph h(family_vertex_count(spec), std::move(edges));
    if (spec.rays)
        return with_ray_weights(h, *spec.rays);
    return h;
}

long closed_form_independence(const FamilySpec& spec)
{
    validate(spec);
    const long k = spec.k;
    switch (spec.family) {
    case Family::Complete:
        return 1;
    case Family::Linear:
        return (k + 1) / 2;
    case Family::Cyclic:
        return k / 2;
    case Family::FractalTree:
        // (4/3)(2^k - 2^((k mod 2) - 2)) in integer form.
        return (long(pow2(spec.k + 2)) - long(pow2(spec.k % 2))) / 3;
    case Family::FractalCyclic:
        return long(pow2(spec.k)) - 1;
    case Family::SquareLattice:
        return (long(spec.mx) * spec.my + 1) / 2;
    case Family::TorusLattice:
        return long(std::min(spec.mx, spec.my) / 2) * std::max(spec.mx, spec.my);
    case Family::Wheel7:
        return 2;
    }
    return 0;
}

bool closed_form_verified(const FamilySpec& spec)
{
    if (spec.family != Family::TorusLattice)
        return true;
    // Both sides even: the lattice is bipartite with a perfect matching.
    // Shorter side 3: one vertex per 3-cycle along a proper 3-colouring.
    return std::min(spec.mx, spec.my) == 3 || (spec.mx % 2 == 0 && spec.my % 2 == 0);
}

} // namespace kshg
