#include "kshg/bounds.hpp"

#include "kshg/error.hpp"

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <tuple>

namespace kshg {

ClassicalBound classical_bound(const HyperGraph& h, const MisOptions& options)
{
    const IndependentSetResult mis = max_independent_set(h, options);
    ClassicalBound b;
    b.weight_term = 2 * h.weight_sum();
    b.independence_term = long(mis.size);
    b.witness = mis.witness;
    b.total = b.weight_term + b.independence_term;
    return b;
}

ClassicalBound family_bound(const FamilySpec& spec)
{
    validate(spec);
    long weights = 0;
    if (spec.rays) {
        weights = generate(spec).weight_sum();
    } else if (spec.edge_weights.empty()) {
        weights = long(family_edge_count(spec)) * spec.uniform_weight;
    } else {
        for (int w : spec.edge_weights)
            weights += w;
    }

    ClassicalBound b;
    b.weight_term = 2 * weights;
    b.independence_term = closed_form_independence(spec);
    b.total = b.weight_term + b.independence_term;
    return b;
}

DecompositionCheck check_subgraph_decomposition(const HyperGraph& h, const Assignment& a)
{
    const std::size_t k = h.vertex_count();
    if (k < 3)
        throw ValidationError("subgraph decomposition needs at least 3 vertices, got " + std::to_string(k));

    const ExpandedGraph g = expand(h);
    if (a.size() != g.vertex_count())
        throw ValidationError("assignment covers " + std::to_string(a.size()) + " vertices, expansion has " +
                              std::to_string(g.vertex_count()));

    long core_sum = 0;
    for (std::size_t v = 0; v < k; ++v)
        core_sum += a[v];

    long whole = core_sum;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto [fragment, map] = extract_fragment(g, e);
        whole += evaluate_C(fragment, restrict_assignment(a, map));
    }

    // Locate every expanded vertex of h by role so subgraph expansions can be
    // mapped back onto the assignment.
    std::map<std::tuple<std::size_t, AuxKind, int>, std::size_t> aux_index;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (const auto* aux = std::get_if<AuxRole>(&g.vertices[v]))
            aux_index[{aux->edge, aux->kind, aux->level}] = v;

    long subgraphs = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const HyperGraph sub = remove_vertex(h, i);
        std::vector<std::size_t> edge_origin;
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            if (h.edges()[e].i != i && h.edges()[e].j != i)
                edge_origin.push_back(e);

        const ExpandedGraph sg = expand(sub);
        std::vector<std::size_t> to_global(sg.vertex_count());
        for (std::size_t v = 0; v < sg.vertex_count(); ++v) {
            if (const auto* core = std::get_if<CoreRole>(&sg.vertices[v])) {
                to_global[v] = sub.labels()[core->vertex];
            } else {
                const auto& aux = std::get<AuxRole>(sg.vertices[v]);
                to_global[v] = aux_index.at({edge_origin[aux.edge], aux.kind, aux.level});
            }
        }
        subgraphs += evaluate(sg, restrict_assignment(a, to_global));
    }

    DecompositionCheck check;
    check.lhs = long(k - 2) * whole;
    check.rhs = subgraphs - core_sum;
    check.holds = check.lhs == check.rhs;
    return check;
}

DecompositionTrials check_subgraph_decomposition(const HyperGraph& h, std::size_t trials, std::uint64_t seed)
{
    const std::size_t n = expand(h).vertex_count();
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);

    DecompositionTrials result;
    for (std::size_t t = 0; t < trials; ++t) {
        Assignment a(n);
        for (std::size_t v = 0; v < n; ++v)
            a.set(v, coin(rng) ? 1 : 0);
        ++result.trials;
        if (!check_subgraph_decomposition(h, a).holds)
            ++result.failures;
    }
    return result;
}

QuantumRange quantum_range(const HyperGraph& h, const QuantumOptions& options)
{
    if (!h.has_rays())
        throw ValidationError("quantum range needs a ray bound to every vertex");
    const auto& rays = h.rays();

    QuantumRange q;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& edge = h.edges()[e];
        const double x = overlap(rays[edge.i], rays[edge.j]);
        const int minimal = *hyper_edge_weight(x);
        if (edge.weight < minimal) {
            const std::string msg = "hyper-edge " + std::to_string(e + 1) + " (" + std::to_string(edge.i + 1) +
                                    "," + std::to_string(edge.j + 1) + ") has weight " +
                                    std::to_string(edge.weight) + " but overlap " + std::to_string(x) +
                                    " needs at least " + std::to_string(minimal);
            if (!options.allow_unrealizable)
                throw ValidationError(msg);
            q.warnings.push_back(msg);
        }
    }

    const EigenDecomposition eig = eigensystem(projector_sum(rays));
    q.weight_term = 2 * h.weight_sum();
    q.lambda_min = eig.min();
    q.lambda_max = eig.max();
    q.lo = double(q.weight_term) + q.lambda_min;
    q.hi = double(q.weight_term) + q.lambda_max;
    return q;
}

std::string_view classification_name(Classification c)
{
    switch (c) {
    case Classification::StateIndependent: return "state-independent";
    case Classification::StateDependent: return "state-dependent";
    case Classification::NoViolation: return "no-violation";
    }
    return "unknown";
}

ViolationReport classify(const HyperGraph& h, const QuantumOptions& options, const MisOptions& mis)
{
    ViolationReport r;
    r.quantum = quantum_range(h, options);
    r.classical = classical_bound(h, mis);

    const double u = double(r.classical.independence_term);
    if (r.quantum.lambda_min > u + spectral_tolerance) {
        r.classification = Classification::StateIndependent;
        r.margin = r.quantum.lambda_min - u;
    } else {
        r.classification = r.quantum.lambda_max > u + spectral_tolerance ? Classification::StateDependent
                                                                          : Classification::NoViolation;
        r.margin = r.quantum.lambda_max - u;
    }
    return r;
}

std::vector<Ray> wheel7_demo_rays(double delta)
{
    const double s = 1.0 / std::sqrt(3.0);
    std::vector<Ray> rays{
        Ray(s, s, s),
        Ray(s, -s, -s),
        Ray(-s, s, -s),
        Ray(-s, -s, s),
    };

    // Rodrigues rotation about the unit axis (1,1,1)/sqrt(3).
    const double c = std::cos(delta), sn = std::sin(delta);
    const std::array<double, 3> axis{s, s, s};
    for (int b = 0; b < 3; ++b) {
        std::array<double, 3> v{};
        v[b] = 1.0;
        const double dot = axis[0] * v[0] + axis[1] * v[1] + axis[2] * v[2];
        const std::array<double, 3> cross{
            axis[1] * v[2] - axis[2] * v[1],
            axis[2] * v[0] - axis[0] * v[2],
            axis[0] * v[1] - axis[1] * v[0],
        };
        Vector3 r{};
        for (int i = 0; i < 3; ++i)
            r[i] = v[i] * c + cross[i] * sn + axis[i] * dot * (1.0 - c);
        rays.push_back(Ray::normalized(r));
    }
    return rays;
}

} // namespace kshg
