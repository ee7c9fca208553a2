#include "kshg/propagation.hpp"

#include "kshg/error.hpp"

#include <algorithm>
#include <string>

namespace kshg {

namespace {

std::string basis_text(const ExpandedGraph& g, std::size_t b)
{
    const auto& basis = g.bases[b];
    return "{" + vertex_label(g.vertices[basis[0]]) + ", " + vertex_label(g.vertices[basis[1]]) + ", " +
           vertex_label(g.vertices[basis[2]]) + "}";
}

struct Proposal {
    int value;
    StepReason reason;
};

} // namespace

PropagationOutcome ks_propagate(const ExpandedGraph& g, const PartialAssignment& forced)
{
    const std::size_t n = g.vertex_count();
    if (forced.size() != n)
        throw ValidationError("partial assignment covers " + std::to_string(forced.size()) +
                              " vertices, graph has " + std::to_string(n));
    if (g.bases.empty())
        throw ValidationError("propagation needs a graph with basis metadata (hyper-edge weight >= 1)");

    PropagationOutcome out;
    out.values.assign(n, std::nullopt);
    for (std::size_t v = 0; v < n; ++v) {
        if (!forced[v])
            continue;
        if (*forced[v] != 0 && *forced[v] != 1)
            throw ValidationError("forced value " + std::to_string(*forced[v]) + " at " +
                                  vertex_label(g.vertices[v]) + " is not 0 or 1");
        out.values[v] = *forced[v];
        out.trace.push_back({v, *forced[v], ForcedByInput{}, 0});
    }

    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());

    auto is = [&out](std::size_t v, int value) { return out.values[v] && *out.values[v] == value; };

    auto find_violation = [&](const std::vector<std::size_t>& new_ones) -> std::optional<Violation> {
        for (std::size_t v : new_ones)
            for (std::size_t u : adj[v])
                if (is(u, 1))
                    return AdjacentOnes{std::min(u, v), std::max(u, v)};
        for (std::size_t b = 0; b < g.bases.size(); ++b)
            if (std::all_of(g.bases[b].begin(), g.bases[b].end(), [&](std::size_t v) { return is(v, 0); }))
                return EmptyBasis{b};
        return std::nullopt;
    };

    {
        std::vector<std::size_t> ones;
        for (std::size_t v = 0; v < n; ++v)
            if (is(v, 1))
                ones.push_back(v);
        if ((out.violation = find_violation(ones)))
            return out;
    }

    for (int wave = 1;; ++wave) {
        std::vector<std::optional<Proposal>> proposals(n);
        bool any = false;

        for (std::size_t u = 0; u < n; ++u) {
            if (!is(u, 1))
                continue;
            for (std::size_t v : adj[u])
                if (!out.values[v] && !proposals[v]) {
                    proposals[v] = Proposal{0, ForcedByExclusivity{u}};
                    any = true;
                }
        }

        // Completeness wins over a same-wave exclusivity proposal; the
        // resulting pair of adjacent ones is reported below.
        for (std::size_t b = 0; b < g.bases.size(); ++b) {
            const auto& basis = g.bases[b];
            const auto zeros = std::count_if(basis.begin(), basis.end(), [&](std::size_t v) { return is(v, 0); });
            const auto open = std::find_if(basis.begin(), basis.end(), [&](std::size_t v) { return !out.values[v]; });
            if (zeros == 2 && open != basis.end() && !(proposals[*open] && proposals[*open]->value == 1)) {
                proposals[*open] = Proposal{1, ForcedByCompleteness{b}};
                any = true;
            }
        }

        if (!any)
            break;

        std::vector<std::size_t> new_ones;
        for (std::size_t v = 0; v < n; ++v) {
            if (!proposals[v])
                continue;
            out.values[v] = proposals[v]->value;
            out.trace.push_back({v, proposals[v]->value, proposals[v]->reason, wave});
            if (proposals[v]->value == 1)
                new_ones.push_back(v);
        }

        if ((out.violation = find_violation(new_ones)))
            return out;
    }
    return out;
}

std::string describe(const ExpandedGraph& g, const PropagationStep& step)
{
    std::string text = (step.wave == 0 ? std::string("input") : "wave " + std::to_string(step.wave)) + ": " +
                       vertex_label(g.vertices[step.vertex]) + " = " + std::to_string(step.value);
    if (const auto* ex = std::get_if<ForcedByExclusivity>(&step.reason))
        text += " (orthogonal to " + vertex_label(g.vertices[ex->neighbor]) + " = 1)";
    else if (const auto* co = std::get_if<ForcedByCompleteness>(&step.reason))
        text += " (completes basis " + basis_text(g, co->basis) + ")";
    return text;
}

std::string describe(const ExpandedGraph& g, const Violation& violation)
{
    if (const auto* adj = std::get_if<AdjacentOnes>(&violation))
        return "orthogonal vertices " + vertex_label(g.vertices[adj->u]) + " and " +
               vertex_label(g.vertices[adj->v]) + " are both 1";
    return "basis " + basis_text(g, std::get<EmptyBasis>(violation).basis) + " has no vertex at 1";
}

} // namespace kshg
