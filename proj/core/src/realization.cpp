#include "kshg/realization.hpp"

#include "kshg/error.hpp"

#include <algorithm>
#include <string>

namespace kshg {

namespace {

void record(RealizationCheck& check, double deviation, double tol, const std::string& entity)
{
    if (check.worst_entity.empty() || deviation > check.worst_deviation) {
        check.worst_deviation = deviation;
        check.worst_entity = entity;
    }
    if (deviation > tol) {
        check.passed = false;
        check.failures.push_back(entity);
    }
}

std::string label(const ExpandedGraph& g, std::size_t v) { return vertex_label(g.vertices[v]); }

} // namespace

RealizationReport verify_realization(const ExpandedGraph& g, std::span<const Ray> coords, double tol)
{
    if (coords.size() != g.vertex_count())
        throw ValidationError("realization has coordinates for " + std::to_string(coords.size()) +
                              " vertices, expanded graph has " + std::to_string(g.vertex_count()));
    if (!(tol >= 0.0))
        throw ValidationError("tolerance must be non-negative");

    RealizationReport r;
    r.orthogonality.name = "orthogonality";
    r.bases.name = "bases";
    r.endpoint_overlap.name = "endpoint_overlap";
    r.auxiliary_sum.name = "auxiliary_sum";

    for (const auto& [u, v] : g.edges)
        record(r.orthogonality, overlap(coords[u], coords[v]), tol,
               "edge (" + label(g, u) + ", " + label(g, v) + ")");

    for (const auto& b : g.bases) {
        const Ray members[] = {coords[b[0]], coords[b[1]], coords[b[2]]};
        record(r.bases, projector_sum(members).max_abs_diff(Hermitian3::identity()), tol,
               "basis {" + label(g, b[0]) + ", " + label(g, b[1]) + ", " + label(g, b[2]) + "}");
    }

    for (const auto& f : g.fragments) {
        const std::string name = "hyper-edge " + std::to_string(f.edge_id + 1) + " (" + label(g, f.vertices[0]) +
                                 ", " + label(g, f.vertices[1]) + ")";
        const double limit = double(f.weight) / double(f.weight + 2);
        record(r.endpoint_overlap, std::max(0.0, overlap(coords[f.vertices[0]], coords[f.vertices[1]]) - limit), tol,
               name);

        if (f.weight == 0)
            continue;
        Hermitian3 sum;
        for (std::size_t l = 2; l < f.vertices.size(); ++l)
            sum += projector(coords[f.vertices[l]]);
        record(r.auxiliary_sum, sum.max_abs_diff(double(2 * f.weight) * Hermitian3::identity()), tol, name);
    }
    return r;
}

std::vector<Ray> assemble_coordinates(const ExpandedGraph& g, std::span<const Ray> core_rays,
                                      std::span<const Ray> aux_rays)
{
    const std::size_t cores = g.core_count();
    const std::size_t aux = g.vertex_count() - cores;
    if (core_rays.size() != cores)
        throw ValidationError("missing coordinates: expected " + std::to_string(cores) + " core rays, got " +
                              std::to_string(core_rays.size()));
    if (aux_rays.size() != aux)
        throw ValidationError("missing coordinates: expected " + std::to_string(aux) + " auxiliary rays, got " +
                              std::to_string(aux_rays.size()));

    std::vector<Ray> coords;
    coords.reserve(g.vertex_count());
    std::size_t next_aux = 0;
    for (const auto& role : g.vertices) {
        if (const auto* core = std::get_if<CoreRole>(&role))
            coords.push_back(core_rays[core->vertex]);
        else
            coords.push_back(aux_rays[next_aux++]);
    }
    return coords;
}

} // namespace kshg
