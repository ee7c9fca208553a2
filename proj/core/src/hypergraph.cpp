#include "kshg/hypergraph.hpp"

#include "kshg/error.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace kshg {

HyperGraph::HyperGraph(std::size_t vertex_count, std::vector<HyperEdge> edges, std::optional<std::vector<Ray>> rays)
    : vertex_count_(vertex_count), edges_(std::move(edges)), rays_(std::move(rays)), labels_(vertex_count)
{
    if (vertex_count_ == 0)
        throw ValidationError("a hyper-graph needs at least one vertex");
    std::iota(labels_.begin(), labels_.end(), std::size_t{0});

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto& e : edges_) {
        if (e.i >= vertex_count_ || e.j >= vertex_count_)
            throw ValidationError("hyper-edge (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
                                  ") references a vertex outside 1.." + std::to_string(vertex_count_));
        if (e.i == e.j)
            throw ValidationError("hyper-edge (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
                                  ") is a self-loop");
        if (e.weight < 0)
            throw ValidationError("hyper-edge (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
                                  ") has negative weight " + std::to_string(e.weight));
        if (e.i > e.j)
            std::swap(e.i, e.j);
        if (!seen.emplace(e.i, e.j).second)
            throw ValidationError("duplicate hyper-edge (" + std::to_string(e.i + 1) + "," +
                                  std::to_string(e.j + 1) + ")");
    }

    if (rays_) {
        if (rays_->size() != vertex_count_)
            throw ValidationError("expected " + std::to_string(vertex_count_) + " rays, got " +
                                  std::to_string(rays_->size()));
        for (const auto& e : edges_)
            if (overlap((*rays_)[e.i], (*rays_)[e.j]) >= parallel_threshold)
                throw ValidationError("rays " + std::to_string(e.i + 1) + " and " + std::to_string(e.j + 1) +
                                      " joined by a hyper-edge are parallel");
    }
}

const std::vector<Ray>& HyperGraph::rays() const
{
    if (!rays_)
        throw ValidationError("hyper-graph has no rays bound to its vertices");
    return *rays_;
}

long HyperGraph::weight_sum() const
{
    long s = 0;
    for (const auto& e : edges_)
        s += e.weight;
    return s;
}

std::vector<std::vector<std::size_t>> HyperGraph::adjacency() const
{
    std::vector<std::vector<std::size_t>> adj(vertex_count_);
    for (const auto& e : edges_) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    return adj;
}

std::optional<int> hyper_edge_weight(double overlap, std::optional<int> cap)
{
    if (!(overlap >= 0.0))
        throw ValidationError("overlap must be a non-negative number");
    if (overlap >= parallel_threshold)
        throw ValidationError("parallel rays (overlap " + std::to_string(overlap) + ") admit no hyper-edge");
    if (cap && *cap <= 0)
        throw ValidationError("weight cap must be a positive integer");

    int n = 0;
    if (overlap > weight_tolerance) {
        auto admits = [overlap](int w) { return overlap <= double(w) / double(w + 2) + weight_tolerance; };
        n = std::max(0, int(std::ceil(2.0 * overlap / (1.0 - overlap) - weight_tolerance)));
        while (n > 0 && admits(n - 1))
            --n;
        while (!admits(n))
            ++n;
    }
    if (cap && n > *cap)
        return std::nullopt;
    return n;
}

HyperGraph build_from_rays(std::span<const Ray> rays, std::optional<int> cap)
{
    if (rays.size() < 2)
        throw ValidationError("building a hyper-graph needs at least 2 rays");

    std::vector<HyperEdge> edges;
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            const double x = overlap(rays[i], rays[j]);
            if (x >= parallel_threshold)
                throw ValidationError("rays " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                      " are parallel");
            if (auto w = hyper_edge_weight(x, cap))
                edges.push_back({i, j, *w});
        }
    return HyperGraph(rays.size(), std::move(edges), std::vector<Ray>(rays.begin(), rays.end()));
}

HyperGraph with_ray_weights(const HyperGraph& h, std::vector<Ray> rays)
{
    if (rays.size() != h.vertex_count())
        throw ValidationError("expected " + std::to_string(h.vertex_count()) + " rays, got " +
                              std::to_string(rays.size()));
    std::vector<HyperEdge> edges = h.edges();
    for (auto& e : edges) {
        const double x = overlap(rays[e.i], rays[e.j]);
        if (x >= parallel_threshold)
            throw ValidationError("rays " + std::to_string(e.i + 1) + " and " + std::to_string(e.j + 1) +
                                  " joined by a hyper-edge are parallel");
        e.weight = *hyper_edge_weight(x);
    }
    return HyperGraph(h.vertex_count(), std::move(edges), std::move(rays));
}

HyperGraph remove_vertex(const HyperGraph& h, std::size_t vertex)
{
    if (vertex >= h.vertex_count())
        throw ValidationError("cannot remove vertex " + std::to_string(vertex + 1) + " from a hyper-graph with " +
                              std::to_string(h.vertex_count()) + " vertices");
    if (h.vertex_count() == 1)
        throw ValidationError("cannot remove the only vertex of a hyper-graph");

    auto renumber = [vertex](std::size_t v) { return v > vertex ? v - 1 : v; };

    std::vector<HyperEdge> edges;
    for (const auto& e : h.edges())
        if (e.i != vertex && e.j != vertex)
            edges.push_back({renumber(e.i), renumber(e.j), e.weight});

    std::optional<std::vector<Ray>> rays;
    if (h.has_rays()) {
        rays.emplace(h.rays());
        rays->erase(rays->begin() + std::ptrdiff_t(vertex));
    }

    HyperGraph g(h.vertex_count() - 1, std::move(edges), std::move(rays));
    g.labels_ = h.labels_;
    g.labels_.erase(g.labels_.begin() + std::ptrdiff_t(vertex));
    return g;
}

} // namespace kshg
