#pragma once

#include "kshg/linalg3.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace kshg {

// A weighted link between two rays. Weight n stands for the gadget of 2n
// auxiliary orthonormal bases; weight 0 is a plain orthogonality edge.
struct HyperEdge {
    std::size_t i = 0;
    std::size_t j = 0;
    int weight = 0;

    friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
};

// Vertices are 0-based internally. Edge endpoints are stored with i < j and
// keep their construction order.
class HyperGraph {
public:
    HyperGraph() = default;

    // Validates indices, weights and duplicates. When rays are given there
    // must be one per vertex, and no hyper-edge may join parallel rays.
    HyperGraph(std::size_t vertex_count, std::vector<HyperEdge> edges,
               std::optional<std::vector<Ray>> rays = std::nullopt);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<HyperEdge>& edges() const { return edges_; }

    bool has_rays() const { return rays_.has_value(); }
    const std::vector<Ray>& rays() const;

    // Original vertex index of each vertex (identity unless produced by
    // remove_vertex).
    const std::vector<std::size_t>& labels() const { return labels_; }

    long weight_sum() const;
    std::vector<std::vector<std::size_t>> adjacency() const;

    // Structural equality: vertex count and edge list. Rays and labels are
    // not compared.
    friend bool operator==(const HyperGraph& a, const HyperGraph& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    friend HyperGraph remove_vertex(const HyperGraph& h, std::size_t vertex);

    std::size_t vertex_count_ = 0;
    std::vector<HyperEdge> edges_;
    std::optional<std::vector<Ray>> rays_;
    std::vector<std::size_t> labels_;
};

// Overlaps at or above this are treated as parallel rays.
inline constexpr double parallel_threshold = 1.0 - 1e-9;
inline constexpr double weight_tolerance = 1e-9;

// Least n with overlap <= n/(n+2) + 1e-9; 0 for overlap <= 1e-9. With a cap N
// returns nullopt when the minimal weight would exceed N. Throws on
// (near-)parallel overlaps and on a non-positive cap.
std::optional<int> hyper_edge_weight(double overlap, std::optional<int> cap = std::nullopt);

// One hyper-edge per pair whose weight is defined under the cap, in
// lexicographic pair order.
HyperGraph build_from_rays(std::span<const Ray> rays, std::optional<int> cap = std::nullopt);

// Same topology, weights recomputed as the minimal weight of each pair.
HyperGraph with_ray_weights(const HyperGraph& h, std::vector<Ray> rays);

// Drops the vertex and its incident hyper-edges. Remaining vertices are
// renumbered in order (labels() keeps the original indices) and remaining
// edges keep their relative order.
HyperGraph remove_vertex(const HyperGraph& h, std::size_t vertex);

} // namespace kshg
