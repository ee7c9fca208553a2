#pragma once

#include "kshg/hypergraph.hpp"

#include <cstddef>
#include <vector>

namespace kshg {

// Plain undirected graph used by the exact independent-set searches.
class SimpleGraph {
public:
    explicit SimpleGraph(std::size_t n = 0) : adj_(n) {}

    std::size_t size() const { return adj_.size(); }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }

private:
    std::vector<std::vector<std::size_t>> adj_;
};

// Every hyper-edge, whatever its weight, is an adjacency.
SimpleGraph to_simple_graph(const HyperGraph& h);

struct IndependentSetResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness;  // sorted, lexicographically smallest maximum set
};

struct MisOptions {
    std::size_t max_vertices = 64;
    // Re-run small instances through exhaustive enumeration and require
    // agreement with branch-and-bound.
    bool cross_check = true;
};

inline constexpr std::size_t exhaustive_mis_limit = 25;

// Exact search; throws CapacityError above options.max_vertices.
IndependentSetResult max_independent_set(const SimpleGraph& g, const MisOptions& options = {});
IndependentSetResult max_independent_set(const HyperGraph& h, const MisOptions& options = {});

// Size only; skips the witness pass.
std::size_t independence_number(const SimpleGraph& g, const MisOptions& options = {});

// Enumerates every independent set. Limited to exhaustive_mis_limit vertices.
IndependentSetResult exhaustive_independent_set(const SimpleGraph& g);

} // namespace kshg
