#pragma once

#include "kshg/hypergraph.hpp"
#include "kshg/mis.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kshg {

enum class AuxKind : std::uint8_t { P, Q, AlphaPlus, AlphaMinus, BetaPlus, BetaMinus };

// "p", "q", "a+", "a-", "b+", "b-"
std::string aux_kind_name(AuxKind kind);

struct CoreRole {
    std::size_t vertex;
    friend bool operator==(const CoreRole&, const CoreRole&) = default;
};

// Auxiliary ray of hyper-edge `edge`. P/Q levels run 0..n-1, alpha/beta
// levels 1..n, for a hyper-edge of weight n.
struct AuxRole {
    std::size_t edge;
    AuxKind kind;
    int level;
    friend bool operator==(const AuxRole&, const AuxRole&) = default;
};

using VertexRole = std::variant<CoreRole, AuxRole>;

using Edge = std::pair<std::size_t, std::size_t>;   // first < second
using Basis = std::array<std::size_t, 3>;

// Vertices and edges of one hyper-edge gadget inside an expanded graph,
// listed as global indices. vertices[0], vertices[1] are the two endpoints.
struct Fragment {
    std::size_t edge_id = 0;
    int weight = 0;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;   // indices into ExpandedGraph::edges
    std::vector<std::size_t> bases;   // indices into ExpandedGraph::bases
};

// Orthogonality graph with every hyper-edge replaced by its (6n+2)-ray
// gadget. Core vertices come first, in hyper-graph order.
struct ExpandedGraph {
    std::vector<VertexRole> vertices;
    std::vector<Edge> edges;
    std::vector<Basis> bases;
    std::vector<Fragment> fragments;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t core_count() const;
    SimpleGraph to_simple_graph() const;
};

// A 0/1 valuation of expanded-graph vertices.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n) : values_(n, 0) {}
    explicit Assignment(std::vector<std::uint8_t> values);

    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    void set(std::size_t i, int value);
    const std::vector<std::uint8_t>& values() const { return values_; }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<std::uint8_t> values_;
};

// Standalone gadget for one hyper-edge of weight n: vertices 0 and 1 are the
// endpoints p_n and q_n (roles Core(p_core), Core(q_core)).
ExpandedGraph expand_hyper_edge(std::size_t edge_id, int weight, std::size_t p_core = 0, std::size_t q_core = 1);

ExpandedGraph expand(const HyperGraph& h);

// Fragment `edge_id` of g as a standalone graph, plus the local-to-global
// vertex map.
std::pair<ExpandedGraph, std::vector<std::size_t>> extract_fragment(const ExpandedGraph& g, std::size_t edge_id);

Assignment restrict_assignment(const Assignment& a, const std::vector<std::size_t>& local_to_global);

// sum of v_i minus the sum of v_i v_j over edges.
long evaluate(const ExpandedGraph& g, const Assignment& a);

// Hyper-edge observable on a single-gadget graph: evaluate minus the two
// endpoint values.
long evaluate_C(const ExpandedGraph& fragment, const Assignment& a);

struct BruteForceOptions {
    std::size_t max_bits = 30;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

// Exact maximum of evaluate over all 2^|V| assignments.
long brute_force_max(const ExpandedGraph& g, const BruteForceOptions& options = {});

// Maximum of evaluate via the independence number of g.
long mis_oracle(const ExpandedGraph& g, const MisOptions& options = {});

// Gadget-local label, e.g. "P1" for a core vertex and "e2:a+1" for an
// auxiliary one (both 1-based).
std::string vertex_label(const VertexRole& role);

} // namespace kshg
