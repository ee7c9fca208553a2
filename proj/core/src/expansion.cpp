#include "kshg/expansion.hpp"

#include "kshg/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

namespace kshg {

namespace {

std::size_t add_vertex(ExpandedGraph& g, Fragment& f, VertexRole role)
{
    g.vertices.push_back(role);
    f.vertices.push_back(g.vertices.size() - 1);
    return g.vertices.size() - 1;
}

void add_edge(ExpandedGraph& g, Fragment& f, std::size_t a, std::size_t b)
{
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
    f.edges.push_back(g.edges.size() - 1);
}

void add_basis(ExpandedGraph& g, Fragment& f, Basis b)
{
    g.bases.push_back(b);
    f.bases.push_back(g.bases.size() - 1);
}

// Appends the gadget joining existing vertices p and q.
void append_gadget(ExpandedGraph& g, std::size_t edge_id, int n, std::size_t p, std::size_t q)
{
    if (n < 0)
        throw ValidationError("hyper-edge " + std::to_string(edge_id + 1) + " has negative weight " +
                              std::to_string(n));

    Fragment f;
    f.edge_id = edge_id;
    f.weight = n;
    f.vertices = {p, q};

    if (n > 0) {
        auto aux = [&](AuxKind kind, int level) { return add_vertex(g, f, AuxRole{edge_id, kind, level}); };

        // p_level / q_level chains; index n holds the endpoints themselves.
        std::vector<std::size_t> ps(std::size_t(n) + 1), qs(std::size_t(n) + 1);
        ps[0] = aux(AuxKind::P, 0);
        qs[0] = aux(AuxKind::Q, 0);
        add_edge(g, f, ps[0], qs[0]);

        for (int l = 1; l <= n; ++l) {
            const std::size_t ap = aux(AuxKind::AlphaPlus, l);
            const std::size_t am = aux(AuxKind::AlphaMinus, l);
            const std::size_t bp = aux(AuxKind::BetaPlus, l);
            const std::size_t bm = aux(AuxKind::BetaMinus, l);
            if (l < n) {
                ps[l] = aux(AuxKind::P, l);
                qs[l] = aux(AuxKind::Q, l);
            } else {
                ps[l] = p;
                qs[l] = q;
            }
            const std::size_t p_prev = ps[l - 1], q_prev = qs[l - 1];

            add_edge(g, f, p_prev, ap);
            add_edge(g, f, p_prev, bp);
            add_edge(g, f, ap, bp);
            add_edge(g, f, q_prev, am);
            add_edge(g, f, q_prev, bm);
            add_edge(g, f, am, bm);
            add_edge(g, f, ps[l], ap);
            add_edge(g, f, ps[l], am);
            add_edge(g, f, qs[l], bp);
            add_edge(g, f, qs[l], bm);

            add_basis(g, f, {p_prev, ap, bp});
            add_basis(g, f, {q_prev, am, bm});
        }
    } else {
        add_edge(g, f, p, q);
    }
    g.fragments.push_back(std::move(f));
}

} // namespace

std::string aux_kind_name(AuxKind kind)
{
    switch (kind) {
    case AuxKind::P: return "p";
    case AuxKind::Q: return "q";
    case AuxKind::AlphaPlus: return "a+";
    case AuxKind::AlphaMinus: return "a-";
    case AuxKind::BetaPlus: return "b+";
    case AuxKind::BetaMinus: return "b-";
    }
    return "?";
}

std::string vertex_label(const VertexRole& role)
{
    if (const auto* core = std::get_if<CoreRole>(&role))
        return "P" + std::to_string(core->vertex + 1);
    const auto& aux = std::get<AuxRole>(role);
    return "e" + std::to_string(aux.edge + 1) + ":" + aux_kind_name(aux.kind) + std::to_string(aux.level);
}

std::size_t ExpandedGraph::core_count() const
{
    return std::size_t(std::count_if(vertices.begin(), vertices.end(),
                                     [](const VertexRole& r) { return std::holds_alternative<CoreRole>(r); }));
}

SimpleGraph ExpandedGraph::to_simple_graph() const
{
    SimpleGraph g(vertices.size());
    for (const auto& [a, b] : edges)
        g.add_edge(a, b);
    return g;
}

Assignment::Assignment(std::vector<std::uint8_t> values) : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] > 1)
            throw ValidationError("assignment value at vertex " + std::to_string(i) + " is not 0 or 1");
}

void Assignment::set(std::size_t i, int value)
{
    if (value != 0 && value != 1)
        throw ValidationError("assignment value at vertex " + std::to_string(i) + " is not 0 or 1");
    values_.at(i) = std::uint8_t(value);
}

ExpandedGraph expand_hyper_edge(std::size_t edge_id, int weight, std::size_t p_core, std::size_t q_core)
{
    ExpandedGraph g;
    g.vertices = {CoreRole{p_core}, CoreRole{q_core}};
    append_gadget(g, edge_id, weight, 0, 1);
    return g;
}

ExpandedGraph expand(const HyperGraph& h)
{
    ExpandedGraph g;
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        g.vertices.push_back(CoreRole{v});
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        append_gadget(g, e, h.edges()[e].weight, h.edges()[e].i, h.edges()[e].j);
    return g;
}

std::pair<ExpandedGraph, std::vector<std::size_t>> extract_fragment(const ExpandedGraph& g, std::size_t edge_id)
{
    const auto it = std::find_if(g.fragments.begin(), g.fragments.end(),
                                 [edge_id](const Fragment& f) { return f.edge_id == edge_id; });
    if (it == g.fragments.end())
        throw ValidationError("expanded graph has no fragment for hyper-edge " + std::to_string(edge_id + 1));

    const Fragment& f = *it;
    std::vector<std::size_t> local_of(g.vertex_count(), std::size_t(-1));
    for (std::size_t l = 0; l < f.vertices.size(); ++l)
        local_of[f.vertices[l]] = l;

    ExpandedGraph out;
    Fragment local{f.edge_id, f.weight, {}, {}, {}};
    for (std::size_t v : f.vertices) {
        out.vertices.push_back(g.vertices[v]);
        local.vertices.push_back(out.vertices.size() - 1);
    }
    for (std::size_t e : f.edges) {
        out.edges.emplace_back(local_of[g.edges[e].first], local_of[g.edges[e].second]);
        local.edges.push_back(out.edges.size() - 1);
    }
    for (std::size_t b : f.bases) {
        const auto& basis = g.bases[b];
        out.bases.push_back({local_of[basis[0]], local_of[basis[1]], local_of[basis[2]]});
        local.bases.push_back(out.bases.size() - 1);
    }
    out.fragments.push_back(std::move(local));
    return {std::move(out), f.vertices};
}

Assignment restrict_assignment(const Assignment& a, const std::vector<std::size_t>& local_to_global)
{
    Assignment out(local_to_global.size());
    for (std::size_t l = 0; l < local_to_global.size(); ++l)
        out.set(l, a[local_to_global.at(l)]);
    return out;
}

long evaluate(const ExpandedGraph& g, const Assignment& a)
{
    if (a.size() != g.vertex_count())
        throw ValidationError("assignment covers " + std::to_string(a.size()) + " vertices, graph has " +
                              std::to_string(g.vertex_count()));
    long value = 0;
    for (std::size_t v = 0; v < a.size(); ++v)
        value += a[v];
    for (const auto& [u, v] : g.edges)
        value -= a[u] * a[v];
    return value;
}

long evaluate_C(const ExpandedGraph& fragment, const Assignment& a)
{
    std::vector<std::size_t> cores;
    for (std::size_t v = 0; v < fragment.vertex_count(); ++v)
        if (std::holds_alternative<CoreRole>(fragment.vertices[v]))
            cores.push_back(v);
    if (cores.size() != 2)
        throw ValidationError("hyper-edge observable needs a single-gadget graph with 2 core vertices, got " +
                              std::to_string(cores.size()));
    return evaluate(fragment, a) - a[cores[0]] - a[cores[1]];
}

long brute_force_max(const ExpandedGraph& g, const BruteForceOptions& options)
{
    const std::size_t n = g.vertex_count();
    const std::size_t limit = std::min<std::size_t>(options.max_bits, 62);
    if (n > limit)
        throw CapacityError("brute-force enumeration over " + std::to_string(n) +
                            " vertices exceeds the limit of " + std::to_string(limit) +
                            " bits; use the independence-number oracle instead");
    if (n == 0)
        return 0;

    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& [u, v] : g.edges) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }

    auto value_of = [&](std::uint64_t state) {
        long value = std::popcount(state);
        for (std::size_t v = 0; v < n; ++v)
            if (state >> v & 1u)
                value -= std::popcount(adj[v] & state & ((std::uint64_t{1} << v) - 1));
        return value;
    };

    // Fixed high prefix per task, Gray-code walk over the low bits.
    const std::size_t high = n >= 20 ? 6 : 0;
    const std::size_t low = n - high;
    const std::uint64_t tasks = std::uint64_t{1} << high;
    const std::uint64_t steps = std::uint64_t{1} << low;

    auto run_task = [&](std::uint64_t prefix) {
        std::uint64_t state = prefix << low;
        long value = value_of(state);
        long best = value;
        for (std::uint64_t i = 1; i < steps; ++i) {
            const int bit = std::countr_zero(i);
            const std::uint64_t mask = std::uint64_t{1} << bit;
            const long delta = 1 - std::popcount(adj[std::size_t(bit)] & state);
            if (state & mask)
                value -= delta;
            else
                value += delta;
            state ^= mask;
            best = std::max(best, value);
        }
        return best;
    };

    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = unsigned(std::min<std::uint64_t>(workers, tasks));

    std::vector<long> best(workers, value_of(0));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&](unsigned w) {
        for (std::uint64_t t = next++; t < tasks; t = next++)
            best[w] = std::max(best[w], run_task(t));
    };

    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker, w);
    }
    return *std::max_element(best.begin(), best.end());
}

long mis_oracle(const ExpandedGraph& g, const MisOptions& options)
{
    return long(independence_number(g.to_simple_graph(), options));
}

} // namespace kshg
