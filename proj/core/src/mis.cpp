#include "kshg/mis.hpp"

#include "kshg/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kshg {

namespace {

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    bool any() const
    {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += std::size_t(std::popcount(w));
        return c;
    }

    std::size_t first() const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return w * 64 + std::size_t(std::countr_zero(words_[w]));
        return std::size_t(-1);
    }

    bool subset_of(const Bitset& o) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
                f(w * 64 + std::size_t(std::countr_zero(bits)));
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= o.words_[w];
        return *this;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= o.words_[w];
        return *this;
    }

    Bitset& operator-=(const Bitset& o)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

private:
    std::vector<std::uint64_t> words_;
};

// Exact independence number of induced subgraphs by branch and reduce:
// simplicial vertices are taken, dominated vertices dropped, components
// solved separately, and the exclude branch is pruned against a greedy
// clique-cover upper bound.
class BranchAndBound {
public:
    explicit BranchAndBound(const SimpleGraph& g) : n_(g.size()), adjacent_(n_, Bitset(n_)), closed_(n_, Bitset(n_))
    {
        for (std::size_t v = 0; v < n_; ++v) {
            for (std::size_t u : g.neighbors(v))
                adjacent_[v].set(u);
            closed_[v] = adjacent_[v];
            closed_[v].set(v);
        }
    }

    Bitset candidates(const std::vector<std::size_t>& vertices) const
    {
        Bitset p(n_);
        for (std::size_t v : vertices)
            p.set(v);
        return p;
    }

    std::size_t maximum(const Bitset& p) const { return solve(p); }

    // True iff p contains an independent set of at least `size` vertices.
    bool reaches(const Bitset& p, std::size_t size) const
    {
        if (size == 0)
            return true;
        if (clique_cover(p) < size)
            return false;
        return solve(p) >= size;
    }

private:
    // Applies the reduction rules until none fires; returns the number of
    // vertices taken.
    std::size_t reduce(Bitset& p) const
    {
        std::size_t taken = 0;
        for (bool changed = true; changed;) {
            changed = false;
            p.for_each([&](std::size_t v) {
                if (!p.test(v))
                    return;
                const Bitset nv = adjacent_[v] & p;
                bool simplicial = true;
                nv.for_each([&](std::size_t u) {
                    if (simplicial && (nv - closed_[u]).any())
                        simplicial = false;
                });
                if (simplicial) {
                    ++taken;
                    p -= closed_[v];
                    changed = true;
                    return;
                }
                const Bitset cv = closed_[v] & p;
                bool dominated = false;
                nv.for_each([&](std::size_t u) {
                    if (!dominated && (closed_[u] & p).subset_of(cv))
                        dominated = true;
                });
                if (dominated) {
                    p.reset(v);
                    changed = true;
                }
            });
        }
        return taken;
    }

    std::size_t clique_cover(Bitset uncovered) const
    {
        std::size_t cliques = 0;
        while (uncovered.any()) {
            ++cliques;
            Bitset open = uncovered;
            while (open.any()) {
                const std::size_t v = open.first();
                uncovered.reset(v);
                open &= adjacent_[v];
            }
        }
        return cliques;
    }

    std::vector<Bitset> components(const Bitset& p) const
    {
        std::vector<Bitset> out;
        Bitset rest = p;
        while (rest.any()) {
            Bitset comp(n_);
            Bitset frontier(n_);
            frontier.set(rest.first());
            while (frontier.any()) {
                comp |= frontier;
                Bitset next(n_);
                frontier.for_each([&](std::size_t v) { next |= adjacent_[v]; });
                next &= rest;
                next -= comp;
                frontier = next;
            }
            rest -= comp;
            out.push_back(std::move(comp));
        }
        return out;
    }

    std::size_t solve(Bitset p) const
    {
        const std::size_t taken = reduce(p);
        if (!p.any())
            return taken;

        const auto parts = components(p);
        if (parts.size() > 1) {
            std::size_t sum = taken;
            for (const auto& part : parts)
                sum += solve(part);
            return sum;
        }

        std::size_t pivot = 0, degree = 0;
        p.for_each([&](std::size_t v) {
            const std::size_t d = (adjacent_[v] & p).count();
            if (d > degree) {
                degree = d;
                pivot = v;
            }
        });

        const std::size_t with = 1 + solve(p - closed_[pivot]);
        Bitset without = p;
        without.reset(pivot);
        if (clique_cover(without) <= with)
            return taken + with;
        return taken + std::max(with, solve(without));
    }

    std::size_t n_;
    std::vector<Bitset> adjacent_;
    std::vector<Bitset> closed_;
};

void check_capacity(const SimpleGraph& g, const MisOptions& options)
{
    if (g.size() > options.max_vertices)
        throw CapacityError("exact independent-set search on " + std::to_string(g.size()) +
                            " vertices exceeds the configured limit of " + std::to_string(options.max_vertices));
}

IndependentSetResult branch_and_bound(const SimpleGraph& g)
{
    BranchAndBound solver(g);
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), std::size_t{0});

    IndependentSetResult result;
    result.size = solver.maximum(solver.candidates(all));

    // Smallest-first greedy over vertex labels, keeping a vertex whenever the
    // remaining candidates can still complete a maximum set.
    std::vector<std::size_t> pool = all;
    for (std::size_t v = 0; v < g.size() && result.witness.size() < result.size; ++v) {
        if (std::find(pool.begin(), pool.end(), v) == pool.end())
            continue;
        std::vector<std::size_t> rest;
        for (std::size_t u : pool)
            if (u > v && !g.adjacent(u, v))
                rest.push_back(u);
        if (solver.reaches(solver.candidates(rest), result.size - result.witness.size() - 1)) {
            result.witness.push_back(v);
            pool = std::move(rest);
        } else {
            pool.erase(std::remove(pool.begin(), pool.end(), v), pool.end());
        }
    }
    return result;
}

} // namespace

void SimpleGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= size() || v >= size() || u == v)
        throw ValidationError("invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (adjacent(u, v))
        return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const
{
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

SimpleGraph to_simple_graph(const HyperGraph& h)
{
    SimpleGraph g(h.vertex_count());
    for (const auto& e : h.edges())
        g.add_edge(e.i, e.j);
    return g;
}

IndependentSetResult exhaustive_independent_set(const SimpleGraph& g)
{
    const std::size_t n = g.size();
    if (n > exhaustive_mis_limit)
        throw CapacityError("exhaustive independent-set enumeration is limited to " +
                            std::to_string(exhaustive_mis_limit) + " vertices");

    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u : g.neighbors(v))
            adj[v] |= std::uint32_t{1} << u;

    std::uint32_t best = 0;
    int best_size = 0;

    // Include-before-exclude depth-first order visits equal-size sets in
    // lexicographic order, so only strict improvements are kept.
    auto visit = [&](auto&& self, std::size_t v, std::uint32_t chosen, std::uint32_t blocked) -> void {
        if (v == n) {
            const int size = std::popcount(chosen);
            if (size > best_size) {
                best_size = size;
                best = chosen;
            }
            return;
        }
        const std::uint32_t bit = std::uint32_t{1} << v;
        if (!(blocked & bit))
            self(self, v + 1, chosen | bit, blocked | adj[v]);
        self(self, v + 1, chosen, blocked);
    };
    visit(visit, 0, 0, 0);

    IndependentSetResult result;
    result.size = std::size_t(best_size);
    for (std::size_t v = 0; v < n; ++v)
        if (best & (std::uint32_t{1} << v))
            result.witness.push_back(v);
    return result;
}

IndependentSetResult max_independent_set(const SimpleGraph& g, const MisOptions& options)
{
    check_capacity(g, options);
    IndependentSetResult result = branch_and_bound(g);
    if (options.cross_check && g.size() <= exhaustive_mis_limit) {
        const IndependentSetResult reference = exhaustive_independent_set(g);
        if (reference.size != result.size || reference.witness != result.witness)
            throw std::logic_error("branch-and-bound and exhaustive independent-set searches disagree");
    }
    return result;
}

IndependentSetResult max_independent_set(const HyperGraph& h, const MisOptions& options)
{
    return max_independent_set(to_simple_graph(h), options);
}

std::size_t independence_number(const SimpleGraph& g, const MisOptions& options)
{
    check_capacity(g, options);
    BranchAndBound solver(g);
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return solver.maximum(solver.candidates(all));
}

} // namespace kshg
