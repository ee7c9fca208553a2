// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "cli.hpp"
#include "kshg/kshg.hpp"
#include "oracles.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kshg;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed;
    std::string detail;
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

FamilySpec uniform(Family f, int k, int weight)
{
    FamilySpec spec{f, k};
    spec.uniform_weight = weight;
    return spec;
}

HyperGraph random_hypergraph(std::mt19937_64& rng, std::size_t k_min, std::size_t k_max, int max_weight)
{
    const std::size_t k = k_min + rng() % (k_max - k_min + 1);
    std::vector<HyperEdge> edges;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (rng() % 2)
                edges.push_back({i, j, int(rng() % (max_weight + 1))});
    return HyperGraph(k, edges);
}

Outcome single_edge_maximum()
{
    const auto start = Clock::now();
    std::string values;
    bool ok = true;
    for (int n = 0; n <= 3; ++n) {
        const long m = brute_force_max(expand_hyper_edge(0, n));
        ok = ok && m == 2 * n + 1;
        values += fmt::format("{}n={}:{}", n ? " " : "", n, m);
    }
    const double t = seconds_since(start);
    return {ok && t < 5.0, fmt::format("{} in {:.2f}s", values, t)};
}

Outcome hyper_edge_bound()
{
    bool ok = true;
    std::string values;
    for (int n = 1; n <= 2; ++n) {
        const auto g = expand_hyper_edge(0, n);
        long best = std::numeric_limits<long>::min();
        for (std::uint32_t mask = 0; mask < (1u << g.vertex_count()); ++mask) {
            Assignment a(g.vertex_count());
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                a.set(v, int(mask >> v & 1u));
            best = std::max(best, evaluate_C(g, a));
        }
        ok = ok && best == 2 * n;
        values += fmt::format("{}n={}:{}", n > 1 ? " " : "", n, best);
    }
    return {ok, values};
}

Outcome family_bounds()
{
    std::vector<FamilySpec> grid;
    for (int w : {1, 2}) {
        for (int k = 2; k <= 6; ++k)
            grid.push_back(uniform(Family::Complete, k, w));
        for (int k = 2; k <= 8; ++k)
            grid.push_back(uniform(Family::Linear, k, w));
        for (int k = 3; k <= 8; ++k)
            grid.push_back(uniform(Family::Cyclic, k, w));
    }
    std::size_t mismatches = 0, brute_runs = 0, brute_misses = 0;
    for (const auto& spec : grid) {
        const auto h = generate(spec);
        const auto closed = family_bound(spec).total;
        const auto exact = classical_bound(h).total;
        if (closed != exact) {
            ++mismatches;
            fmt::print("    mismatch: {} k={} w={}: closed {} exact {}\n", family_name(spec.family), spec.k,
                       spec.uniform_weight, closed, exact);
        }
        const auto g = expand(h);
        if (g.vertex_count() <= 22) {
            ++brute_runs;
            if (brute_force_max(g) != exact)
                ++brute_misses;
        }
    }
    return {mismatches == 0 && brute_misses == 0 && brute_runs > 0,
            fmt::format("{} instances, {} mismatches; brute force attained the bound on {}/{}", grid.size(),
                        mismatches, brute_runs - brute_misses, brute_runs)};
}

Outcome soundness()
{
    std::mt19937_64 rng(20240401);
    MisOptions wide;
    wide.max_vertices = 256;
    std::size_t violations = 0, equal = 0;
    const std::size_t trials = 200;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto h = random_hypergraph(rng, 1, 5, 2);
        const long oracle = mis_oracle(expand(h), wide);
        const long bound = classical_bound(h).total;
        if (oracle > bound)
            ++violations;
        if (oracle == bound)
            ++equal;
    }
    return {violations == 0, fmt::format("{} graphs, {} above the bound, equality in {} ({:.1f}%)", trials,
                                          violations, equal, 100.0 * double(equal) / double(trials))};
}

Outcome decomposition()
{
    std::mt19937_64 rng(20240402);
    std::size_t failures = 0;
    const std::size_t trials = 1000;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto h = random_hypergraph(rng, 3, 6, 2);
        Assignment a(expand(h).vertex_count());
        for (std::size_t v = 0; v < a.size(); ++v)
            a.set(v, int(rng() % 2));
        if (!check_subgraph_decomposition(h, a).holds)
            ++failures;
    }
    return {failures == 0, fmt::format("{} pairs, {} failures", trials, failures)};
}

Outcome independence_formulas()
{
    struct Case {
        FamilySpec spec;
        long expected;
    };
    std::vector<Case> cases{
        {FamilySpec{Family::FractalTree, 1}, 2},   {FamilySpec{Family::FractalTree, 2}, 5},
        {FamilySpec{Family::FractalTree, 3}, 10},  {FamilySpec{Family::FractalCyclic, 1}, 1},
        {FamilySpec{Family::FractalCyclic, 2}, 3}, {FamilySpec{Family::FractalCyclic, 3}, 7},
        {FamilySpec{Family::TorusLattice, 0, 3, 3}, 3}, {FamilySpec{Family::TorusLattice, 0, 3, 4}, 4},
        {FamilySpec{Family::TorusLattice, 0, 4, 4}, 8}, {FamilySpec{Family::Wheel7}, 2},
    };
    for (int mx = 1; mx <= 4; ++mx)
        for (int my = 1; my <= 4; ++my)
            cases.push_back({FamilySpec{Family::SquareLattice, 0, mx, my}, (mx * my + 1) / 2});

    const auto start = Clock::now();
    std::size_t failures = 0;
    for (const auto& c : cases) {
        const long closed = closed_form_independence(c.spec);
        const long exact = long(max_independent_set(generate(c.spec)).size);
        if (closed != c.expected || exact != c.expected) {
            ++failures;
            fmt::print("    {} k={} {}x{}: expected {}, formula {}, exact {}\n", family_name(c.spec.family), c.spec.k,
                       c.spec.mx, c.spec.my, c.expected, closed, exact);
        }
    }
    const double t = seconds_since(start);
    return {failures == 0 && t < 10.0, fmt::format("{} instances, {} failures in {:.2f}s", cases.size(), failures, t)};
}

Outcome clifton()
{
    bool ok = true;
    std::string lengths;
    for (int n = 1; n <= 4; ++n) {
        const auto g = expand_hyper_edge(0, n);
        PartialAssignment forced(g.vertex_count());
        forced[0] = 1;
        forced[1] = 1;
        const auto out = ks_propagate(g, forced);
        const auto p0 = std::size_t(std::find(g.vertices.begin(), g.vertices.end(), VertexRole{AuxRole{0, AuxKind::P, 0}}) -
                                    g.vertices.begin());
        const auto q0 = std::size_t(std::find(g.vertices.begin(), g.vertices.end(), VertexRole{AuxRole{0, AuxKind::Q, 0}}) -
                                    g.vertices.begin());
        const auto* adj = out.violation ? std::get_if<AdjacentOnes>(&*out.violation) : nullptr;
        const bool at_root = adj && std::minmax(adj->u, adj->v) == std::minmax(p0, q0);
        ok = ok && out.contradiction() && at_root;
        lengths += fmt::format("{}n={}:{} steps", n > 1 ? ", " : "", n, out.trace.size());
    }
    return {ok, "contradiction at (p0, q0); " + lengths};
}

Outcome quantum_wheel()
{
    FamilySpec spec{Family::Wheel7};
    spec.rays = wheel7_demo_rays(0.005);
    const auto r = classify(generate(spec));
    const double lmin = r.quantum.lambda_min;
    const bool ok = std::abs(lmin - 7.0 / 3.0) <= 0.05 && r.classification == Classification::StateIndependent &&
                    r.classical.independence_term == 2 && r.margin > 0.25;
    return {ok, fmt::format("lambda_min = {:.6f}, |U| = {}, {}, margin {:.4f}", lmin, r.classical.independence_term,
                            classification_name(r.classification), r.margin)};
}

Outcome tetrahedron()
{
    const double dev = projector_sum(oracle::tetrahedron()).max_abs_diff((4.0 / 3.0) * Hermitian3::identity());
    return {dev <= 1e-12, fmt::format("max entry deviation {:.3g}", dev)};
}

Outcome numerics()
{
    std::mt19937_64 rng(20240403);
    double worst_residual = 0.0, worst_phase = 0.0;
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int t = 0; t < 1000; ++t) {
        const auto m = oracle::random_hermitian(rng);
        const auto e = eigensystem(m);
        for (int k = 0; k < 3; ++k)
            worst_residual = std::max(worst_residual, oracle::residual(m, e.eigenvalues[k], e.eigenvectors[k]));
        const Ray a = oracle::random_ray(rng), b = oracle::random_ray(rng);
        worst_phase =
            std::max(worst_phase, std::abs(overlap(a, b) - overlap(a.with_phase(angle(rng)), b.with_phase(angle(rng)))));
    }
    return {worst_residual <= 1e-12 && worst_phase <= 1e-12,
            fmt::format("worst residual {:.3g}, worst phase drift {:.3g}", worst_residual, worst_phase)};
}

std::string pipeline(const std::filesystem::path& dir)
{
    std::ostringstream out, err;
    auto step = [&](std::vector<std::string> args) {
        if (cli::run(std::move(args), out, err) != cli::exit_ok)
            throw std::runtime_error("pipeline step failed: " + err.str());
    };
    const auto rays = (dir / "wheel7.rays").string();
    const auto graph = (dir / "wheel7.hg").string();
    step({"demo", "wheel7", "-o", rays});
    step({"gen", "wheel7", "--rays", rays, "-o", graph});
    step({"bound", graph});
    step({"quantum", graph, "--rays", rays});
    step({"check", "decomposition", graph, "--trials", "10", "--seed", "11"});
    return out.str();
}

Outcome cli_determinism()
{
    const auto base = std::filesystem::temp_directory_path() / "kshg_acceptance";
    std::filesystem::remove_all(base);
    std::filesystem::create_directories(base / "a");
    std::filesystem::create_directories(base / "b");
    auto strip = [](std::string text, const std::filesystem::path& dir) {
        const std::string prefix = dir.string();
        for (auto pos = text.find(prefix); pos != std::string::npos; pos = text.find(prefix))
            text.replace(pos, prefix.size(), "<dir>");
        return text;
    };
    const auto first = strip(pipeline(base / "a"), base / "a");
    const auto second = strip(pipeline(base / "b"), base / "b");
    std::filesystem::remove_all(base);
    const bool ok = first == second && first.find("classification = state-independent") != std::string::npos;
    return {ok, fmt::format("{} report bytes, identical: {}", first.size(), first == second ? "yes" : "no")};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"single hyper-edge expansion maximum is 2n+1 (n = 0..3)", single_edge_maximum},
        {"hyper-edge observable maximum is 2n (n = 1, 2)", hyper_edge_bound},
        {"complete/linear/cyclic closed-form bounds match exact bounds", family_bounds},
        {"expansion maximum never exceeds 2*sum(n) + |U|", soundness},
        {"vertex-removal decomposition identity", decomposition},
        {"fractal, lattice and wheel independence formulas", independence_formulas},
        {"propagation with p_n = q_n = 1 contradicts (n = 1..4)", clifton},
        {"wheel7 demo rays give a state-independent violation", quantum_wheel},
        {"tetrahedron projectors sum to (4/3) I", tetrahedron},
        {"eigensolver residuals and overlap phase invariance", numerics},
        {"gen -> bound -> quantum reports are byte-identical", cli_determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        fmt::print("{} {:>2} {}: {}\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail);
        std::fflush(stdout);
        failed += o.passed ? 0 : 1;
    }
    fmt::print("{}/{} criteria passed\n", criteria.size() - std::size_t(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
