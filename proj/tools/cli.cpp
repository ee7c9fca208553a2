#include "cli.hpp"

#include "kshg/bounds.hpp"
#include "kshg/error.hpp"
#include "kshg/expansion.hpp"
#include "kshg/families.hpp"
#include "kshg/mis.hpp"
#include "kshg/propagation.hpp"
#include "kshg/realization.hpp"
#include "kshg/text_format.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace kshg::cli {

namespace {

using json = nlohmann::ordered_json;

// Ordered "key = value" report; the same keys render as one JSON object.
class Report {
public:
    void add(std::string key, json value) { entries_.emplace_back(std::move(key), std::move(value)); }

    void print(std::ostream& out, bool as_json) const
    {
        if (as_json) {
            json object = json::object();
            for (const auto& [key, value] : entries_)
                object[key] = value;
            out << object.dump(2) << '\n';
            return;
        }
        for (const auto& [key, value] : entries_)
            out << key << " = " << render(value) << '\n';
    }

private:
    static std::string render(const json& value)
    {
        if (value.is_string())
            return value.get<std::string>();
        if (value.is_number_float())
            return fmt::format("{}", value.get<double>());
        if (value.is_array()) {
            std::string s;
            for (const auto& item : value) {
                if (!s.empty())
                    s += ' ';
                s += render(item);
            }
            return s;
        }
        return value.dump();
    }

    std::vector<std::pair<std::string, json>> entries_;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw ValidationError("cannot write file '" + path + "'");
}

HyperGraph load_hypergraph(const std::string& path)
{
    try {
        return parse_hypergraph(read_file(path));
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::vector<Ray> load_rays(const std::string& path, bool normalize)
{
    try {
        return parse_rays(read_file(path), normalize);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

BruteForceOptions brute_force_options()
{
    BruteForceOptions options;
    if (const char* env = std::getenv("KSHG_MAX_BITS")) {
        const std::string_view text(env);
        std::size_t bits = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), bits);
        if (ec != std::errc{} || end != text.data() + text.size() || bits == 0)
            throw ValidationError("KSHG_MAX_BITS must be a positive integer, got '" + std::string(text) + "'");
        options.max_bits = bits;
    }
    return options;
}

json one_based(const std::vector<std::size_t>& vertices)
{
    json list = json::array();
    for (std::size_t v : vertices)
        list.push_back(v + 1);
    return list;
}

std::vector<int> parse_weight_list(const std::string& text)
{
    std::vector<int> weights;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        int w = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), w);
        if (ec != std::errc{} || end != item.data() + item.size())
            throw ValidationError("--weights: '" + item + "' is not an integer");
        weights.push_back(w);
    }
    return weights;
}

void add_graph_summary(Report& r, const HyperGraph& h)
{
    r.add("vertices", h.vertex_count());
    r.add("edges", h.edge_count());
    r.add("weight_sum", h.weight_sum());
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hyper-graph Kochen-Specker inequalities for qutrits", "kshg"};
    app.fallthrough();
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the report as a JSON object");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a hyper-graph family");
    std::string family;
    FamilySpec spec;
    std::string weight_list, gen_rays, gen_out;
    gen->add_option("family", family, "complete|linear|cyclic|fractal-tree|fractal-cyclic|square-lattice|"
                                      "torus-lattice|wheel7")
        ->required();
    gen->add_option("--k", spec.k, "Size parameter");
    gen->add_option("--mx", spec.mx, "Lattice width");
    gen->add_option("--my", spec.my, "Lattice height");
    gen->add_option("--weight", spec.uniform_weight, "Uniform hyper-edge weight")->default_val(1);
    gen->add_option("--weights", weight_list, "Comma-separated per-edge weights");
    gen->add_option("--rays", gen_rays, "Rays file; weights are recomputed from overlaps");
    gen->add_option("-o,--output", gen_out, "Output hyper-graph file (stdout if omitted)");

    // bound
    auto* bound = app.add_subcommand("bound", "Classical bound 2*sum(n) + |U|");
    std::string graph_path;
    MisOptions mis_options;
    bound->add_option("graph", graph_path, "Hyper-graph file")->required();
    bound->add_option("--max-vertices", mis_options.max_vertices, "Exact independent-set search limit");

    // brute
    auto* brute = app.add_subcommand("brute", "Brute-force maximum over all assignments of the expansion");
    brute->add_option("graph", graph_path, "Hyper-graph file")->required();

    // mis
    auto* mis = app.add_subcommand("mis", "Maximum independent set of the hyper-graph");
    bool mis_expanded = false;
    mis->add_option("graph", graph_path, "Hyper-graph file")->required();
    mis->add_flag("--expanded", mis_expanded, "Also compute the independence number of the expansion");
    mis->add_option("--max-vertices", mis_options.max_vertices, "Exact independent-set search limit");

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "Expand hyper-edges into orthogonality gadgets");
    std::string dot_path;
    expand_cmd->add_option("graph", graph_path, "Hyper-graph file")->required();
    expand_cmd->add_option("--dot", dot_path, "Write the expanded graph as Graphviz DOT");

    // quantum
    auto* quantum = app.add_subcommand("quantum", "Quantum range and violation class");
    std::string rays_path;
    bool allow_unrealizable = false, normalize = false;
    quantum->add_option("graph", graph_path, "Hyper-graph file")->required();
    quantum->add_option("--rays", rays_path, "Rays file, one ray per vertex")->required();
    quantum->add_flag("--allow-unrealizable", allow_unrealizable,
                      "Report weights below the minimal weight as warnings instead of errors");
    quantum->add_flag("--normalize", normalize, "Normalize rays of any length");
    quantum->add_option("--max-vertices", mis_options.max_vertices, "Exact independent-set search limit");

    // weights
    auto* weights = app.add_subcommand("weights", "Build a hyper-graph from rays");
    std::optional<int> cap;
    std::string weights_out;
    weights->add_option("rays", rays_path, "Rays file")->required();
    weights->add_option("--cap", cap, "Largest admissible hyper-edge weight");
    weights->add_option("-o,--output", weights_out, "Output hyper-graph file (stdout if omitted)");
    weights->add_flag("--normalize", normalize, "Normalize rays of any length");

    // demo
    auto* demo = app.add_subcommand("demo", "Worked examples");
    demo->require_subcommand(1);
    auto* clifton = demo->add_subcommand("clifton", "Propagate p_n = q_n = 1 through a weight-n gadget");
    int demo_n = 1, demo_p = 1, demo_q = 1;
    clifton->add_option("--n", demo_n, "Gadget weight")->default_val(1);
    clifton->add_option("--p", demo_p, "Value forced on p_n")->default_val(1);
    clifton->add_option("--q", demo_q, "Value forced on q_n")->default_val(1);
    auto* wheel = demo->add_subcommand("wheel7", "Write the 7-ray wheel demonstration set");
    double delta = 0.005;
    std::string wheel_out;
    wheel->add_option("--delta", delta, "Rotation of the standard basis in radians")->default_val(0.005);
    wheel->add_option("-o,--output", wheel_out, "Output rays file (stdout if omitted)");

    // check
    auto* check = app.add_subcommand("check", "Identity checks");
    check->require_subcommand(1);
    auto* decomposition = check->add_subcommand("decomposition", "Vertex-removal decomposition identity");
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    decomposition->add_option("graph", graph_path, "Hyper-graph file")->required();
    decomposition->add_option("--trials", trials, "Number of random assignments")->default_val(100);
    decomposition->add_option("--seed", seed, "Random seed")->default_val(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Check user-supplied coordinates for the expansion");
    std::string aux_path;
    double tol = 1e-9;
    verify->add_option("graph", graph_path, "Hyper-graph file")->required();
    verify->add_option("--rays", rays_path, "Core rays file")->required();
    verify->add_option("--aux", aux_path, "Auxiliary rays file, in expansion order")->required();
    verify->add_option("--tol", tol, "Tolerance")->default_val(1e-9);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_validation;
    }

    Report r;
    int status = exit_ok;
    try {
        if (gen->parsed()) {
            spec.family = parse_family(family);
            if (!weight_list.empty())
                spec.edge_weights = parse_weight_list(weight_list);
            if (!gen_rays.empty())
                spec.rays = load_rays(gen_rays, false);
            const HyperGraph h = generate(spec);
            const std::string text = serialize_hypergraph(h);
            if (gen_out.empty()) {
                out << text;
                return exit_ok;
            }
            write_file(gen_out, text);
            r.add("family", std::string(family_name(spec.family)));
            add_graph_summary(r, h);
            r.add("output", gen_out);
        } else if (bound->parsed()) {
            const HyperGraph h = load_hypergraph(graph_path);
            const ClassicalBound b = classical_bound(h, mis_options);
            add_graph_summary(r, h);
            r.add("weight_term", b.weight_term);
            r.add("independence", b.independence_term);
            r.add("witness", one_based(b.witness));
            r.add("classical_bound", b.total);
        } else if (brute->parsed()) {
            const HyperGraph h = load_hypergraph(graph_path);
            const ExpandedGraph g = expand(h);
            const BruteForceOptions options = brute_force_options();
            r.add("expanded_vertices", g.vertex_count());
            r.add("expanded_edges", g.edges.size());
            r.add("max_bits", options.max_bits);
            r.add("brute_force_max", brute_force_max(g, options));
        } else if (mis->parsed()) {
            const HyperGraph h = load_hypergraph(graph_path);
            const IndependentSetResult result = max_independent_set(h, mis_options);
            add_graph_summary(r, h);
            r.add("independence", result.size);
            r.add("witness", one_based(result.witness));
            if (mis_expanded) {
                MisOptions expanded = mis_options;
                const ExpandedGraph g = expand(h);
                expanded.max_vertices = std::max(expanded.max_vertices, std::size_t{64});
                r.add("expanded_vertices", g.vertex_count());
                r.add("expanded_independence", mis_oracle(g, expanded));
            }
        } else if (expand_cmd->parsed()) {
            const HyperGraph h = load_hypergraph(graph_path);
            const ExpandedGraph g = expand(h);
            r.add("vertices", g.vertex_count());
            r.add("core_vertices", g.core_count());
            r.add("aux_vertices", g.vertex_count() - g.core_count());
            r.add("edges", g.edges.size());
            r.add("bases", g.bases.size());
            if (!dot_path.empty()) {
                write_file(dot_path, to_dot(g));
                r.add("dot", dot_path);
            }
        } else if (quantum->parsed()) {
            const HyperGraph shape = load_hypergraph(graph_path);
            const HyperGraph h(shape.vertex_count(), shape.edges(), load_rays(rays_path, normalize));
            const ViolationReport v = classify(h, QuantumOptions{allow_unrealizable}, mis_options);
            add_graph_summary(r, h);
            r.add("weight_term", v.quantum.weight_term);
            r.add("lambda_min", v.quantum.lambda_min);
            r.add("lambda_max", v.quantum.lambda_max);
            r.add("quantum_min", v.quantum.lo);
            r.add("quantum_max", v.quantum.hi);
            r.add("independence", v.classical.independence_term);
            r.add("classical_bound", v.classical.total);
            r.add("classification", std::string(classification_name(v.classification)));
            r.add("margin", v.margin);
            for (const auto& w : v.quantum.warnings)
                err << "warning: " << w << '\n';
        } else if (weights->parsed()) {
            const std::vector<Ray> rays = load_rays(rays_path, normalize);
            const HyperGraph h = build_from_rays(rays, cap);
            const std::string text = serialize_hypergraph(h);
            if (weights_out.empty()) {
                out << text;
                return exit_ok;
            }
            write_file(weights_out, text);
            add_graph_summary(r, h);
            r.add("output", weights_out);
        } else if (clifton->parsed()) {
            if (demo_n < 1)
                throw ValidationError("--n must be at least 1");
            const ExpandedGraph g = expand_hyper_edge(0, demo_n);
            PartialAssignment forced(g.vertex_count());
            forced[0] = demo_p;
            forced[1] = demo_q;
            const PropagationOutcome outcome = ks_propagate(g, forced);
            r.add("n", demo_n);
            r.add("rays", g.vertex_count());
            r.add("bases", g.bases.size());
            r.add("steps", outcome.trace.size());
            for (std::size_t s = 0; s < outcome.trace.size(); ++s)
                r.add(fmt::format("step {}", s + 1), describe(g, outcome.trace[s]));
            if (outcome.violation)
                r.add("violation", describe(g, *outcome.violation));
            r.add("result", outcome.contradiction() ? "CONTRADICTION" : "CONSISTENT");
        } else if (wheel->parsed()) {
            const std::string text = serialize_rays(wheel7_demo_rays(delta));
            if (wheel_out.empty()) {
                out << text;
                return exit_ok;
            }
            write_file(wheel_out, text);
            r.add("rays", 7);
            r.add("delta", delta);
            r.add("output", wheel_out);
        } else if (decomposition->parsed()) {
            const HyperGraph h = load_hypergraph(graph_path);
            const DecompositionTrials t = check_subgraph_decomposition(h, trials, seed);
            r.add("trials", t.trials);
            r.add("seed", seed);
            r.add("failures", t.failures);
            r.add("result", t.failures == 0 ? "PASS" : "FAIL");
            if (t.failures)
                status = exit_validation;
        } else if (verify->parsed()) {
            const HyperGraph h = load_hypergraph(graph_path);
            const ExpandedGraph g = expand(h);
            const std::vector<Ray> core = load_rays(rays_path, false);
            const std::vector<Ray> aux = load_rays(aux_path, false);
            const RealizationReport report = verify_realization(g, assemble_coordinates(g, core, aux), tol);
            r.add("tol", tol);
            for (const RealizationCheck* c :
                 {&report.orthogonality, &report.bases, &report.endpoint_overlap, &report.auxiliary_sum}) {
                r.add(c->name, c->passed ? "pass" : "fail");
                r.add(c->name + "_worst", c->worst_deviation);
                if (!c->passed)
                    r.add(c->name + "_first_failure", c->failures.front());
            }
            r.add("result", report.passed() ? "PASS" : "FAIL");
            if (!report.passed())
                status = exit_validation;
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return exit_capacity;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    }

    r.print(out, as_json);
    return status;
}

} // namespace kshg::cli
