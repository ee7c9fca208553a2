#include "kshg/text_format.hpp"

#include "kshg/error.hpp"

#include <fmt/format.h>

#include <charconv>
#include <set>
#include <utility>

namespace kshg {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

// Splits into non-empty, comment-stripped, tokenized lines.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        Line parsed{number, {}};
        std::size_t pos = 0;
        while (pos < line.size()) {
            const auto start = line.find_first_not_of(" \t\r\v\f", pos);
            if (start == std::string_view::npos)
                break;
            const auto end = line.find_first_of(" \t\r\v\f", start);
            parsed.tokens.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
            pos = end == std::string_view::npos ? line.size() : end;
        }
        if (!parsed.tokens.empty())
            lines.push_back(std::move(parsed));
    }
    return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& message)
{
    throw ValidationError("line " + std::to_string(line) + ": " + message);
}

double to_double(std::string_view token, std::size_t line)
{
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        fail(line, "'" + std::string(token) + "' is not a number");
    return value;
}

long to_integer(std::string_view token, std::size_t line)
{
    long value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        fail(line, "'" + std::string(token) + "' is not an integer");
    return value;
}

} // namespace

std::vector<Ray> parse_rays(std::string_view text, bool normalize)
{
    std::vector<Ray> rays;
    for (const auto& line : tokenize(text)) {
        if (line.tokens.size() != 6)
            fail(line.number, "expected 6 numbers (re0 im0 re1 im1 re2 im2), got " +
                                  std::to_string(line.tokens.size()));
        Vector3 v;
        for (std::size_t c = 0; c < 3; ++c)
            v[c] = Complex(to_double(line.tokens[2 * c], line.number), to_double(line.tokens[2 * c + 1], line.number));
        try {
            rays.push_back(normalize ? Ray::normalized(v) : Ray(v));
        } catch (const ValidationError& e) {
            fail(line.number, e.what());
        }
    }
    return rays;
}

std::string serialize_rays(std::span<const Ray> rays)
{
    std::string out;
    for (const auto& r : rays)
        out += fmt::format("{} {} {} {} {} {}\n", r[0].real(), r[0].imag(), r[1].real(), r[1].imag(), r[2].real(),
                           r[2].imag());
    return out;
}

std::string serialize_hypergraph(const HyperGraph& h)
{
    std::string out = fmt::format("vertices {}\n", h.vertex_count());
    for (const auto& e : h.edges())
        out += fmt::format("edge {} {} {}\n", e.i + 1, e.j + 1, e.weight);
    return out;
}

HyperGraph parse_hypergraph(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ValidationError("hyper-graph file is empty; expected 'vertices <k>'");

    const auto& header = lines.front();
    if (header.tokens[0] != "vertices" || header.tokens.size() != 2)
        fail(header.number, "expected 'vertices <k>'");
    const long k = to_integer(header.tokens[1], header.number);
    if (k < 1)
        fail(header.number, "vertex count must be positive");

    std::vector<HyperEdge> edges;
    std::set<std::pair<long, long>> seen;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto& line = lines[l];
        if (line.tokens[0] != "edge" || line.tokens.size() != 4)
            fail(line.number, "expected 'edge <i> <j> <n>'");
        long i = to_integer(line.tokens[1], line.number);
        long j = to_integer(line.tokens[2], line.number);
        const long n = to_integer(line.tokens[3], line.number);
        if (i < 1 || i > k || j < 1 || j > k)
            fail(line.number, "edge (" + std::to_string(i) + "," + std::to_string(j) + ") has an index outside 1.." +
                                  std::to_string(k));
        if (i == j)
            fail(line.number, "edge (" + std::to_string(i) + "," + std::to_string(j) + ") is a self-loop");
        if (n < 0)
            fail(line.number, "edge (" + std::to_string(i) + "," + std::to_string(j) + ") has negative weight " +
                                  std::to_string(n));
        if (n > 1'000'000)
            fail(line.number, "edge weight " + std::to_string(n) + " is unreasonably large");
        if (i > j)
            std::swap(i, j);
        if (!seen.emplace(i, j).second)
            fail(line.number, "duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
        edges.push_back({std::size_t(i - 1), std::size_t(j - 1), int(n)});
    }
    return HyperGraph(std::size_t(k), std::move(edges));
}

std::string to_dot(const ExpandedGraph& g)
{
    std::string out = "graph expanded {\n";
    for (const auto& b : g.bases)
        out += fmt::format("  // basis {} {} {}\n", vertex_label(g.vertices[b[0]]), vertex_label(g.vertices[b[1]]),
                           vertex_label(g.vertices[b[2]]));
    for (const auto& role : g.vertices) {
        const bool core = std::holds_alternative<CoreRole>(role);
        out += fmt::format("  \"{}\" [shape={}];\n", vertex_label(role), core ? "doublecircle" : "circle");
    }
    for (const auto& [u, v] : g.edges)
        out += fmt::format("  \"{}\" -- \"{}\";\n", vertex_label(g.vertices[u]), vertex_label(g.vertices[v]));
    out += "}\n";
    return out;
}

} // namespace kshg
