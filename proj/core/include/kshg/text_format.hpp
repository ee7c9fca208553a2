#pragma once

#include "kshg/expansion.hpp"
#include "kshg/hypergraph.hpp"
#include "kshg/linalg3.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kshg {

// Rays file: one ray per line as six reals "re0 im0 re1 im1 re2 im2".
// '#' starts a comment; blank lines are ignored. Without `normalize`, a line
// whose norm is more than 1e-6 away from one is an error.
std::vector<Ray> parse_rays(std::string_view text, bool normalize = false);
std::string serialize_rays(std::span<const Ray> rays);

// Hyper-graph file:
//   vertices <k>
//   edge <i> <j> <n>      (1-based endpoints, weight n >= 0)
std::string serialize_hypergraph(const HyperGraph& h);
HyperGraph parse_hypergraph(std::string_view text);

// Graphviz rendering. Core vertices are "P<i>", auxiliary vertices
// "e<edge>:<kind><level>"; bases are emitted as comments.
std::string to_dot(const ExpandedGraph& g);

} // namespace kshg
