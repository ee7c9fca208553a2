#pragma once

#include "kshg/expansion.hpp"
#include "kshg/linalg3.hpp"

#include <span>
#include <string>
#include <vector>

namespace kshg {

struct RealizationCheck {
    std::string name;
    bool passed = true;
    double worst_deviation = 0.0;
    std::string worst_entity;            // entity with the largest deviation
    std::vector<std::string> failures;   // every entity beyond tolerance
};

struct RealizationReport {
    RealizationCheck orthogonality;   // every edge joins orthogonal rays
    RealizationCheck bases;           // every basis triple sums to the identity
    RealizationCheck endpoint_overlap;// |<p|q>| <= n/(n+2) per hyper-edge
    RealizationCheck auxiliary_sum;   // the 6n auxiliary projectors sum to 2n I

    bool passed() const
    {
        return orthogonality.passed && bases.passed && endpoint_overlap.passed && auxiliary_sum.passed;
    }
};

// coordinates[v] is the ray of expanded vertex v.
RealizationReport verify_realization(const ExpandedGraph& g, std::span<const Ray> coordinates, double tol);

// Core rays in hyper-graph order, auxiliary rays in expansion order.
std::vector<Ray> assemble_coordinates(const ExpandedGraph& g, std::span<const Ray> core_rays,
                                      std::span<const Ray> aux_rays);

} // namespace kshg
