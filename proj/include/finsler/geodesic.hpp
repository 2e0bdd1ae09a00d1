#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "finsler/path.hpp"

namespace finsler {

struct GeodesicOptions {
    int nodes = 33;              // polyline resolution of the base solve
    int quad_order = 4;          // per-segment Gauss order
    double tolerance = 1e-4;     // relative change that stops refinement
    int max_iterations = 160;    // pattern-search sweeps per resolution level
    int max_refinements = 4;     // node-doubling levels after the base solve
    int multistart = 3;          // straight start plus seeded perturbations
    std::uint64_t seed = 0;
};

struct GeodesicResult {
    PolylinePath path;
    double length = 0.0;
    bool converged = false;
    int iterations = 0;                           // sweeps spent over all stages
    std::vector<std::pair<int, double>> history;  // (node count, length) per level
};

// Upper bound on the induced distance d(F)(x, y): minimizes the discretized
// length functional over polylines with fixed endpoints.
//
// The optimizer is a derivative-free coordinate pattern search (max-type
// Lagrangians are not differentiable along their switching set), warm-started
// through successive node doublings until the value stabilizes. Multistarts
// run at the base resolution; the best one is refined. A finite-difference
// descent polish runs on smooth Lagrangians after each pattern-search stage.
// Nodes leaving the domain are rejected outright, and the asymmetry of F is
// respected throughout (no reverse-path shortcut anywhere).
GeodesicResult induced_distance(const Lagrangian& f, const Vec& x, const Vec& y,
                                const GeodesicOptions& opts = {});

}  // namespace finsler
