#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "finsler/convex_body.hpp"
#include "finsler/weak_metric.hpp"

namespace finsler {

// Seeded interior point with normalized margin at least `min_margin`.
// Balls and ellipsoids sample directly; polytopes run a short hit-and-run
// walk from the anchor; half-spaces draw Gaussian coordinates with the axis
// coordinate pushed above the margin.
Vec sample_interior_point(const ConvexBody& body, std::mt19937_64& rng,
                          double min_margin = 0.05);

// Interior pair with separation at least `min_separation`.
std::pair<Vec, Vec> sample_interior_pair(const ConvexBody& body, std::mt19937_64& rng,
                                         double min_margin = 0.05,
                                         double min_separation = 0.1);

std::vector<std::pair<Vec, Vec>> sample_interior_pairs(const ConvexBody& body, int count,
                                                       std::uint64_t seed,
                                                       double min_margin = 0.05,
                                                       double min_separation = 0.1);

// Deterministic PointSource over the body interior for the probes.
PointSource make_interior_source(const ConvexBody& body, std::uint64_t seed,
                                 double min_margin = 0.05);

}  // namespace finsler
