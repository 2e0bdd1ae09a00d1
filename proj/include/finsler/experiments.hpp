#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "finsler/convex_body.hpp"
#include "finsler/geodesic.hpp"
#include "finsler/weak_metric.hpp"

namespace finsler {

struct ExpectedValue {
    double value = 0.0;
    std::string provenance;  // how the value was obtained ("closed-form", ...)
};

// Named record of computed quantities, independently computed expected
// values, residuals and a single pass tolerance. A report passes exactly when
// every residual is at most the tolerance. Expected values are always
// evaluated from formulas inside the experiment, never read back from solver
// output.
struct ExperimentReport {
    std::string name;
    std::map<std::string, double> quantities;
    std::map<std::string, ExpectedValue> expected;
    std::map<std::string, double> residuals;
    double tolerance = 0.0;
    bool passed = false;
    double runtime_seconds = 0.0;
};

using PointPair = std::pair<Vec, Vec>;

// Half-plane, max of the Euclidean and hyperbolic norms, points (0, y1) and
// (0, y2) with 0 < y1 < 1 < y2. The induced distance has the closed form
// (y2 - 1) - log(y1), which strictly exceeds max{y2 - y1, log(y2/y1)}.
ExperimentReport run_example_1(double y1, double y2, const GeodesicOptions& opts = {},
                               double strict_margin = 1e-3);

// Half-plane, sum of the same two norms, endpoints with distinct abscissae.
// The solver value must strictly exceed d_e + d_h (the two norms have
// different geodesics through such a pair).
ExperimentReport run_example_2(const Vec& a1, const Vec& a2, const GeodesicOptions& opts = {},
                               double strict_margin = 1e-3);

// Plane, max of |v| and sqrt(a vx^2 + b vy^2): the induced distance equals
// the max of the two norm distances, with straight segments optimal.
ExperimentReport run_example_3(double a, double b, const std::vector<PointPair>& pairs,
                               const GeodesicOptions& opts = {});

// Plane, sum of the same norms: induced distance equals the sum of the two
// norm distances.
ExperimentReport run_example_4(double a, double b, const std::vector<PointPair>& pairs,
                               const GeodesicOptions& opts = {});

// Collinear points x, y, z at 1, 2, 8 inside the segment body [0, 9]: the
// weighted max family at t = 1/2 gains log(7/4)/2 through y, so the straight
// line is not a geodesic there, while the arithmetic family stays additive.
ExperimentReport run_remark_counterexample();

// On a body whose chords are geodesics both ways, the weighted sum of the
// Funk Lagrangian and its reverse induces the matching weighted combination
// of the Funk distance and its reverse.
ExperimentReport run_weighted_sum_check(const ConvexBody& body,
                                       const std::vector<PointPair>& pairs, Weight t,
                                       const GeodesicOptions& opts = {});

// Max-combination counterpart: along chords where (1-t) F - t F(reverse)
// keeps one sign the induced distance matches max{(1-t) d, t d(reverse)};
// where the sign flips, only the measured (nonnegative) gap is reported.
ExperimentReport run_weighted_max_check(const ConvexBody& body,
                                       const std::vector<PointPair>& pairs, Weight t,
                                       const GeodesicOptions& opts = {});

// The scripted battery behind the `report` command.
std::vector<ExperimentReport> run_standard_battery(std::uint64_t seed);

}  // namespace finsler
