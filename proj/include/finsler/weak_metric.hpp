#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finsler/geometry.hpp"

namespace finsler {

// A two-point distance handle valued in [0, +inf], not assumed symmetric.
struct WeakMetric {
    std::function<double(const Vec&, const Vec&)> eval;
    std::string label;

    double operator()(const Vec& x, const Vec& y) const { return eval(x, y); }
};

// Interpolation weight t in [0, 1]; construction rejects anything else.
class Weight {
public:
    explicit Weight(double t);
    double value() const { return t_; }

private:
    double t_;
};

WeakMetric reverse_metric(const WeakMetric& d);

// (1-t) d(x,y) + t d(y,x). Infinite values obey 0 * inf = 0 so the endpoint
// weights reproduce d and its reverse exactly.
WeakMetric arith_symmetrise(const WeakMetric& d, Weight w);

// max{ (1-t) d(x,y), t d(y,x) }.
WeakMetric max_symmetrise(const WeakMetric& d, Weight w);

struct ProbeWitness {
    std::vector<Vec> inputs;
    std::vector<double> values;
};

struct ProbeReport {
    std::string probe;
    int samples = 0;
    double max_residual = 0.0;
    std::optional<ProbeWitness> witness;
    bool passed = false;
    double tolerance = 0.0;
};

// Deterministic point generator; the source owns its seeded state.
using PointSource = std::function<Vec()>;

// Samples `count` triples and reports the worst d(x,z) - d(x,y) - d(y,z).
ProbeReport triangle_inequality_probe(const WeakMetric& d, const PointSource& source,
                                      int count, double tolerance = 1e-9);

// Checks that a sequence approaching x converges in both metric directions:
// reports the worse of the forward tail max d(x_n, x) and the backward tail
// max d(x, x_n) over the last quarter of the sequence.
ProbeReport busemann_probe(const WeakMetric& d, const Vec& x,
                           const std::vector<Vec>& approach, double tolerance = 1e-3);

// d(x,y) + d(y,z) - d(x,z) for y on the segment [x,z]. Zero means the
// straight line is distance-realizing through y at this triple.
double collinear_additivity_residual(const WeakMetric& d, const Vec& x, const Vec& y,
                                     const Vec& z);

}  // namespace finsler
