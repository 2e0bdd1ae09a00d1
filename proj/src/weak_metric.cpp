#include "finsler/weak_metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finsler {

Weight::Weight(double t) : t_(t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("weight must lie in [0, 1]");
}

WeakMetric reverse_metric(const WeakMetric& d) {
    return {[eval = d.eval](const Vec& x, const Vec& y) { return eval(y, x); },
            "reverse(" + d.label + ")"};
}

WeakMetric arith_symmetrise(const WeakMetric& d, Weight w) {
    const double t = w.value();
    return {[eval = d.eval, t](const Vec& x, const Vec& y) {
                return scale_extended(1.0 - t, eval(x, y)) + scale_extended(t, eval(y, x));
            },
            "arith[t=" + std::to_string(t) + "](" + d.label + ")"};
}

WeakMetric max_symmetrise(const WeakMetric& d, Weight w) {
    const double t = w.value();
    return {[eval = d.eval, t](const Vec& x, const Vec& y) {
                return std::max(scale_extended(1.0 - t, eval(x, y)),
                                scale_extended(t, eval(y, x)));
            },
            "max[t=" + std::to_string(t) + "](" + d.label + ")"};
}

ProbeReport triangle_inequality_probe(const WeakMetric& d, const PointSource& source,
                                      int count, double tolerance) {
    if (count <= 0) throw std::invalid_argument("triangle_inequality_probe: empty sample set");
    ProbeReport report;
    report.probe = "triangle_inequality";
    report.samples = count;
    report.tolerance = tolerance;
    report.max_residual = -kInfinity;
    for (int i = 0; i < count; ++i) {
        const Vec x = source();
        const Vec y = source();
        const Vec z = source();
        const double residual = d(x, z) - (d(x, y) + d(y, z));
        if (residual > report.max_residual) {
            report.max_residual = residual;
            report.witness = ProbeWitness{{x, y, z}, {d(x, z), d(x, y), d(y, z)}};
        }
    }
    report.passed = report.max_residual <= tolerance;
    return report;
}

ProbeReport busemann_probe(const WeakMetric& d, const Vec& x,
                           const std::vector<Vec>& approach, double tolerance) {
    if (approach.size() < 4)
        throw std::invalid_argument("busemann_probe: need at least 4 approach points");
    ProbeReport report;
    report.probe = "busemann";
    report.samples = static_cast<int>(approach.size());
    report.tolerance = tolerance;

    const std::size_t tail_start = approach.size() - approach.size() / 4;
    double forward = 0.0;
    double backward = 0.0;
    std::size_t worst_index = tail_start;
    for (std::size_t i = tail_start; i < approach.size(); ++i) {
        const double f = d(approach[i], x);
        const double b = d(x, approach[i]);
        if (std::max(f, b) > std::max(forward, backward)) worst_index = i;
        forward = std::max(forward, f);
        backward = std::max(backward, b);
    }
    report.max_residual = std::max(forward, backward);
    report.witness = ProbeWitness{{approach[worst_index], x},
                                  {d(approach[worst_index], x), d(x, approach[worst_index])}};
    report.passed = forward <= tolerance && backward <= tolerance;
    return report;
}

double collinear_additivity_residual(const WeakMetric& d, const Vec& x, const Vec& y,
                                     const Vec& z) {
    const Vec chord = z - x;
    const double len2 = chord.squaredNorm();
    double deviation;
    if (len2 == 0.0) {
        deviation = (y - x).norm();
    } else {
        const double s = std::clamp((y - x).dot(chord) / len2, 0.0, 1.0);
        deviation = (y - (x + s * chord)).norm();
    }
    if (deviation > 1e-9 * std::max(1.0, std::sqrt(len2)))
        throw std::invalid_argument("collinear_additivity_residual: y is not on the segment [x,z]");
    return d(x, y) + d(y, z) - d(x, z);
}

}  // namespace finsler
