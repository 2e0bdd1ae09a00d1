#include "finsler/funk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finsler {

namespace {

void check_evaluable(const ConvexBody& body, const Vec& x) {
    if (body.interior_margin(x) < kEvalMargin)
        throw std::domain_error("evaluation point too close to the boundary");
}

}  // namespace

double funk_distance(const ConvexBody& body, const Vec& x, const Vec& y) {
    check_evaluable(body, x);
    check_evaluable(body, y);
    const Vec d = y - x;
    if (!(d.norm() > 0.0)) return 0.0;
    const double s = body.ray_exit(x, d);
    if (!std::isfinite(s)) return 0.0;
    // |x - a+| = s |d| and |y - a+| = (s - 1) |d|.
    return std::log(s / (s - 1.0));
}

double hilbert_distance(const ConvexBody& body, const Vec& x, const Vec& y) {
    return 0.5 * (funk_distance(body, x, y) + funk_distance(body, y, x));
}

double weighted_funk_arith(const ConvexBody& body, Weight t, const Vec& x, const Vec& y) {
    return scale_extended(1.0 - t.value(), funk_distance(body, x, y)) +
           scale_extended(t.value(), funk_distance(body, y, x));
}

double weighted_funk_max(const ConvexBody& body, Weight t, const Vec& x, const Vec& y) {
    return std::max(scale_extended(1.0 - t.value(), funk_distance(body, x, y)),
                    scale_extended(t.value(), funk_distance(body, y, x)));
}

WeakMetric funk_metric(const ConvexBody& body) {
    return {[body](const Vec& x, const Vec& y) { return funk_distance(body, x, y); },
            "funk(" + body.kind() + ")"};
}

WeakMetric hilbert_metric(const ConvexBody& body) {
    return {[body](const Vec& x, const Vec& y) { return hilbert_distance(body, x, y); },
            "hilbert(" + body.kind() + ")"};
}

Lagrangian funk_lagrangian(const ConvexBody& body) {
    const Smoothness hint =
        (body.kind() == "ball" || body.kind() == "ellipsoid") ? Smoothness::smooth
                                                              : Smoothness::piecewise;
    return {[body](const Vec& x, const Vec& v) {
                check_evaluable(body, x);
                if (!(v.norm() > 0.0)) return 0.0;
                const double s = body.ray_exit(x, v);
                return std::isfinite(s) ? 1.0 / s : 0.0;
            },
            [body](const Vec& x) { return body.interior_margin(x) >= kEvalMargin; },
            hint, "funk_p(" + body.kind() + ")"};
}

Lagrangian hilbert_lagrangian(const ConvexBody& body) {
    Lagrangian p = funk_lagrangian(body);
    Lagrangian out = arith_family(p, 0.5);
    out.label = "hilbert_q(" + body.kind() + ")";
    return out;
}

Lagrangian weighted_funk_lagrangian(const ConvexBody& body, Weight t) {
    Lagrangian p = funk_lagrangian(body);
    Lagrangian out = arith_family(p, t.value());
    out.label = "funk_p_arith[t=" + std::to_string(t.value()) + "](" + body.kind() + ")";
    return out;
}

double ball_funk_lagrangian_closed(const Vec& x, const Vec& v, Weight t) {
    const double x2 = x.squaredNorm();
    if (!(x2 < 1.0)) throw std::domain_error("ball closed form requires |x| < 1");
    const double xv = x.dot(v);
    const double one_minus = 1.0 - x2;
    return ((1.0 - 2.0 * t.value()) * xv +
            std::sqrt(one_minus * v.squaredNorm() + xv * xv)) /
           one_minus;
}

double halfspace_funk_lagrangian_closed(const Vec& x, const Vec& v, Weight t) {
    const int n = static_cast<int>(x.size()) - 1;
    if (!(x[n] > 0.0)) throw std::domain_error("half-space closed form requires x_n > 0");
    const double vn = v[n];
    const double xn = x[n];
    if (vn > 0.0) return t.value() * vn / xn;
    if (vn < 0.0) return (1.0 - t.value()) * (-vn) / xn;
    return 0.0;
}

}  // namespace finsler
