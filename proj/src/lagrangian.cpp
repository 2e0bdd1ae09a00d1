#include "finsler/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finsler {

namespace {

std::function<bool(const Vec&)> intersect_domains(const Lagrangian& f1, const Lagrangian& f2) {
    if (!f1.domain) return f2.domain;
    if (!f2.domain) return f1.domain;
    return [a = f1.domain, b = f2.domain](const Vec& x) { return a(x) && b(x); };
}

Smoothness combine_hints(const Lagrangian& f1, const Lagrangian& f2) {
    return (f1.hint == Smoothness::smooth && f2.hint == Smoothness::smooth)
               ? Smoothness::smooth
               : Smoothness::piecewise;
}

void check_weight(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("weight must lie in [0, 1]");
}

}  // namespace

Lagrangian reverse_lagrangian(const Lagrangian& f) {
    return {[eval = f.eval](const Vec& x, const Vec& v) { return eval(x, -v); },
            f.domain, f.hint, "reverse(" + f.label + ")"};
}

Lagrangian weighted_sum_lagrangian(const Lagrangian& f1, const Lagrangian& f2, double t) {
    check_weight(t);
    return {[e1 = f1.eval, e2 = f2.eval, t](const Vec& x, const Vec& v) {
                return (1.0 - t) * e1(x, v) + t * e2(x, v);
            },
            intersect_domains(f1, f2), combine_hints(f1, f2),
            "sum[t=" + std::to_string(t) + "](" + f1.label + ", " + f2.label + ")"};
}

Lagrangian weighted_max_lagrangian(const Lagrangian& f1, const Lagrangian& f2, double t) {
    check_weight(t);
    return {[e1 = f1.eval, e2 = f2.eval, t](const Vec& x, const Vec& v) {
                return std::max((1.0 - t) * e1(x, v), t * e2(x, v));
            },
            intersect_domains(f1, f2), Smoothness::piecewise,
            "max[t=" + std::to_string(t) + "](" + f1.label + ", " + f2.label + ")"};
}

Lagrangian sum_lagrangian(const Lagrangian& f1, const Lagrangian& f2) {
    return {[e1 = f1.eval, e2 = f2.eval](const Vec& x, const Vec& v) {
                return e1(x, v) + e2(x, v);
            },
            intersect_domains(f1, f2), combine_hints(f1, f2),
            "sum(" + f1.label + ", " + f2.label + ")"};
}

Lagrangian max_lagrangian(const Lagrangian& f1, const Lagrangian& f2) {
    return {[e1 = f1.eval, e2 = f2.eval](const Vec& x, const Vec& v) {
                return std::max(e1(x, v), e2(x, v));
            },
            intersect_domains(f1, f2), Smoothness::piecewise,
            "max(" + f1.label + ", " + f2.label + ")"};
}

Lagrangian arith_family(const Lagrangian& f, double t) {
    Lagrangian out = weighted_sum_lagrangian(f, reverse_lagrangian(f), t);
    out.label = "arith[t=" + std::to_string(t) + "](" + f.label + ")";
    return out;
}

Lagrangian max_family(const Lagrangian& f, double t) {
    Lagrangian out = weighted_max_lagrangian(f, reverse_lagrangian(f), t);
    out.label = "max[t=" + std::to_string(t) + "](" + f.label + ")";
    return out;
}

Lagrangian euclidean_lagrangian(int dim) {
    (void)dim;
    return {[](const Vec&, const Vec& v) { return v.norm(); },
            nullptr, Smoothness::smooth, "euclidean"};
}

Lagrangian axis_weighted_lagrangian(const Vec& weights) {
    if (!(weights.array() > 0.0).all())
        throw std::invalid_argument("axis_weighted_lagrangian: weights must be positive");
    return {[w = weights](const Vec&, const Vec& v) {
                return std::sqrt((w.array() * v.array().square()).sum());
            },
            nullptr, Smoothness::smooth, "axis_weighted"};
}

Lagrangian halfplane_hyperbolic_lagrangian() {
    return {[](const Vec& x, const Vec& v) { return v.norm() / x[1]; },
            [](const Vec& x) { return x[1] > 1e-12; },
            Smoothness::smooth, "hyperbolic"};
}

}  // namespace finsler
