#pragma once

#include <functional>
#include <string>

#include "finsler/geometry.hpp"

namespace finsler {

// Max-type combinations break differentiability; the solver picks its
// refinement strategy from this hint.
enum class Smoothness { smooth, piecewise };

// Pointwise weak norm F(x, v) >= 0, positively homogeneous of degree 1 in v.
// `domain` is the open set where evaluation is valid (empty handle means all
// of R^n); handles are immutable and safe to share across threads.
struct Lagrangian {
    std::function<double(const Vec&, const Vec&)> eval;
    std::function<bool(const Vec&)> domain;
    Smoothness hint = Smoothness::smooth;
    std::string label;

    double operator()(const Vec& x, const Vec& v) const { return eval(x, v); }
    bool in_domain(const Vec& x) const { return !domain || domain(x); }
};

Lagrangian reverse_lagrangian(const Lagrangian& f);

// (1-t) F1 + t F2 and max{(1-t) F1, t F2}; domains intersect.
Lagrangian weighted_sum_lagrangian(const Lagrangian& f1, const Lagrangian& f2, double t);
Lagrangian weighted_max_lagrangian(const Lagrangian& f1, const Lagrangian& f2, double t);

// Plain F1 + F2 and max{F1, F2} (no weights).
Lagrangian sum_lagrangian(const Lagrangian& f1, const Lagrangian& f2);
Lagrangian max_lagrangian(const Lagrangian& f1, const Lagrangian& f2);

// The one-parameter families built from F and its reverse.
Lagrangian arith_family(const Lagrangian& f, double t);
Lagrangian max_family(const Lagrangian& f, double t);

// Stock norms used by the worked examples and the tests.
Lagrangian euclidean_lagrangian(int dim);
// sqrt(sum w_i v_i^2) with constant positive weights.
Lagrangian axis_weighted_lagrangian(const Vec& weights);
// |v| / y on the upper half-plane {y > 0}.
Lagrangian halfplane_hyperbolic_lagrangian();

}  // namespace finsler
