#pragma once

#include "finsler/convex_body.hpp"
#include "finsler/lagrangian.hpp"
#include "finsler/weak_metric.hpp"

namespace finsler {

// Distance formulas blow up at the boundary; evaluation rejects points whose
// normalized interior margin falls below this guard.
inline constexpr double kEvalMargin = 1e-10;

// log(|x - a+| / |y - a+|) where a+ is the exit of the ray from x through y;
// 0 when the ray stays inside or when x == y. May return 0 for x != y on
// unbounded bodies.
double funk_distance(const ConvexBody& body, const Vec& x, const Vec& y);

// Arithmetic symmetrisation of the Funk distance, which equals half the log
// of the cross ratio of (a+, x, y, a-) when both endpoints exist.
double hilbert_distance(const ConvexBody& body, const Vec& x, const Vec& y);

// The two weighted families at the distance level.
double weighted_funk_arith(const ConvexBody& body, Weight t, const Vec& x, const Vec& y);
double weighted_funk_max(const ConvexBody& body, Weight t, const Vec& x, const Vec& y);

// WeakMetric handles wrapping the distances above (body captured by value).
WeakMetric funk_metric(const ConvexBody& body);
WeakMetric hilbert_metric(const ConvexBody& body);

// Infinitesimal forms. The Funk Lagrangian is p(x, v) = |v| / |x - a| with a
// the exit point of the ray (x, v), i.e. the reciprocal of the exit
// parameter; it vanishes on directions whose ray stays inside, so on
// unbounded bodies it is a weak norm without definiteness.
Lagrangian funk_lagrangian(const ConvexBody& body);
// q(x, v) = (p(x, v) + p(x, -v)) / 2.
Lagrangian hilbert_lagrangian(const ConvexBody& body);
// (1 - t) p(x, v) + t p(x, -v).
Lagrangian weighted_funk_lagrangian(const ConvexBody& body, Weight t);

// Closed form on the unit ball:
//   ((1 - 2t) <x,v> + sqrt((1 - |x|^2) |v|^2 + <x,v>^2)) / (1 - |x|^2),
// which at t = 0 is the Funk Lagrangian itself. Requires |x| < 1.
double ball_funk_lagrangian_closed(const Vec& x, const Vec& v, Weight t);

// Closed form on the upper half-space {x_n > 0}, evaluated on the last
// coordinate. The unweighted form is max(-v_n / x_n, 0): descending rays exit
// through the floor, ascending ones never leave. (The sign makes the weighted
// branch formula below it consistent with the ray picture.) The weighted form
// is t v_n / x_n for v_n > 0 and (1 - t) |v_n| / x_n for v_n < 0.
double halfspace_funk_lagrangian_closed(const Vec& x, const Vec& v, Weight t);

}  // namespace finsler
