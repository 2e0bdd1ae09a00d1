#pragma once

#include <vector>

#include "finsler/lagrangian.hpp"

namespace finsler {

// Piecewise-linear trial path with implied uniform parameter spacing.
struct PolylinePath {
    std::vector<Vec> nodes;  // at least 2
};

PolylinePath straight_path(const Vec& x, const Vec& y, int node_count);

// Doubles the resolution by inserting segment midpoints (N -> 2N - 1).
PolylinePath insert_midpoints(const PolylinePath& path);

// Gauss-Legendre nodes and weights on [0, 1]; supported orders are
// 1, 2, 4, 8 and 16.
struct Quadrature {
    std::vector<double> points;
    std::vector<double> weights;
};
const Quadrature& gauss_rule(int order);

// Integral of F(path(s), path'(s)) ds. One-homogeneity of F in v makes the
// value independent of the parametrization, so each segment contributes
// sum_k w_k F(a + u_k (b - a), b - a). Zero-length segments contribute 0.
double path_length(const Lagrangian& f, const PolylinePath& path, int quad_order = 4);

// |quadrature of the convex combination - combination of the quadratures|;
// linearity makes this vanish up to rounding.
double crucial_identity_check(const Lagrangian& f1, const Lagrangian& f2, double t,
                              const PolylinePath& path, int quad_order = 4);

}  // namespace finsler
