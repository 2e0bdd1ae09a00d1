#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "finsler/weak_metric.hpp"

namespace finsler {

// Marked Euclidean triangles by edge lengths (strict triangle inequalities).
struct TriangleSides {
    double a1, a2, a3;
};

// Half-perimeter excess coordinates A_i = (a_j + a_k - a_i) / 2; the side
// map is a linear bijection onto the positive octant.
struct TriangleA {
    double a1, a2, a3;
};

// A-coordinates scaled to Heron area 1 (|area - 1| <= 1e-12).
struct UnitAreaTriangle {
    TriangleA coords;
};

TriangleA sides_to_excess(const TriangleSides& s);
TriangleSides excess_to_sides(const TriangleA& a);

// sqrt((A1 + A2 + A3) A1 A2 A3), homogeneous of degree 2 under scaling.
double heron_area(const TriangleA& a);

// The unique positive rescaling with unit area: A / sqrt(area(A)).
UnitAreaTriangle normalize_unit_area(const TriangleA& a);

// log max_i (A'_i / A_i). Restricted to unit-area triangles this is a
// nonnegative weak metric, not symmetric in general.
double eta(const TriangleA& x, const TriangleA& y);

// |exp(eta(lam X, lam' Y)) - (lam'/lam) exp(eta(X, Y))|; the identity is
// exact, so the residual is pure rounding.
double eta_scaling_residual(const TriangleA& x, const TriangleA& y, double lam,
                            double lam_prime);

enum class FamilyKind { arith, max };

// The weighted families on unit-area triangles, packaged as a WeakMetric over
// 3-vectors of A-coordinates. Inputs must have unit area.
WeakMetric eta_family(FamilyKind kind, Weight t);

struct AsymmetryWitness {
    UnitAreaTriangle x;
    UnitAreaTriangle y;
    double forward = 0.0;
    double backward = 0.0;
    double gap = 0.0;
};

// Seeded search for a pair with |eta_t(X,Y) - eta_t(Y,X)| > 0.01; samples
// A-coordinates log-uniformly in [e^-2, e^2]^3 and normalizes to unit area.
// Returns the best witness found, or nothing when every sampled gap is below
// the threshold (as happens for the symmetric t = 1/2 arithmetic family).
std::optional<AsymmetryWitness> asymmetry_witness(Weight t, FamilyKind kind, int sample_count,
                                                  std::uint64_t seed);

// Seeded unit-area sample from the same measure as the witness search.
UnitAreaTriangle sample_unit_area_triangle(std::mt19937_64& rng);

}  // namespace finsler
