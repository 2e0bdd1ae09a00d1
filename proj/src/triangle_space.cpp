#include "finsler/triangle_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finsler {

namespace {

void check_positive(double a1, double a2, double a3, const char* what) {
    if (!(a1 > 0.0 && a2 > 0.0 && a3 > 0.0) || !std::isfinite(a1) || !std::isfinite(a2) ||
        !std::isfinite(a3))
        throw std::invalid_argument(std::string(what) + ": entries must be positive and finite");
}

TriangleA to_triangle(const Vec& v) {
    if (v.size() != 3) throw std::invalid_argument("eta family: expected 3 coordinates");
    return TriangleA{v[0], v[1], v[2]};
}

void check_unit_area(const TriangleA& a) {
    if (std::abs(heron_area(a) - 1.0) > 1e-12)
        throw std::invalid_argument("eta family: input is not a unit-area triangle");
}

}  // namespace

TriangleA sides_to_excess(const TriangleSides& s) {
    check_positive(s.a1, s.a2, s.a3, "sides");
    TriangleA a{0.5 * (s.a2 + s.a3 - s.a1), 0.5 * (s.a3 + s.a1 - s.a2),
                0.5 * (s.a1 + s.a2 - s.a3)};
    if (!(a.a1 > 0.0 && a.a2 > 0.0 && a.a3 > 0.0))
        throw std::invalid_argument("sides: triangle inequality violated");
    return a;
}

TriangleSides excess_to_sides(const TriangleA& a) {
    check_positive(a.a1, a.a2, a.a3, "excess coordinates");
    return TriangleSides{a.a2 + a.a3, a.a3 + a.a1, a.a1 + a.a2};
}

double heron_area(const TriangleA& a) {
    check_positive(a.a1, a.a2, a.a3, "excess coordinates");
    return std::sqrt((a.a1 + a.a2 + a.a3) * a.a1 * a.a2 * a.a3);
}

UnitAreaTriangle normalize_unit_area(const TriangleA& a) {
    const double lambda = 1.0 / std::sqrt(heron_area(a));
    return UnitAreaTriangle{TriangleA{lambda * a.a1, lambda * a.a2, lambda * a.a3}};
}

double eta(const TriangleA& x, const TriangleA& y) {
    check_positive(x.a1, x.a2, x.a3, "excess coordinates");
    check_positive(y.a1, y.a2, y.a3, "excess coordinates");
    return std::log(std::max({y.a1 / x.a1, y.a2 / x.a2, y.a3 / x.a3}));
}

double eta_scaling_residual(const TriangleA& x, const TriangleA& y, double lam,
                            double lam_prime) {
    if (!(lam > 0.0 && lam_prime > 0.0))
        throw std::invalid_argument("scaling factors must be positive");
    const TriangleA xs{lam * x.a1, lam * x.a2, lam * x.a3};
    const TriangleA ys{lam_prime * y.a1, lam_prime * y.a2, lam_prime * y.a3};
    return std::abs(std::exp(eta(xs, ys)) - (lam_prime / lam) * std::exp(eta(x, y)));
}

WeakMetric eta_family(FamilyKind kind, Weight t) {
    WeakMetric base{[](const Vec& xv, const Vec& yv) {
                        const TriangleA x = to_triangle(xv);
                        const TriangleA y = to_triangle(yv);
                        check_unit_area(x);
                        check_unit_area(y);
                        return eta(x, y);
                    },
                    "eta"};
    return (kind == FamilyKind::arith) ? arith_symmetrise(base, t) : max_symmetrise(base, t);
}

UnitAreaTriangle sample_unit_area_triangle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> log_coord(-2.0, 2.0);
    const TriangleA raw{std::exp(log_coord(rng)), std::exp(log_coord(rng)),
                        std::exp(log_coord(rng))};
    return normalize_unit_area(raw);
}

std::optional<AsymmetryWitness> asymmetry_witness(Weight t, FamilyKind kind, int sample_count,
                                                  std::uint64_t seed) {
    if (sample_count <= 0) throw std::invalid_argument("asymmetry_witness: empty sample set");
    const WeakMetric metric = eta_family(kind, t);
    std::mt19937_64 rng(seed);
    AsymmetryWitness best;
    bool have_best = false;
    for (int i = 0; i < sample_count; ++i) {
        const UnitAreaTriangle x = sample_unit_area_triangle(rng);
        const UnitAreaTriangle y = sample_unit_area_triangle(rng);
        const Vec xv = vec3(x.coords.a1, x.coords.a2, x.coords.a3);
        const Vec yv = vec3(y.coords.a1, y.coords.a2, y.coords.a3);
        const double forward = metric(xv, yv);
        const double backward = metric(yv, xv);
        const double gap = std::abs(forward - backward);
        if (!have_best || gap > best.gap) {
            best = AsymmetryWitness{x, y, forward, backward, gap};
            have_best = true;
        }
    }
    if (best.gap > 0.01) return best;
    return std::nullopt;
}

}  // namespace finsler
