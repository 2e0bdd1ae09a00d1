#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "finsler/geometry.hpp"

namespace finsler {

// Closed convex domains in R^n with ray-exit queries. Supported shapes:
//
//   Ball           |x - c| <= r
//   Ellipsoid      sum ((x_i - c_i)/d_i)^2 <= 1
//   Polytope       n_j . x <= b_j for a list of half-spaces (normals are
//                  normalized at construction; interior must be nonempty)
//   UpperHalfSpace x_k > 0 for one axis k (unbounded)
//
// A point counts as interior when its normalized margin is at least
// kInteriorMargin; distance formulas degenerate on the boundary, so the
// margin is strictly positive by design.

inline constexpr double kInteriorMargin = 1e-12;

struct Ball {
    Vec center;
    double radius = 1.0;
};

struct Ellipsoid {
    Vec center;
    Vec semi_axes;
};

struct HalfspaceCut {
    Vec normal;      // unit length after construction
    double offset = 0.0;
};

struct Polytope {
    std::vector<HalfspaceCut> faces;
};

struct UpperHalfSpace {
    int dim = 2;
    int axis = 1;    // zero-based; the domain is { x : x[axis] > 0 }
};

class ConvexBody {
public:
    explicit ConvexBody(Ball b);
    explicit ConvexBody(Ellipsoid e);
    explicit ConvexBody(Polytope p);
    explicit ConvexBody(UpperHalfSpace h);

    static ConvexBody unit_ball(int dim);

    int dim() const { return dim_; }
    std::string kind() const;

    // A stored strictly interior point (the center where one exists).
    const Vec& anchor() const { return anchor_; }

    // Normalized interior margin: positive inside, negative outside.
    // Ball/ellipsoid margins are relative to the radius; polytope margins are
    // Euclidean distances to the face planes; half-space margin is the
    // coordinate itself.
    double interior_margin(const Vec& x) const;

    // Strict interior membership (margin >= kInteriorMargin).
    bool contains(const Vec& x) const;

    // Exit parameter s > 0 with x + s v on the boundary, or +infinity when
    // the ray stays inside. Requires an interior x and nonzero v.
    double ray_exit(const Vec& x, const Vec& v) const;

    struct Chord {
        std::optional<Vec> a_plus;   // exit of the ray from x through y
        std::optional<Vec> a_minus;  // exit of the ray from y through x
    };
    Chord chord_endpoints(const Vec& x, const Vec& y) const;

private:
    std::variant<Ball, Ellipsoid, Polytope, UpperHalfSpace> shape_;
    Vec anchor_;
    int dim_ = 0;

    void check_dim(const Vec& x) const;
};

// Text format, one body per file. Line 1 is the variant tag, the remaining
// lines are whitespace-separated numbers:
//   ball       center... / radius
//   ellipsoid  center... / semi-axes...
//   polytope   one "n1 ... nk b" row per half-space
//   halfspace  dimension and 1-based axis index
ConvexBody read_body(std::istream& in);
ConvexBody load_body(const std::string& path);

}  // namespace finsler
