#pragma once

#include <Eigen/Dense>
#include <limits>

namespace finsler {

// Points and tangent vectors share the same dense representation; the
// distinction is carried by the API, not the type.
using Vec = Eigen::VectorXd;
using Point = Vec;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline Vec vec2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

inline Vec vec3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

// Extended-real scaling with the convention 0 * inf = 0, so that a weight of
// zero erases an infinite distance instead of poisoning the combination.
inline double scale_extended(double c, double v) {
    if (c == 0.0) return 0.0;
    return c * v;
}

}  // namespace finsler
