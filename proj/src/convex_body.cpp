#include "finsler/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace finsler {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Smallest positive root of |u + s w|^2 = 1 for |u| < 1. The product of the
// two roots is negative, so the positive one is computed without cancellation.
double unit_sphere_exit(const Vec& u, const Vec& w) {
    const double a = w.squaredNorm();
    const double b = u.dot(w);
    const double c = u.squaredNorm() - 1.0;  // negative for interior points
    const double disc = b * b - a * c;
    const double root = std::sqrt(disc);
    return (b <= 0.0) ? (-b + root) / a : -c / (b + root);
}

// Strictly feasible point of a normalized half-space system, found by
// successive over-relaxed projections onto the most violated tightened
// constraint (Agmon-Motzkin). Fails only when the interior is empty or
// degenerate beyond the shrinking slack.
std::optional<Vec> feasible_point(const std::vector<HalfspaceCut>& faces, int dim) {
    double scale = 1.0;
    for (const auto& f : faces) scale = std::max(scale, std::abs(f.offset));
    double slack = 1e-2 * scale;
    while (slack > 1e-13 * scale) {
        Vec x = Vec::Zero(dim);
        for (int it = 0; it < 2000; ++it) {
            double worst = -kInfinity;
            const HalfspaceCut* worst_face = nullptr;
            for (const auto& f : faces) {
                const double viol = f.normal.dot(x) - (f.offset - slack);
                if (viol > worst) {
                    worst = viol;
                    worst_face = &f;
                }
            }
            if (worst <= 0.0) return x;
            x -= 1.5 * worst * worst_face->normal;
        }
        slack *= 0.25;
    }
    return std::nullopt;
}

}  // namespace

ConvexBody::ConvexBody(Ball b) : shape_(std::move(b)) {
    const auto& ball = std::get<Ball>(shape_);
    require(ball.center.size() >= 1, "ball: empty center");
    require(ball.center.allFinite(), "ball: non-finite center");
    require(std::isfinite(ball.radius) && ball.radius > 0.0, "ball: radius must be positive");
    dim_ = static_cast<int>(ball.center.size());
    anchor_ = ball.center;
}

ConvexBody::ConvexBody(Ellipsoid e) : shape_(std::move(e)) {
    const auto& ell = std::get<Ellipsoid>(shape_);
    require(ell.center.size() >= 1, "ellipsoid: empty center");
    require(ell.center.size() == ell.semi_axes.size(), "ellipsoid: center/axes dimension mismatch");
    require(ell.center.allFinite() && ell.semi_axes.allFinite(), "ellipsoid: non-finite parameters");
    require((ell.semi_axes.array() > 0.0).all(), "ellipsoid: semi-axes must be positive");
    dim_ = static_cast<int>(ell.center.size());
    anchor_ = ell.center;
}

ConvexBody::ConvexBody(Polytope p) : shape_(std::move(p)) {
    auto& poly = std::get<Polytope>(shape_);
    require(!poly.faces.empty(), "polytope: no half-spaces");
    dim_ = static_cast<int>(poly.faces.front().normal.size());
    for (auto& f : poly.faces) {
        require(static_cast<int>(f.normal.size()) == dim_, "polytope: mixed dimensions");
        require(f.normal.allFinite() && std::isfinite(f.offset), "polytope: non-finite row");
        const double len = f.normal.norm();
        require(len > 0.0, "polytope: zero normal");
        f.normal /= len;
        f.offset /= len;
    }
    auto inner = feasible_point(poly.faces, dim_);
    require(inner.has_value(), "polytope: empty interior");
    anchor_ = *inner;
}

ConvexBody::ConvexBody(UpperHalfSpace h) : shape_(h) {
    require(h.dim >= 1, "halfspace: dimension must be >= 1");
    require(h.axis >= 0 && h.axis < h.dim, "halfspace: axis out of range");
    dim_ = h.dim;
    anchor_ = Vec::Zero(dim_);
    anchor_[h.axis] = 1.0;
}

ConvexBody ConvexBody::unit_ball(int dim) {
    return ConvexBody(Ball{Vec::Zero(dim), 1.0});
}

std::string ConvexBody::kind() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) return "ball";
            else if constexpr (std::is_same_v<T, Ellipsoid>) return "ellipsoid";
            else if constexpr (std::is_same_v<T, Polytope>) return "polytope";
            else return "halfspace";
        },
        shape_);
}

void ConvexBody::check_dim(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("dimension mismatch: body is " + std::to_string(dim_) +
                                    "-dimensional, point is " + std::to_string(x.size()) +
                                    "-dimensional");
}

double ConvexBody::interior_margin(const Vec& x) const {
    check_dim(x);
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return (s.radius - (x - s.center).norm()) / s.radius;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                const Vec u = (x - s.center).cwiseQuotient(s.semi_axes);
                return 1.0 - u.norm();
            } else if constexpr (std::is_same_v<T, Polytope>) {
                double m = kInfinity;
                for (const auto& f : s.faces) m = std::min(m, f.offset - f.normal.dot(x));
                return m;
            } else {
                return x[s.axis];
            }
        },
        shape_);
}

bool ConvexBody::contains(const Vec& x) const {
    return interior_margin(x) >= kInteriorMargin;
}

double ConvexBody::ray_exit(const Vec& x, const Vec& v) const {
    check_dim(x);
    check_dim(v);
    if (!(v.norm() > 0.0)) throw std::invalid_argument("ray_exit: zero direction");
    if (!contains(x)) throw std::domain_error("ray_exit: base point is not interior");
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return unit_sphere_exit((x - s.center) / s.radius, v / s.radius);
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                const Vec u = (x - s.center).cwiseQuotient(s.semi_axes);
                const Vec w = v.cwiseQuotient(s.semi_axes);
                return unit_sphere_exit(u, w);
            } else if constexpr (std::is_same_v<T, Polytope>) {
                double best = kInfinity;
                for (const auto& f : s.faces) {
                    const double speed = f.normal.dot(v);
                    if (speed > 0.0)
                        best = std::min(best, (f.offset - f.normal.dot(x)) / speed);
                }
                return best;
            } else {
                if (v[s.axis] < 0.0) return -x[s.axis] / v[s.axis];
                return kInfinity;
            }
        },
        shape_);
}

ConvexBody::Chord ConvexBody::chord_endpoints(const Vec& x, const Vec& y) const {
    check_dim(x);
    check_dim(y);
    const Vec d = y - x;
    if (!(d.norm() > 0.0)) throw std::invalid_argument("chord_endpoints: coincident points");
    Chord chord;
    const double sp = ray_exit(x, d);
    if (std::isfinite(sp)) chord.a_plus = x + sp * d;
    const double sm = ray_exit(y, -d);
    if (std::isfinite(sm)) chord.a_minus = y - sm * d;
    return chord;
}

namespace {

std::vector<std::vector<double>> numeric_rows(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<double> row;
        double value;
        while (ls >> value) row.push_back(value);
        if (!ls.eof()) throw std::invalid_argument("body file: non-numeric data: " + line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

Vec to_vec(const std::vector<double>& row) {
    Vec v(static_cast<int>(row.size()));
    for (int i = 0; i < v.size(); ++i) v[i] = row[i];
    return v;
}

}  // namespace

ConvexBody read_body(std::istream& in) {
    std::string tag;
    if (!(in >> tag)) throw std::invalid_argument("body file: empty");
    {
        std::string rest;
        std::getline(in, rest);
    }
    const auto rows = numeric_rows(in);
    if (tag == "ball") {
        require(rows.size() == 2 && rows[1].size() == 1, "body file: ball needs a center row and a radius row");
        return ConvexBody(Ball{to_vec(rows[0]), rows[1][0]});
    }
    if (tag == "ellipsoid") {
        require(rows.size() == 2, "body file: ellipsoid needs a center row and a semi-axes row");
        return ConvexBody(Ellipsoid{to_vec(rows[0]), to_vec(rows[1])});
    }
    if (tag == "polytope") {
        require(!rows.empty(), "body file: polytope needs at least one half-space row");
        Polytope poly;
        for (const auto& row : rows) {
            require(row.size() >= 2, "body file: half-space row needs a normal and an offset");
            std::vector<double> normal(row.begin(), row.end() - 1);
            poly.faces.push_back({to_vec(normal), row.back()});
        }
        return ConvexBody(std::move(poly));
    }
    if (tag == "halfspace") {
        require(rows.size() == 1 && rows[0].size() == 2, "body file: halfspace needs one 'dim axis' row");
        const int dim = static_cast<int>(rows[0][0]);
        const int axis = static_cast<int>(rows[0][1]);  // 1-based in the file
        return ConvexBody(UpperHalfSpace{dim, axis - 1});
    }
    throw std::invalid_argument("body file: unknown variant tag '" + tag + "'");
}

ConvexBody load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open body file: " + path);
    return read_body(in);
}

}  // namespace finsler
