// Acceptance battery: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerance in code; expected values are evaluated
// from closed forms or reference oracles, never from solver output.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <vector>

#include "finsler/experiments.hpp"
#include "finsler/funk.hpp"
#include "finsler/geodesic.hpp"
#include "finsler/sampling.hpp"
#include "finsler/triangle_space.hpp"
#include "oracles.hpp"

using namespace finsler;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    std::chrono::steady_clock::time_point start;
    bool ok = true;
    std::string detail;

    explicit Criterion(const char* n) : name(n), start(std::chrono::steady_clock::now()) {}

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    void finish() {
        const double elapsed = seconds();
        if (ok) {
            std::printf("[ok]   %-42s (%.2fs)\n", name, elapsed);
        } else {
            std::printf("[FAIL] %-42s (%.2fs) %s\n", name, elapsed, detail.c_str());
            ++failures;
        }
    }
};

Vec random_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(dim);
    for (;;) {
        for (int i = 0; i < dim; ++i) v[i] = gauss(rng);
        if (v.norm() > 1e-6) return v;
    }
}

// Seeded quadrilateral around the origin: four faces with jittered compass
// normals and offsets in [0.8, 1.5].
ConvexBody random_quad_polytope(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    std::uniform_real_distribution<double> offset(0.8, 1.5);
    Polytope p;
    for (int k = 0; k < 4; ++k) {
        const double angle = 0.5 * M_PI * k + jitter(rng);
        p.faces.push_back({vec2(std::cos(angle), std::sin(angle)), offset(rng)});
    }
    return ConvexBody(std::move(p));
}

void criterion_1_chord_identity() {
    Criterion c("1. funk chord identity (ball + polytope)");
    std::mt19937_64 rng(101);
    std::vector<ConvexBody> bodies;
    bodies.push_back(ConvexBody::unit_ball(2));
    bodies.push_back(random_quad_polytope(2024));
    for (const ConvexBody& body : bodies) {
        const Lagrangian p = funk_lagrangian(body);
        for (int k = 0; k < 100; ++k) {
            const auto [x, y] = sample_interior_pair(body, rng, 0.05, 0.02);
            const double closed = funk_distance(body, x, y);
            const double quad = path_length(p, straight_path(x, y, 129), 8);
            c.require(std::abs(closed - quad) <= 1e-6,
                      "chord mismatch " + std::to_string(std::abs(closed - quad)));
        }
    }
    c.require(c.seconds() < 5.0, "runtime over 5s");
    c.finish();
}

void criterion_2_example_1() {
    Criterion c("2. example: max of norms (half-plane)");
    const ExperimentReport report = run_example_1(0.5, 2.0);
    const double closed = 1.0 + std::log(2.0);
    const double solver = report.quantities.at("dm_solver");
    c.require(std::abs(solver - closed) <= 1e-2 * closed, "solver off the closed form");
    c.require(report.quantities.at("gap") >= 0.15, "strict gap below 0.15");
    c.require(c.seconds() < 30.0, "runtime over 30s");
    c.finish();
}

void criterion_3_example_2() {
    Criterion c("3. example: sum of norms (half-plane)");
    const ExperimentReport report = run_example_2(vec2(0, 1), vec2(1, 2));
    const double reference = std::sqrt(2.0) + std::acosh(1.5);
    c.require(report.quantities.at("ds_solver") >= reference + 1e-3,
              "solver does not exceed d_e + d_h by 1e-3");
    c.require(c.seconds() < 60.0, "runtime over 60s");
    c.finish();
}

std::vector<PointPair> seeded_plane_pairs(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::vector<PointPair> pairs;
    while (static_cast<int>(pairs.size()) < count) {
        const Vec x = vec2(coord(rng), coord(rng));
        const Vec y = vec2(coord(rng), coord(rng));
        if ((x - y).norm() >= 0.1) pairs.emplace_back(x, y);
    }
    return pairs;
}

void criterion_4_example_3() {
    Criterion c("4. example: max of anisotropic norms (plane)");
    GeodesicOptions opts;
    opts.nodes = 9;
    opts.max_refinements = 2;
    const ExperimentReport report = run_example_3(4.0, 9.0, seeded_plane_pairs(20, 301), opts);
    for (const auto& [key, value] : report.residuals)
        c.require(value <= 1e-3, key + " residual " + std::to_string(value));
    c.finish();
}

void criterion_5_example_4() {
    Criterion c("5. example: sum of anisotropic norms (plane)");
    GeodesicOptions opts;
    opts.nodes = 9;
    opts.max_refinements = 2;
    const ExperimentReport report = run_example_4(4.0, 9.0, seeded_plane_pairs(20, 301), opts);
    for (const auto& [key, value] : report.residuals)
        c.require(value <= 1e-3, key + " residual " + std::to_string(value));
    c.finish();
}

void criterion_6_weighted_family_distances() {
    Criterion c("6. weighted funk family on the disc");
    const ConvexBody disc = ConvexBody::unit_ball(2);
    const Lagrangian p = funk_lagrangian(disc);
    const auto pairs = sample_interior_pairs(disc, 10, 601, 0.15, 0.2);
    GeodesicOptions opts;
    opts.nodes = 17;
    opts.max_refinements = 2;
    opts.multistart = 2;
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const Lagrangian family = arith_family(p, t);
        for (const auto& [x, y] : pairs) {
            const double solved = induced_distance(family, x, y, opts).length;
            const double expected =
                (1.0 - t) * funk_distance(disc, x, y) + t * funk_distance(disc, y, x);
            c.require(std::abs(solved - expected) <= 1e-3 * std::max(std::abs(expected), 1e-12),
                      "t=" + std::to_string(t) + " relative error too large");
            if (t == 0.5)
                c.require(std::abs(solved - hilbert_distance(disc, x, y)) <=
                              1e-3 * std::max(hilbert_distance(disc, x, y), 1e-12),
                          "t=1/2 does not match the hilbert distance");
        }
    }
    c.finish();
}

void criterion_7_remark_counterexample() {
    Criterion c("7. segment counterexample residuals");
    const ExperimentReport report = run_remark_counterexample();
    const double expected = 0.5 * std::log(7.0 / 4.0);
    c.require(std::abs(report.quantities.at("residual_max_family") - expected) <= 1e-9,
              "max-family residual off closed form");
    c.require(std::abs(report.quantities.at("residual_arith_family")) <= 1e-12,
              "arith family lost additivity");
    c.finish();
}

void criterion_8_closed_forms_vs_oracles() {
    Criterion c("8. closed forms vs gauge oracles (1000 each)");
    std::mt19937_64 rng(801);
    std::uniform_real_distribution<double> height(0.05, 3.0);
    std::uniform_real_distribution<double> weight(0.0, 1.0);

    // Upper half-plane: bisection on the defining membership condition.
    const auto halfspace_inside = [](const Vec& p) { return p[p.size() - 1] >= 0.0; };
    for (int k = 0; k < 1000; ++k) {
        Vec x = random_vector(2, rng);
        x[1] = height(rng);
        const Vec v = random_vector(2, rng);
        const double t = weight(rng);
        const double closed = halfspace_funk_lagrangian_closed(x, v, Weight(0.0));
        const double oracle = testing::gauge_inf_oracle(halfspace_inside, x, v);
        c.require(std::abs(closed - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)),
                  "half-space closed form vs oracle");
        const double composed = (1.0 - t) * closed +
                                t * halfspace_funk_lagrangian_closed(x, -v, Weight(0.0));
        c.require(std::abs(halfspace_funk_lagrangian_closed(x, v, Weight(t)) - composed) <= 1e-9,
                  "half-space weighted branch formula");
    }

    // Unit ball: closed form against the ray-exit Lagrangian.
    const ConvexBody disc = ConvexBody::unit_ball(2);
    const Lagrangian p = funk_lagrangian(disc);
    for (int k = 0; k < 1000; ++k) {
        const Vec x = sample_interior_point(disc, rng, 0.02);
        const Vec v = random_vector(2, rng);
        const double t = weight(rng);
        const double composed = (1.0 - t) * p(x, v) + t * p(x, -v);
        const double closed = ball_funk_lagrangian_closed(x, v, Weight(t));
        c.require(std::abs(closed - composed) <= 1e-9 * std::max(1.0, std::abs(composed)),
                  "ball closed form vs ray exit");
    }
    c.finish();
}

void criterion_9_triangle_space() {
    Criterion c("9. triangle space battery");
    std::mt19937_64 rng(901);
    std::uniform_real_distribution<double> raw(-2.0, 2.0);
    std::uniform_real_distribution<double> lam(0.5, 2.0);

    for (int k = 0; k < 1000; ++k) {
        const TriangleA x{std::exp(raw(rng)), std::exp(raw(rng)), std::exp(raw(rng))};
        const TriangleA y{std::exp(raw(rng)), std::exp(raw(rng)), std::exp(raw(rng))};
        c.require(eta_scaling_residual(x, y, lam(rng), lam(rng)) <= 1e-12,
                  "scaling identity residual");
    }

    const WeakMetric arith_half = eta_family(FamilyKind::arith, Weight(0.5));
    for (int k = 0; k < 1000; ++k) {
        const UnitAreaTriangle xt = sample_unit_area_triangle(rng);
        const UnitAreaTriangle yt = sample_unit_area_triangle(rng);
        const Vec x = vec3(xt.coords.a1, xt.coords.a2, xt.coords.a3);
        const Vec y = vec3(yt.coords.a1, yt.coords.a2, yt.coords.a3);
        c.require(std::abs(arith_half(x, y) - arith_half(y, x)) <= 1e-12,
                  "half-weight symmetry");
    }

    for (double t : {0.0, 0.3}) {
        const auto witness = asymmetry_witness(Weight(t), FamilyKind::arith, 10000, 42);
        c.require(witness.has_value() && witness->gap >= 0.01,
                  "no asymmetry witness at t=" + std::to_string(t));
    }

    auto triple_rng = std::make_shared<std::mt19937_64>(902);
    const PointSource source = [triple_rng]() {
        const UnitAreaTriangle u = sample_unit_area_triangle(*triple_rng);
        return vec3(u.coords.a1, u.coords.a2, u.coords.a3);
    };
    const auto probe =
        triangle_inequality_probe(eta_family(FamilyKind::arith, Weight(0.0)), source, 1000, 1e-12);
    c.require(probe.passed && probe.max_residual <= 1e-12, "triangle inequality probe");
    c.finish();
}

void criterion_10_busemann() {
    Criterion c("10. busemann probe on the funk disc");
    const ConvexBody disc = ConvexBody::unit_ball(2);
    const WeakMetric funk = funk_metric(disc);
    std::mt19937_64 rng(1001);
    for (int target = 0; target < 3; ++target) {
        const Vec x = sample_interior_point(disc, rng, 0.2);
        Vec direction = -x;
        if (!(direction.norm() > 0)) direction = vec2(1.0, 0.0);
        direction.normalize();
        const double reach = 0.1 * disc.interior_margin(x);
        std::vector<Vec> approach;
        for (int n = 1; n <= 200; ++n) approach.push_back(x + (reach / n) * direction);
        const auto report = busemann_probe(funk, x, approach, 1e-3);
        c.require(report.passed, "tail above 1e-3");
    }
    c.finish();
}

void criterion_11_property_suites() {
    Criterion c("11. property suites (>=500 cases each)");
    std::mt19937_64 rng(1101);
    std::uniform_real_distribution<double> lam(0.1, 10.0);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    const ConvexBody disc = ConvexBody::unit_ball(2);
    const Lagrangian p = funk_lagrangian(disc);
    const WeakMetric funk = funk_metric(disc);

    // Homogeneity and subadditivity of the Funk Lagrangian.
    for (int k = 0; k < 500; ++k) {
        const Vec x = sample_interior_point(disc, rng, 0.02);
        const Vec v1 = random_vector(2, rng);
        const Vec v2 = random_vector(2, rng);
        const double l = lam(rng);
        c.require(std::abs(p(x, l * v1) - l * p(x, v1)) <= 1e-12 * std::max(1.0, l * p(x, v1)),
                  "homogeneity");
        c.require(p(x, v1 + v2) <= p(x, v1) + p(x, v2) + 1e-9, "subadditivity");
    }

    // Quadrature linearity.
    const Lagrangian euclid = euclidean_lagrangian(2);
    const Lagrangian hyper = halfplane_hyperbolic_lagrangian();
    std::uniform_real_distribution<double> xs(-2.0, 2.0);
    std::uniform_real_distribution<double> ys(0.5, 3.0);
    for (int k = 0; k < 500; ++k) {
        PolylinePath path;
        for (int i = 0; i < 5; ++i) path.nodes.push_back(vec2(xs(rng), ys(rng)));
        c.require(crucial_identity_check(euclid, hyper, weight(rng), path) <= 1e-12,
                  "quadrature linearity");
    }

    // Refinement monotonicity within the solver tolerance.
    GeodesicOptions opts;
    opts.nodes = 17;
    opts.max_refinements = 2;
    opts.multistart = 1;
    opts.max_iterations = 60;
    for (int k = 0; k < 500; ++k) {
        auto [x, y] = sample_interior_pair(disc, rng, 0.25, 0.05);
        if ((y - x).norm() > 0.3) y = x + 0.3 * (y - x).normalized();
        opts.seed = k;
        const Lagrangian f = (k % 2 == 0) ? p : max_family(p, 0.5);
        const GeodesicResult result = induced_distance(f, x, y, opts);
        const double slack = opts.tolerance * std::max(1.0, std::abs(result.length));
        for (std::size_t i = 1; i < result.history.size(); ++i)
            c.require(result.history[i].second <= result.history[i - 1].second + slack,
                      "refinement monotonicity");
    }

    // Reverse involution and symmetriser endpoints.
    const Lagrangian rev_rev = reverse_lagrangian(reverse_lagrangian(p));
    const WeakMetric rev_rev_metric = reverse_metric(reverse_metric(funk));
    for (int k = 0; k < 500; ++k) {
        const auto [x, y] = sample_interior_pair(disc, rng, 0.02, 1e-6);
        const Vec v = random_vector(2, rng);
        c.require(rev_rev(x, v) == p(x, v), "lagrangian reverse involution");
        c.require(rev_rev_metric(x, y) == funk(x, y), "metric reverse involution");
        c.require(arith_symmetrise(funk, Weight(0.0))(x, y) == funk(x, y), "arith endpoint t=0");
        c.require(arith_symmetrise(funk, Weight(1.0))(x, y) == funk(y, x), "arith endpoint t=1");
        c.require(max_symmetrise(funk, Weight(0.0))(x, y) == funk(x, y), "max endpoint t=0");
        c.require(max_symmetrise(funk, Weight(1.0))(x, y) == funk(y, x), "max endpoint t=1");
    }
    c.finish();
}

}  // namespace

int main() {
    criterion_1_chord_identity();
    criterion_2_example_1();
    criterion_3_example_2();
    criterion_4_example_3();
    criterion_5_example_4();
    criterion_6_weighted_family_distances();
    criterion_7_remark_counterexample();
    criterion_8_closed_forms_vs_oracles();
    criterion_9_triangle_space();
    criterion_10_busemann();
    criterion_11_property_suites();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures;
}
