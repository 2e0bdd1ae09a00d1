#include "finsler/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace finsler {

namespace {

Vec random_direction(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec u(dim);
    for (;;) {
        for (int i = 0; i < dim; ++i) u[i] = gauss(rng);
        const double len = u.norm();
        if (len > 1e-12) return u / len;
    }
}

// One hit-and-run step: jump to a uniform point of the chord through x,
// keeping away from the ends. Unbounded chord directions are clamped.
Vec hit_and_run_step(const ConvexBody& body, const Vec& x, std::mt19937_64& rng) {
    const Vec u = random_direction(body.dim(), rng);
    double forward = body.ray_exit(x, u);
    double backward = body.ray_exit(x, -u);
    forward = std::isfinite(forward) ? forward : 1e3;
    backward = std::isfinite(backward) ? backward : 1e3;
    std::uniform_real_distribution<double> pick(-0.9 * backward, 0.9 * forward);
    return x + pick(rng) * u;
}

}  // namespace

Vec sample_interior_point(const ConvexBody& body, std::mt19937_64& rng, double min_margin) {
    const int dim = body.dim();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Vec candidate;
        if (body.kind() == "halfspace") {
            candidate = body.anchor();
            for (int i = 0; i < dim; ++i) candidate[i] += gauss(rng);
        } else if (body.kind() == "polytope") {
            candidate = body.anchor();
            for (int step = 0; step < 8; ++step)
                candidate = hit_and_run_step(body, candidate, rng);
        } else {
            // Ball or ellipsoid: scale a boundary ray from the center, so the
            // normalized margin of the sample is exactly 1 - f.
            const Vec u = random_direction(dim, rng);
            const double s = body.ray_exit(body.anchor(), u);
            const double f = (1.0 - min_margin - 1e-3) * std::pow(unit(rng), 1.0 / dim);
            candidate = body.anchor() + (f * s) * u;
        }
        if (body.interior_margin(candidate) >= min_margin) return candidate;
    }
    throw std::runtime_error("sample_interior_point: could not reach the requested margin");
}

std::pair<Vec, Vec> sample_interior_pair(const ConvexBody& body, std::mt19937_64& rng,
                                         double min_margin, double min_separation) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Vec x = sample_interior_point(body, rng, min_margin);
        Vec y = sample_interior_point(body, rng, min_margin);
        if ((x - y).norm() >= min_separation) return {std::move(x), std::move(y)};
    }
    throw std::runtime_error("sample_interior_pair: could not reach the requested separation");
}

std::vector<std::pair<Vec, Vec>> sample_interior_pairs(const ConvexBody& body, int count,
                                                       std::uint64_t seed, double min_margin,
                                                       double min_separation) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vec, Vec>> pairs;
    pairs.reserve(count);
    for (int i = 0; i < count; ++i)
        pairs.push_back(sample_interior_pair(body, rng, min_margin, min_separation));
    return pairs;
}

PointSource make_interior_source(const ConvexBody& body, std::uint64_t seed, double min_margin) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [body, rng, min_margin]() { return sample_interior_point(body, *rng, min_margin); };
}

}  // namespace finsler
