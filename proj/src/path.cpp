#include "finsler/path.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace finsler {

PolylinePath straight_path(const Vec& x, const Vec& y, int node_count) {
    if (node_count < 2) throw std::invalid_argument("straight_path: need at least 2 nodes");
    PolylinePath path;
    path.nodes.reserve(node_count);
    for (int i = 0; i < node_count; ++i) {
        const double u = static_cast<double>(i) / (node_count - 1);
        path.nodes.push_back((1.0 - u) * x + u * y);
    }
    return path;
}

PolylinePath insert_midpoints(const PolylinePath& path) {
    if (path.nodes.size() < 2) throw std::invalid_argument("insert_midpoints: need at least 2 nodes");
    PolylinePath out;
    out.nodes.reserve(2 * path.nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        out.nodes.push_back(path.nodes[i]);
        out.nodes.push_back(0.5 * (path.nodes[i] + path.nodes[i + 1]));
    }
    out.nodes.push_back(path.nodes.back());
    return out;
}

const Quadrature& gauss_rule(int order) {
    // Abscissae/weights on [-1, 1], mapped to [0, 1] once at startup.
    static const std::map<int, Quadrature> rules = [] {
        std::map<int, std::pair<std::vector<double>, std::vector<double>>> raw;
        raw[1] = {{0.0}, {2.0}};
        raw[2] = {{-0.5773502691896257, 0.5773502691896257}, {1.0, 1.0}};
        raw[4] = {{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                   0.8611363115940526},
                  {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                   0.3478548451374538}};
        raw[8] = {{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                   -0.1834346424956498, 0.1834346424956498, 0.5255324099163290,
                   0.7966664774136267, 0.9602898564975363},
                  {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                   0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                   0.2223810344533745, 0.1012285362903763}};
        raw[16] = {{-0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
                    -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
                    -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
                    0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
                    0.7554044083550030, 0.8656312023878318, 0.9445750230732326,
                    0.9894009349916499},
                   {0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
                    0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
                    0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
                    0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
                    0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
                    0.0271524594117541}};
        std::map<int, Quadrature> mapped;
        for (auto& [order_key, nw] : raw) {
            Quadrature q;
            for (std::size_t i = 0; i < nw.first.size(); ++i) {
                q.points.push_back(0.5 * (nw.first[i] + 1.0));
                q.weights.push_back(0.5 * nw.second[i]);
            }
            mapped[order_key] = std::move(q);
        }
        return mapped;
    }();
    const auto it = rules.find(order);
    if (it == rules.end())
        throw std::invalid_argument("gauss_rule: unsupported order " + std::to_string(order));
    return it->second;
}

namespace {

double segment_length(const Lagrangian& f, const Vec& a, const Vec& b, const Quadrature& q) {
    const Vec d = b - a;
    if (!(d.norm() > 0.0)) return 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < q.points.size(); ++k)
        acc += q.weights[k] * f(a + q.points[k] * d, d);
    return acc;
}

}  // namespace

double path_length(const Lagrangian& f, const PolylinePath& path, int quad_order) {
    if (path.nodes.size() < 2) throw std::invalid_argument("path_length: need at least 2 nodes");
    const Quadrature& q = gauss_rule(quad_order);
    for (const Vec& node : path.nodes)
        if (!f.in_domain(node)) throw std::domain_error("path_length: node outside domain");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i)
        total += segment_length(f, path.nodes[i], path.nodes[i + 1], q);
    return total;
}

double crucial_identity_check(const Lagrangian& f1, const Lagrangian& f2, double t,
                              const PolylinePath& path, int quad_order) {
    const double combined = path_length(weighted_sum_lagrangian(f1, f2, t), path, quad_order);
    const double split =
        (1.0 - t) * path_length(f1, path, quad_order) + t * path_length(f2, path, quad_order);
    return std::abs(combined - split);
}

}  // namespace finsler
