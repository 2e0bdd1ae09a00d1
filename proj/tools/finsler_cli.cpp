#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "finsler/experiments.hpp"
#include "finsler/funk.hpp"
#include "finsler/sampling.hpp"
#include "finsler/serialize.hpp"
#include "finsler/triangle_space.hpp"

namespace {

using namespace finsler;

Vec parse_point(const std::string& text) {
    std::vector<double> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        coords.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument("bad coordinate '" + item + "'");
    }
    if (coords.empty()) throw std::invalid_argument("empty point '" + text + "'");
    Vec v(static_cast<int>(coords.size()));
    for (int i = 0; i < v.size(); ++i) v[i] = coords[i];
    return v;
}

TriangleA parse_triangle(const std::string& text) {
    const Vec v = parse_point(text);
    if (v.size() != 3) throw std::invalid_argument("triangle needs exactly 3 coordinates");
    return TriangleA{v[0], v[1], v[2]};
}

void emit(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    writer(file);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

WeakMetric make_metric(const ConvexBody& body, const std::string& name, double t) {
    if (name == "funk") return funk_metric(body);
    if (name == "funk-reverse") return reverse_metric(funk_metric(body));
    if (name == "hilbert") return hilbert_metric(body);
    if (name == "funk-arith") return arith_symmetrise(funk_metric(body), Weight(t));
    if (name == "funk-max") return max_symmetrise(funk_metric(body), Weight(t));
    throw std::invalid_argument("unknown metric '" + name + "'");
}

Lagrangian make_lagrangian(const ConvexBody& body, const std::string& name, double t) {
    if (name == "funk") return funk_lagrangian(body);
    if (name == "hilbert") return hilbert_lagrangian(body);
    if (name == "funk-arith") return weighted_funk_lagrangian(body, Weight(t));
    if (name == "funk-max") return max_family(funk_lagrangian(body), t);
    throw std::invalid_argument("unknown lagrangian '" + name + "'");
}

struct SolverFlags {
    int nodes = 33;
    int order = 4;
    double tol = 1e-4;
    int max_iterations = 160;
    int refinements = 4;
    int multistart = 3;
    std::uint64_t seed = 0;

    GeodesicOptions options() const {
        GeodesicOptions opts;
        opts.nodes = nodes;
        opts.quad_order = order;
        opts.tolerance = tol;
        opts.max_iterations = max_iterations;
        opts.max_refinements = refinements;
        opts.multistart = multistart;
        opts.seed = seed;
        return opts;
    }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
    cmd->add_option("--nodes", flags.nodes, "polyline node count")->check(CLI::Range(2, 100000));
    cmd->add_option("--order", flags.order, "quadrature order")
        ->check(CLI::IsMember({1, 2, 4, 8, 16}));
    cmd->add_option("--tol", flags.tol, "refinement stop tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iterations", flags.max_iterations, "pattern-search sweeps per level")
        ->check(CLI::Range(1, 1000000));
    cmd->add_option("--refinements", flags.refinements, "node-doubling levels")
        ->check(CLI::Range(0, 12));
    cmd->add_option("--multistart", flags.multistart, "number of solver starts")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--seed", flags.seed, "random seed");
}

int run(int argc, char** argv) {
    CLI::App app{"weak Finsler metric toolkit: Funk/Hilbert distances, geodesic solver, "
                 "metric probes and scripted experiments"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- dist ----------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "closed-form distance between two points");
    std::string dist_body, dist_metric = "funk", dist_from, dist_to, dist_out;
    double dist_t = 0.5;
    dist->add_option("--body", dist_body, "body file")->required();
    dist->add_option("--metric", dist_metric, "metric name")
        ->check(CLI::IsMember({"funk", "funk-reverse", "hilbert", "funk-arith", "funk-max"}));
    dist->add_option("--from", dist_from, "start point, comma-separated")->required();
    dist->add_option("--to", dist_to, "end point, comma-separated")->required();
    dist->add_option("--t", dist_t, "weight in [0,1]")->check(CLI::Range(0.0, 1.0));
    dist->add_option("--out", dist_out, "output file (JSON)");
    dist->callback([&] {
        const ConvexBody body = load_body(dist_body);
        const WeakMetric metric = make_metric(body, dist_metric, dist_t);
        const double value = metric(parse_point(dist_from), parse_point(dist_to));
        emit(dist_out, [&](std::ostream& os) {
            os << nlohmann::json{{"value", value}}.dump() << '\n';
        });
    });

    // ---- geodesic ------------------------------------------------------
    auto* geo = app.add_subcommand("geodesic", "induced distance by polyline optimization");
    std::string geo_body, geo_lagrangian = "funk", geo_from, geo_to, geo_out;
    double geo_t = 0.5;
    SolverFlags geo_flags;
    geo->add_option("--body", geo_body, "body file")->required();
    geo->add_option("--lagrangian", geo_lagrangian, "lagrangian name")
        ->check(CLI::IsMember({"funk", "hilbert", "funk-arith", "funk-max"}));
    geo->add_option("--from", geo_from, "start point")->required();
    geo->add_option("--to", geo_to, "end point")->required();
    geo->add_option("--t", geo_t, "weight in [0,1]")->check(CLI::Range(0.0, 1.0));
    geo->add_option("--out", geo_out, "output file (.json result, .csv path nodes)");
    add_solver_flags(geo, geo_flags);
    geo->callback([&] {
        const ConvexBody body = load_body(geo_body);
        const Lagrangian f = make_lagrangian(body, geo_lagrangian, geo_t);
        const GeodesicResult result =
            induced_distance(f, parse_point(geo_from), parse_point(geo_to), geo_flags.options());
        if (ends_with(geo_out, ".csv")) {
            emit(geo_out, [&](std::ostream& os) { write_path_csv(os, result.path); });
        } else {
            emit(geo_out, [&](std::ostream& os) { os << to_json(result).dump() << '\n'; });
        }
    });

    // ---- probe ---------------------------------------------------------
    auto* probe = app.add_subcommand("probe", "sampling probes of the metric axioms");
    std::string probe_body, probe_metric = "funk", probe_kind = "triangle", probe_at, probe_out;
    double probe_t = 0.5, probe_margin = 0.05, probe_tol = -1.0;
    int probe_samples = 1000, probe_len = 100;
    std::uint64_t probe_seed = 0;
    probe->add_option("--body", probe_body, "body file")->required();
    probe->add_option("--metric", probe_metric, "metric name")
        ->check(CLI::IsMember({"funk", "funk-reverse", "hilbert", "funk-arith", "funk-max"}));
    probe->add_option("--probe", probe_kind, "probe kind")
        ->check(CLI::IsMember({"triangle", "busemann"}));
    probe->add_option("--t", probe_t, "weight in [0,1]")->check(CLI::Range(0.0, 1.0));
    probe->add_option("--samples", probe_samples, "sampled triples")->check(CLI::Range(1, 10000000));
    probe->add_option("--len", probe_len, "approach sequence length")->check(CLI::Range(4, 10000000));
    probe->add_option("--at", probe_at, "target point for the busemann probe");
    probe->add_option("--margin", probe_margin, "sampling margin")->check(CLI::Range(0.0, 0.5));
    probe->add_option("--tolerance", probe_tol, "pass tolerance (probe default if omitted)");
    probe->add_option("--seed", probe_seed, "random seed");
    probe->add_option("--out", probe_out, "output file (JSON)");
    probe->callback([&] {
        const ConvexBody body = load_body(probe_body);
        const WeakMetric metric = make_metric(body, probe_metric, probe_t);
        ProbeReport report;
        if (probe_kind == "triangle") {
            const PointSource source = make_interior_source(body, probe_seed, probe_margin);
            report = triangle_inequality_probe(metric, source, probe_samples,
                                               probe_tol > 0 ? probe_tol : 1e-9);
        } else {
            if (probe_at.empty()) throw std::invalid_argument("busemann probe needs --at");
            const Vec x = parse_point(probe_at);
            if (!body.contains(x)) throw std::invalid_argument("--at point is not interior");
            // Radial approach toward the anchor, shrinking like 1/n. The
            // reach keeps the tail of the sequence well below the default
            // tolerance for sequences of a hundred points or more.
            Vec direction = body.anchor() - x;
            if (!(direction.norm() > 0)) direction = Vec::Unit(body.dim(), 0);
            direction.normalize();
            const double reach = 0.05 * body.interior_margin(x);
            std::vector<Vec> approach;
            for (int n = 1; n <= probe_len; ++n) approach.push_back(x + (reach / n) * direction);
            report = busemann_probe(metric, x, approach, probe_tol > 0 ? probe_tol : 1e-3);
        }
        emit(probe_out, [&](std::ostream& os) { os << to_json(report).dump() << '\n'; });
        if (!report.passed) exit_code = 1;
    });

    // ---- example -------------------------------------------------------
    auto* example = app.add_subcommand("example", "scripted experiment reproductions");
    std::string ex_name, ex_out, ex_a1 = "0,1", ex_a2 = "1,2";
    double ex_y1 = 0.5, ex_y2 = 2.0, ex_a = 4.0, ex_b = 9.0, ex_t = 0.5;
    int ex_pairs = 20;
    bool ex_timing = false;
    SolverFlags ex_flags;
    example->add_option("--name", ex_name, "ex1|ex2|ex3|ex4|remark|sum|max")
        ->required()
        ->check(CLI::IsMember({"ex1", "ex2", "ex3", "ex4", "remark", "sum", "max"}));
    example->add_option("--y1", ex_y1, "lower height (ex1)")->check(CLI::PositiveNumber);
    example->add_option("--y2", ex_y2, "upper height (ex1)")->check(CLI::PositiveNumber);
    example->add_option("--a1", ex_a1, "first endpoint (ex2)");
    example->add_option("--a2", ex_a2, "second endpoint (ex2)");
    example->add_option("--a", ex_a, "first axis weight")->check(CLI::PositiveNumber);
    example->add_option("--b", ex_b, "second axis weight")->check(CLI::PositiveNumber);
    example->add_option("--t", ex_t, "weight in [0,1]")->check(CLI::Range(0.0, 1.0));
    example->add_option("--pairs", ex_pairs, "number of seeded pairs")->check(CLI::Range(1, 10000));
    example->add_flag("--timing", ex_timing, "include runtimes in the JSON");
    example->add_option("--out", ex_out, "output file (JSON)");
    add_solver_flags(example, ex_flags);
    example->callback([&] {
        const GeodesicOptions opts = ex_flags.options();
        ExperimentReport report;
        if (ex_name == "ex1") {
            report = run_example_1(ex_y1, ex_y2, opts);
        } else if (ex_name == "ex2") {
            report = run_example_2(parse_point(ex_a1), parse_point(ex_a2), opts);
        } else if (ex_name == "ex3" || ex_name == "ex4") {
            std::mt19937_64 rng(ex_flags.seed);
            std::uniform_real_distribution<double> coord(-1.0, 1.0);
            std::vector<PointPair> pairs;
            for (int i = 0; i < ex_pairs; ++i) {
                Vec x = vec2(coord(rng), coord(rng));
                Vec y = vec2(coord(rng), coord(rng));
                while ((x - y).norm() < 0.1) y = vec2(coord(rng), coord(rng));
                pairs.emplace_back(std::move(x), std::move(y));
            }
            report = (ex_name == "ex3") ? run_example_3(ex_a, ex_b, pairs, opts)
                                        : run_example_4(ex_a, ex_b, pairs, opts);
        } else if (ex_name == "remark") {
            report = run_remark_counterexample();
        } else {
            const ConvexBody disc = ConvexBody::unit_ball(2);
            auto pairs = sample_interior_pairs(disc, ex_pairs, ex_flags.seed, 0.15, 0.2);
            report = (ex_name == "sum")
                         ? run_weighted_sum_check(disc, pairs, Weight(ex_t), opts)
                         : run_weighted_max_check(disc, pairs, Weight(ex_t), opts);
        }
        emit(ex_out, [&](std::ostream& os) { os << to_json(report, ex_timing).dump() << '\n'; });
        if (!report.passed) exit_code = 1;
    });

    // ---- triangle ------------------------------------------------------
    auto* tri = app.add_subcommand("triangle", "triangle-space metric utilities");
    std::string tri_op, tri_x, tri_y, tri_kind = "arith", tri_out;
    double tri_t = 0.0, tri_lam = 1.0, tri_lam2 = 1.0;
    int tri_samples = 10000;
    std::uint64_t tri_seed = 0;
    tri->add_option("--op", tri_op, "eta|area|normalize|scaling|family|witness")
        ->required()
        ->check(CLI::IsMember({"eta", "area", "normalize", "scaling", "family", "witness"}));
    tri->add_option("--x", tri_x, "first triangle A-coordinates a,b,c");
    tri->add_option("--y", tri_y, "second triangle A-coordinates");
    tri->add_option("--t", tri_t, "weight in [0,1]")->check(CLI::Range(0.0, 1.0));
    tri->add_option("--kind", tri_kind, "family kind")->check(CLI::IsMember({"arith", "max"}));
    tri->add_option("--lam", tri_lam, "first scaling factor")->check(CLI::PositiveNumber);
    tri->add_option("--lam2", tri_lam2, "second scaling factor")->check(CLI::PositiveNumber);
    tri->add_option("--samples", tri_samples, "witness search budget")->check(CLI::Range(1, 100000000));
    tri->add_option("--seed", tri_seed, "random seed");
    tri->add_option("--out", tri_out, "output file (JSON)");
    tri->callback([&] {
        const FamilyKind kind = (tri_kind == "arith") ? FamilyKind::arith : FamilyKind::max;
        nlohmann::json j;
        if (tri_op == "witness") {
            const auto witness = asymmetry_witness(Weight(tri_t), kind, tri_samples, tri_seed);
            j = witness ? to_json(*witness, tri_t, kind) : nlohmann::json(nullptr);
        } else if (tri_op == "area") {
            j = nlohmann::json{{"area", heron_area(parse_triangle(tri_x))}};
        } else if (tri_op == "normalize") {
            const UnitAreaTriangle u = normalize_unit_area(parse_triangle(tri_x));
            j = nlohmann::json{{"A", {u.coords.a1, u.coords.a2, u.coords.a3}}};
        } else if (tri_op == "scaling") {
            j = nlohmann::json{{"residual", eta_scaling_residual(parse_triangle(tri_x),
                                                                 parse_triangle(tri_y), tri_lam,
                                                                 tri_lam2)}};
        } else {
            const TriangleA x = parse_triangle(tri_x);
            const TriangleA y = parse_triangle(tri_y);
            if (tri_op == "eta") {
                j = nlohmann::json{{"value", eta(x, y)}};
            } else {
                const WeakMetric metric = eta_family(kind, Weight(tri_t));
                j = nlohmann::json{{"value", metric(vec3(x.a1, x.a2, x.a3), vec3(y.a1, y.a2, y.a3))}};
            }
        }
        emit(tri_out, [&](std::ostream& os) { os << j.dump() << '\n'; });
    });

    // ---- report --------------------------------------------------------
    auto* report_cmd = app.add_subcommand("report", "run the experiment battery, emit a CSV summary");
    std::string report_out;
    std::uint64_t report_seed = 0;
    report_cmd->add_option("--out", report_out, "summary CSV file (stdout if omitted)");
    report_cmd->add_option("--seed", report_seed, "random seed");
    report_cmd->callback([&] {
        const auto reports = run_standard_battery(report_seed);
        emit(report_out, [&](std::ostream& os) { write_reports_csv(os, reports); });
        for (const auto& r : reports)
            if (!r.passed) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Prints help text or the one-line diagnostic; usage errors exit 2.
        return app.exit(e) == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
