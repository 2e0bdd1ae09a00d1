#include "finsler/serialize.hpp"

#include <algorithm>
#include <ostream>

namespace finsler {

namespace {

nlohmann::json vec_to_json(const Vec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

nlohmann::json triangle_to_json(const UnitAreaTriangle& t) {
    return nlohmann::json::array({t.coords.a1, t.coords.a2, t.coords.a3});
}

}  // namespace

nlohmann::json to_json(const ProbeReport& report) {
    nlohmann::json j;
    j["probe"] = report.probe;
    j["samples"] = report.samples;
    j["max_residual"] = report.max_residual;
    if (report.witness) {
        nlohmann::json w;
        w["inputs"] = nlohmann::json::array();
        for (const Vec& v : report.witness->inputs) w["inputs"].push_back(vec_to_json(v));
        w["values"] = report.witness->values;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["passed"] = report.passed;
    return j;
}

nlohmann::json to_json(const GeodesicResult& result) {
    nlohmann::json j;
    j["length"] = result.length;
    j["converged"] = result.converged;
    j["iterations"] = result.iterations;
    j["nodes"] = nlohmann::json::array();
    for (const Vec& node : result.path.nodes) j["nodes"].push_back(vec_to_json(node));
    j["history"] = nlohmann::json::array();
    for (const auto& [n, len] : result.history)
        j["history"].push_back(nlohmann::json::array({n, len}));
    return j;
}

nlohmann::json to_json(const ExperimentReport& report, bool include_runtime) {
    nlohmann::json j;
    j["name"] = report.name;
    j["quantities"] = report.quantities;
    j["expected"] = nlohmann::json::object();
    for (const auto& [key, ev] : report.expected)
        j["expected"][key] = {{"value", ev.value}, {"provenance", ev.provenance}};
    j["residuals"] = report.residuals;
    j["tolerance"] = report.tolerance;
    j["passed"] = report.passed;
    if (include_runtime) j["runtime_seconds"] = report.runtime_seconds;
    return j;
}

nlohmann::json to_json(const AsymmetryWitness& witness, double t, FamilyKind kind) {
    nlohmann::json j;
    j["t"] = t;
    j["kind"] = (kind == FamilyKind::arith) ? "arith" : "max";
    j["X"] = triangle_to_json(witness.x);
    j["Y"] = triangle_to_json(witness.y);
    j["forward"] = witness.forward;
    j["backward"] = witness.backward;
    j["gap"] = witness.gap;
    return j;
}

void write_path_csv(std::ostream& out, const PolylinePath& path) {
    for (const Vec& node : path.nodes) {
        for (int i = 0; i < node.size(); ++i) {
            if (i) out << ',';
            out << nlohmann::json(node[i]).dump();
        }
        out << '\n';
    }
}

void write_reports_csv(std::ostream& out, const std::vector<ExperimentReport>& reports) {
    out << "name,residual,tolerance,passed,runtime\n";
    for (const auto& report : reports) {
        double worst = 0.0;
        for (const auto& [key, value] : report.residuals) worst = std::max(worst, value);
        out << report.name << ',' << nlohmann::json(worst).dump() << ','
            << nlohmann::json(report.tolerance).dump() << ','
            << (report.passed ? "true" : "false") << ','
            << nlohmann::json(report.runtime_seconds).dump() << '\n';
    }
}

}  // namespace finsler
