#pragma once

#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "finsler/experiments.hpp"
#include "finsler/geodesic.hpp"
#include "finsler/triangle_space.hpp"
#include "finsler/weak_metric.hpp"

namespace finsler {

// JSON shapes are part of the CLI contract; see the README for the schemas.
// Reports omit runtimes unless asked so identical runs emit identical bytes.

nlohmann::json to_json(const ProbeReport& report);
nlohmann::json to_json(const GeodesicResult& result);
nlohmann::json to_json(const ExperimentReport& report, bool include_runtime = false);
nlohmann::json to_json(const AsymmetryWitness& witness, double t, FamilyKind kind);

// One node per row, coordinates comma-separated.
void write_path_csv(std::ostream& out, const PolylinePath& path);

// Flat summary: name,residual,tolerance,passed,runtime.
void write_reports_csv(std::ostream& out, const std::vector<ExperimentReport>& reports);

}  // namespace finsler
