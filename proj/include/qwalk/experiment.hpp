#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qwalk/causal.hpp"
#include "qwalk/config.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {

using Cell = std::variant<long long, double, std::string>;

/// Tidy table of observables plus the metadata needed to re-run it.
struct ResultTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::string config_text;                                  // format_config output, may be empty
    std::vector<std::pair<std::string, std::string>> notes;  // conventions and parameters in force

    void add_row(std::vector<Cell> row);
};

/// RFC 4180 CSV, metadata as leading '#' lines, doubles in shortest
/// round-trip form.
std::string emit_csv(const ResultTable& table);

/// Writes next to the target and renames into place.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// Trajectory of the configured mode from initial coin (alpha, beta) at x=0.
Trajectory mode_trajectory(const ExperimentConfig& config, Mode mode, Complex alpha, Complex beta);

/// D(t) between the |+> and |-> coin starts for the given mode.
std::vector<double> trace_distance_series(const ExperimentConfig& config, Mode mode);

std::vector<double> spread_series(const Trajectory& traj);
std::vector<double> entropy_series(const Trajectory& traj);
std::vector<double> concurrence_series(const Trajectory& traj);

/// One table per requested observable; deterministic.
std::vector<ResultTable> run_experiment(const ExperimentConfig& config);

/// Conventions echoed into every table.
std::vector<std::pair<std::string, std::string>> convention_notes();

std::string engine_version();

} // namespace qwalk
