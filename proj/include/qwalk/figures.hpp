#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/experiment.hpp"

namespace qwalk {

/// Forward / reverse / causally-activated values of one scalar series.
struct ModeSeries {
    std::vector<long long> t;
    std::vector<double> forward, reverse, ico;
};

enum class Series { spread, trace_distance, entropy, concurrence };

/// Evaluates `series` for the forward and reverse orders and for causal
/// activation with the config's theta_s. Uses config.alpha/beta except for
/// trace_distance, which always compares the |+> and |-> starts.
ModeSeries compare_modes(const ExperimentConfig& config, Series series);

struct BLPByPeriod {
    std::vector<std::size_t> period;
    std::vector<double> forward, reverse, ico;
};

/// BLP for k = k_min..k_max with theta_1 = first and theta_i = pi/4 for
/// i > 1 (runs one period per OpenMP task).
BLPByPeriod blp_versus_period(std::string_view first_theta, std::size_t steps, std::size_t k_min, std::size_t k_max);

std::vector<std::string> figure_names();

/// Tables for one named figure (fig1 .. fig9). Throws ConfigError for an
/// unknown name.
std::vector<ResultTable> figure_tables(std::string_view name);

/// Writes one CSV per panel into outdir; returns the written paths.
std::vector<std::filesystem::path> figure_suite(std::string_view name, const std::filesystem::path& outdir);

} // namespace qwalk
