#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qwalk/causal.hpp"
#include "qwalk/walker.hpp"

namespace qwalk {

/// Standard deviation of the position distribution (lattice units).
/// Throws NormalizationError unless the probabilities sum to 1 within 1e-10.
double spread(const std::vector<PositionProbability>& dist);

/// D = 1/2 ||rho1 - rho2||_1
double trace_distance(const CoinDensityMatrix& rho1, const CoinDensityMatrix& rho2);

std::vector<CoinDensityMatrix> coin_trajectory(const Trajectory& traj);

struct RevivalInterval {
    std::size_t start;
    std::size_t end;
};

struct BLPResult {
    double value = 0.0;
    std::vector<RevivalInterval> revivals;
};

/// Discrete BLP measure: sum over t of max(0, D(t) - D(t-1)). Consecutive
/// increasing steps merge into one revival interval (index space).
BLPResult blp_measure(const std::vector<double>& series);

/// von Neumann entropy of the reduced coin, base 2.
double entanglement_entropy(const CoinDensityMatrix& rho);

/// Coin-position concurrence of a pure joint state, sqrt(2 (1 - Tr rho_c^2)).
double concurrence(const CoinDensityMatrix& rho);

} // namespace qwalk
