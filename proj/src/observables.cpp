#include "qwalk/observables.hpp"

#include <cmath>
#include <string>

namespace qwalk {

double spread(const std::vector<PositionProbability>& dist) {
    double total = 0.0, mean = 0.0, second = 0.0;
    for (const auto& [x, p] : dist) {
        total += p;
        mean += p * static_cast<double>(x);
        second += p * static_cast<double>(x) * static_cast<double>(x);
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw NormalizationError("distribution sums to " + std::to_string(total) + ", expected 1");
    return std::sqrt(std::max(0.0, second - mean * mean));
}

double trace_distance(const CoinDensityMatrix& rho1, const CoinDensityMatrix& rho2) {
    rho1.validate();
    rho2.validate();
    CoinDensityMatrix diff;
    for (int i = 0; i < 4; ++i) diff.m[i] = rho1.m[i] - rho2.m[i];
    const auto ev = diff.eigenvalues();
    return 0.5 * (std::abs(ev[0]) + std::abs(ev[1]));
}

std::vector<CoinDensityMatrix> coin_trajectory(const Trajectory& traj) {
    std::vector<CoinDensityMatrix> out;
    out.reserve(traj.states.size());
    for (const auto& s : traj.states) out.push_back(partial_trace_position(s));
    return out;
}

BLPResult blp_measure(const std::vector<double>& series) {
    if (series.size() < 2) throw PreconditionError("BLP measure needs at least two trace-distance samples");
    BLPResult r;
    bool open = false;
    for (std::size_t t = 1; t < series.size(); ++t) {
        const double gain = series[t] - series[t - 1];
        if (gain > 0.0) {
            r.value += gain;
            if (open)
                r.revivals.back().end = t;
            else
                r.revivals.push_back({t - 1, t});
            open = true;
        } else {
            open = false;
        }
    }
    return r;
}

double entanglement_entropy(const CoinDensityMatrix& rho) {
    double s = 0.0;
    for (double l : rho.eigenvalues())
        if (l > 0.0) s -= l * std::log2(l);
    return s;
}

double concurrence(const CoinDensityMatrix& rho) { return std::sqrt(std::max(0.0, 2.0 * (1.0 - rho.purity()))); }

} // namespace qwalk
