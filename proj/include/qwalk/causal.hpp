#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qwalk/walker.hpp"

namespace qwalk {

enum class CausalOrder { forward, reverse, explicit_permutation };

/// k-period walk plan. The step sequence is the k-step block repeated
/// cyclically and truncated to `steps`, so the t-step walk is a prefix of
/// the N-step walk.
///
/// Blocks (first-applied first):
///   k = 1              [t1]
///   k = 2   forward    [t2, t1]   i.e. (SC1 SC2)^(N/2) with SC2 acting first
///   k = 2   reverse    [t1, t2]
///   k >= 3  forward    [t1, t2, ..., tk]
///   k >= 3  reverse    [tk, ..., t2, t1]
///   explicit           [t_p1, ..., t_pk] for a permutation p of 1..k
struct PeriodicWalkSpec {
    std::vector<double> thetas;
    std::size_t steps = 0;
    CausalOrder order = CausalOrder::forward;
    std::vector<int> permutation;  // 1-based, only for explicit_permutation

    std::size_t period() const { return thetas.size(); }
    PeriodicWalkSpec reversed() const;
};

/// The block of coin angles applied once per period, first-applied first.
std::vector<double> period_block(const PeriodicWalkSpec& spec);
std::vector<CoinSpec> periodic_sequence(const PeriodicWalkSpec& spec);

struct SwitchSpec {
    double theta_s = kPi / 4;
    std::array<Complex, 2> postselect{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
};

/// Switch qubit x coin x lattice; layout switch * 2L + coin * L + site.
class SwitchedState {
public:
    explicit SwitchedState(std::size_t lattice) : lattice_(lattice), amps_(4 * lattice) {}

    std::size_t lattice() const { return lattice_; }
    std::span<const Complex> branch(int s) const { return {amps_.data() + s * 2 * lattice_, 2 * lattice_}; }
    std::span<Complex> branch(int s) { return {amps_.data() + s * 2 * lattice_, 2 * lattice_}; }
    double norm_squared() const { return kernels::norm_squared(amps_); }

private:
    std::size_t lattice_;
    std::vector<Complex> amps_;
};

struct Trajectory {
    std::vector<WalkerState> states;   // each of unit norm
    std::vector<double> raw_norms;     // norm before renormalization
    std::vector<std::size_t> steps;    // step count of each snapshot
};

struct UnnormalizedState {
    WalkerState state;
    double norm;
};

struct Projection {
    WalkerState state;   // renormalized
    double probability;  // norm^2 before renormalization
};

struct EvolveOptions {
    // Permit lattices smaller than 2N+3 (the wavefront then wraps around).
    bool allow_wrap = false;
};

// Anything below this is treated as complete destructive interference.
inline constexpr double kVanishingNorm = 1e-14;

void require_light_cone(std::size_t lattice, std::size_t steps, const EvolveOptions& opts = {});

WalkerState evolve_steps(const WalkerState& initial, const std::vector<CoinSpec>& steps);
Trajectory evolve_definite(const WalkerState& initial, const PeriodicWalkSpec& spec, const EvolveOptions& opts = {});

SwitchedState switch_extended_evolve(const WalkerState& initial, const PeriodicWalkSpec& spec_a,
                                     const PeriodicWalkSpec& spec_b, const SwitchSpec& sw,
                                     const EvolveOptions& opts = {});
Projection project_switch(const SwitchedState& sw_state, const std::array<Complex, 2>& outcome);

/// (cos ts U1 + sin ts U2)|psi0>, unnormalized.
UnnormalizedState effective_activation_apply(const WalkerState& initial, const PeriodicWalkSpec& spec_a,
                                             const PeriodicWalkSpec& spec_b, double theta_s,
                                             const EvolveOptions& opts = {});
/// Causal activation at every step t = 0..N (normalized snapshots).
Trajectory activation_trajectory(const WalkerState& initial, const PeriodicWalkSpec& spec_a,
                                 const PeriodicWalkSpec& spec_b, double theta_s, const EvolveOptions& opts = {});

/// Applies A = cos ts SC1 SC2 + sin ts SC2 SC1 N/2 times. Snapshots at
/// t = 0, 2, ..., N.
Trajectory switched_step_evolve(const WalkerState& initial, double theta1, double theta2, double theta_s,
                                std::size_t steps, const EvolveOptions& opts = {});

/// (1/sqrt(k!)) sum over the k! orderings of the block, repeated N/k times.
UnnormalizedState full_activation_apply(const WalkerState& initial, const std::vector<double>& thetas,
                                        std::size_t steps, const EvolveOptions& opts = {});
/// Full activation at every t; orderings are truncated cyclically when k does
/// not divide t.
Trajectory full_activation_trajectory(const WalkerState& initial, const std::vector<double>& thetas,
                                      std::size_t steps, const EvolveOptions& opts = {});

inline constexpr std::size_t kMaxFullActivationPeriod = 5;

// Dense realizations built by evolving every basis vector through the engine.
DenseOperator realize_operator(const std::vector<CoinSpec>& steps, std::size_t lattice);
DenseOperator expand_switched_step(double theta1, double theta2, double theta_s, std::size_t steps,
                                   std::size_t lattice);
DenseOperator binomial_commuting_expand(double theta1, double theta_s, int n, std::size_t steps,
                                        std::size_t lattice);

inline constexpr std::size_t kMaxExpansionSteps = 12;
inline constexpr std::size_t kMaxExpansionLattice = 31;

} // namespace qwalk
