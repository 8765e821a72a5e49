#include "qwalk/causal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace qwalk {

namespace {

void check_permutation(const std::vector<int>& perm, std::size_t k) {
    if (perm.size() != k) throw SpecError("permutation length " + std::to_string(perm.size()) + " != period " + std::to_string(k));
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < k; ++i)
        if (sorted[i] != static_cast<int>(i + 1)) throw SpecError("order is not a permutation of 1..k");
}

std::vector<CoinSpec> cyclic_sequence(const std::vector<double>& block, std::size_t steps) {
    std::vector<CoinSpec> seq;
    seq.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) seq.push_back(single_coin(block[i % block.size()]));
    return seq;
}

void check_same_length(const PeriodicWalkSpec& a, const PeriodicWalkSpec& b) {
    if (a.steps != b.steps)
        throw SpecError("switched specs need the same step count, got " + std::to_string(a.steps) + " and " +
                        std::to_string(b.steps));
}

double binomial(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

void check_expansion_budget(std::size_t steps, std::size_t lattice) {
    if (steps % 2 != 0) throw PreconditionError("switched-step walks need an even step count");
    if (steps > kMaxExpansionSteps || lattice > kMaxExpansionLattice)
        throw BudgetError("dense expansion limited to N <= " + std::to_string(kMaxExpansionSteps) + ", L <= " +
                          std::to_string(kMaxExpansionLattice));
}

} // namespace

PeriodicWalkSpec PeriodicWalkSpec::reversed() const {
    PeriodicWalkSpec r = *this;
    switch (order) {
    case CausalOrder::forward: r.order = CausalOrder::reverse; break;
    case CausalOrder::reverse: r.order = CausalOrder::forward; break;
    case CausalOrder::explicit_permutation: std::reverse(r.permutation.begin(), r.permutation.end()); break;
    }
    return r;
}

std::vector<double> period_block(const PeriodicWalkSpec& spec) {
    const std::size_t k = spec.period();
    if (k == 0) throw SpecError("period k must be positive (empty theta list)");
    std::vector<double> block = spec.thetas;
    switch (spec.order) {
    case CausalOrder::forward:
        if (k == 2) std::reverse(block.begin(), block.end());
        break;
    case CausalOrder::reverse:
        if (k != 2) std::reverse(block.begin(), block.end());
        break;
    case CausalOrder::explicit_permutation:
        check_permutation(spec.permutation, k);
        for (std::size_t i = 0; i < k; ++i) block[i] = spec.thetas[spec.permutation[i] - 1];
        break;
    }
    return block;
}

std::vector<CoinSpec> periodic_sequence(const PeriodicWalkSpec& spec) {
    return cyclic_sequence(period_block(spec), spec.steps);
}

void require_light_cone(std::size_t lattice, std::size_t steps, const EvolveOptions& opts) {
    if (!opts.allow_wrap && lattice < 2 * steps + 3)
        throw LightConeError("lattice of " + std::to_string(lattice) + " sites is too small for " +
                             std::to_string(steps) + " steps (need L >= 2N+3)");
}

WalkerState evolve_steps(const WalkerState& initial, const std::vector<CoinSpec>& steps) {
    WalkerState cur = initial;
    WalkerState next(initial.lattice());
    for (const auto& coin : steps) {
        kernels::coin_shift(cur.amplitudes(), next.amplitudes(), cur.lattice(), coin_entries(coin));
        std::swap(cur, next);
    }
    return cur;
}

Trajectory evolve_definite(const WalkerState& initial, const PeriodicWalkSpec& spec, const EvolveOptions& opts) {
    require_light_cone(initial.lattice(), spec.steps, opts);
    const auto seq = periodic_sequence(spec);
    Trajectory traj;
    traj.states.reserve(seq.size() + 1);
    traj.states.push_back(initial);
    traj.raw_norms.push_back(initial.norm());
    traj.steps.push_back(0);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        traj.states.push_back(walk_step(traj.states.back(), seq[t]));
        traj.raw_norms.push_back(traj.states.back().norm());
        traj.steps.push_back(t + 1);
    }
    return traj;
}

SwitchedState switch_extended_evolve(const WalkerState& initial, const PeriodicWalkSpec& spec_a,
                                     const PeriodicWalkSpec& spec_b, const SwitchSpec& sw,
                                     const EvolveOptions& opts) {
    check_same_length(spec_a, spec_b);
    require_light_cone(initial.lattice(), spec_a.steps, opts);
    const std::size_t L = initial.lattice();
    const auto seq_a = periodic_sequence(spec_a);
    const auto seq_b = periodic_sequence(spec_b);

    SwitchedState state(L), scratch(L);
    const double c = std::cos(sw.theta_s);
    const double s = std::sin(sw.theta_s);
    const auto psi = initial.amplitudes();
    for (std::size_t i = 0; i < 2 * L; ++i) {
        state.branch(0)[i] = c * psi[i];
        state.branch(1)[i] = s * psi[i];
    }
    // Controlled step |0><0| x SC_a + |1><1| x SC_b, coin and shift as
    // separate passes.
    for (std::size_t t = 0; t < seq_a.size(); ++t) {
        kernels::apply_coin(state.branch(0), scratch.branch(0), L, coin_entries(seq_a[t]));
        kernels::apply_coin(state.branch(1), scratch.branch(1), L, coin_entries(seq_b[t]));
        kernels::apply_shift(scratch.branch(0), state.branch(0), L);
        kernels::apply_shift(scratch.branch(1), state.branch(1), L);
    }
    return state;
}

Projection project_switch(const SwitchedState& sw_state, const std::array<Complex, 2>& outcome) {
    const double on = std::norm(outcome[0]) + std::norm(outcome[1]);
    if (std::abs(on - 1.0) > 1e-12) throw NormalizationError("post-selection vector is not normalized");
    const std::size_t L = sw_state.lattice();
    std::vector<Complex> amps(2 * L);
    kernels::axpby(std::conj(outcome[0]), sw_state.branch(0), std::conj(outcome[1]), sw_state.branch(1), amps);
    WalkerState w(L, std::move(amps));
    const double p = w.norm_squared();
    if (!(p > kVanishingNorm * kVanishingNorm))
        throw DegeneratePostselectionError("post-selected switch outcome has zero probability");
    return {w.scaled(1.0 / std::sqrt(p)), p};
}

UnnormalizedState effective_activation_apply(const WalkerState& initial, const PeriodicWalkSpec& spec_a,
                                             const PeriodicWalkSpec& spec_b, double theta_s,
                                             const EvolveOptions& opts) {
    check_same_length(spec_a, spec_b);
    require_light_cone(initial.lattice(), spec_a.steps, opts);
    const WalkerState u1 = evolve_steps(initial, periodic_sequence(spec_a));
    const WalkerState u2 = evolve_steps(initial, periodic_sequence(spec_b));
    WalkerState out(initial.lattice());
    kernels::axpby(std::cos(theta_s), u1.amplitudes(), std::sin(theta_s), u2.amplitudes(), out.amplitudes());
    const double n = out.norm();
    if (!(n >= kVanishingNorm)) throw DestructiveInterferenceError("causal activation cancels the walker state");
    return {std::move(out), n};
}

Trajectory activation_trajectory(const WalkerState& initial, const PeriodicWalkSpec& spec_a,
                                 const PeriodicWalkSpec& spec_b, double theta_s, const EvolveOptions& opts) {
    check_same_length(spec_a, spec_b);
    const Trajectory ta = evolve_definite(initial, spec_a, opts);
    const Trajectory tb = evolve_definite(initial, spec_b, opts);
    const double c = std::cos(theta_s);
    const double s = std::sin(theta_s);
    Trajectory traj;
    for (std::size_t t = 0; t < ta.states.size(); ++t) {
        WalkerState sum(initial.lattice());
        kernels::axpby(c, ta.states[t].amplitudes(), s, tb.states[t].amplitudes(), sum.amplitudes());
        const double n = sum.norm();
        if (!(n >= kVanishingNorm))
            throw DestructiveInterferenceError("causal activation cancels the walker state at step " + std::to_string(t));
        traj.states.push_back(sum.scaled(1.0 / n));
        traj.raw_norms.push_back(n);
        traj.steps.push_back(t);
    }
    return traj;
}

Trajectory switched_step_evolve(const WalkerState& initial, double theta1, double theta2, double theta_s,
                                std::size_t steps, const EvolveOptions& opts) {
    if (steps % 2 != 0) throw PreconditionError("switched-step evolution requires an even step count, got " + std::to_string(steps));
    require_light_cone(initial.lattice(), steps, opts);
    const double c = std::cos(theta_s);
    const double s = std::sin(theta_s);
    const CoinSpec c1 = single_coin(theta1);
    const CoinSpec c2 = single_coin(theta2);

    Trajectory traj;
    traj.states.push_back(initial);
    traj.raw_norms.push_back(initial.norm());
    traj.steps.push_back(0);
    WalkerState raw = initial;
    for (std::size_t b = 0; b < steps / 2; ++b) {
        // SC1 SC2 acts SC2 first
        const WalkerState fwd = walk_step(walk_step(raw, c2), c1);
        const WalkerState rev = walk_step(walk_step(raw, c1), c2);
        kernels::axpby(c, fwd.amplitudes(), s, rev.amplitudes(), raw.amplitudes());
        const double n = raw.norm();
        if (!(n >= kVanishingNorm))
            throw DestructiveInterferenceError("switched-step operator annihilates the state at step " +
                                               std::to_string(2 * b + 2));
        traj.states.push_back(raw.scaled(1.0 / n));
        traj.raw_norms.push_back(n);
        traj.steps.push_back(2 * b + 2);
    }
    return traj;
}

namespace {

double factorial(std::size_t k) {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

void check_full_activation_period(std::size_t k) {
    if (k == 0) throw SpecError("full activation needs at least one coin angle");
    if (k > kMaxFullActivationPeriod)
        throw BudgetError("full activation is limited to k <= " + std::to_string(kMaxFullActivationPeriod) +
                          " (k! orderings)");
}

} // namespace

UnnormalizedState full_activation_apply(const WalkerState& initial, const std::vector<double>& thetas,
                                        std::size_t steps, const EvolveOptions& opts) {
    const std::size_t k = thetas.size();
    check_full_activation_period(k);
    if (steps % k != 0)
        throw PreconditionError("full activation needs N to be a multiple of k = " + std::to_string(k));
    require_light_cone(initial.lattice(), steps, opts);

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Complex> acc(2 * initial.lattice());
    do {
        std::vector<double> block(k);
        for (std::size_t i = 0; i < k; ++i) block[i] = thetas[perm[i]];
        const WalkerState term = evolve_steps(initial, cyclic_sequence(block, steps));
        const auto a = term.amplitudes();
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a[i];
    } while (std::next_permutation(perm.begin(), perm.end()));

    const double scale = 1.0 / std::sqrt(factorial(k));
    for (auto& a : acc) a *= scale;
    WalkerState out(initial.lattice(), std::move(acc));
    const double n = out.norm();
    if (!(n >= kVanishingNorm)) throw DestructiveInterferenceError("full causal activation cancels the walker state");
    return {std::move(out), n};
}

Trajectory full_activation_trajectory(const WalkerState& initial, const std::vector<double>& thetas,
                                      std::size_t steps, const EvolveOptions& opts) {
    const std::size_t k = thetas.size();
    check_full_activation_period(k);
    require_light_cone(initial.lattice(), steps, opts);
    const std::size_t L = initial.lattice();

    std::vector<std::vector<Complex>> acc(steps + 1, std::vector<Complex>(2 * L));
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<double> block(k);
        for (std::size_t i = 0; i < k; ++i) block[i] = thetas[perm[i]];
        WalkerState cur = initial;
        for (std::size_t t = 0; t <= steps; ++t) {
            if (t > 0) cur = walk_step(cur, single_coin(block[(t - 1) % k]));
            const auto a = cur.amplitudes();
            for (std::size_t i = 0; i < 2 * L; ++i) acc[t][i] += a[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    const double scale = 1.0 / std::sqrt(factorial(k));
    Trajectory traj;
    for (std::size_t t = 0; t <= steps; ++t) {
        for (auto& a : acc[t]) a *= scale;
        WalkerState w(L, std::move(acc[t]));
        const double n = w.norm();
        if (!(n >= kVanishingNorm))
            throw DestructiveInterferenceError("full causal activation cancels the walker state at step " + std::to_string(t));
        traj.states.push_back(w.scaled(1.0 / n));
        traj.raw_norms.push_back(n);
        traj.steps.push_back(t);
    }
    return traj;
}

DenseOperator realize_operator(const std::vector<CoinSpec>& steps, std::size_t lattice) {
    const std::size_t dim = 2 * lattice;
    DenseOperator op(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> basis(dim);
        basis[col] = 1.0;
        const WalkerState out = evolve_steps(WalkerState(lattice, std::move(basis)), steps);
        const auto a = out.amplitudes();
        for (std::size_t row = 0; row < dim; ++row) op(row, col) = a[row];
    }
    return op;
}

DenseOperator expand_switched_step(double theta1, double theta2, double theta_s, std::size_t steps,
                                   std::size_t lattice) {
    check_expansion_budget(steps, lattice);
    if (std::abs(std::sin(theta2 - theta1)) < 1e-12)
        throw RegimeError("theta2 - theta1 is a multiple of pi; the steps commute, use binomial_commuting_expand");
    const std::size_t blocks = steps / 2;
    const DenseOperator u1 = realize_operator({single_coin(theta2), single_coin(theta1)}, lattice);
    const DenseOperator u2 = realize_operator({single_coin(theta1), single_coin(theta2)}, lattice);
    const double c = std::cos(theta_s);
    const double s = std::sin(theta_s);
    const std::size_t dim = 2 * lattice;

    DenseOperator total = DenseOperator::Zero(dim, dim);
    for (std::size_t mask = 0; mask < (std::size_t{1} << blocks); ++mask) {
        const int j = std::popcount(mask);
        DenseOperator term = DenseOperator::Identity(dim, dim);
        for (std::size_t slot = 0; slot < blocks; ++slot) term = ((mask >> slot) & 1U ? u2 : u1) * term;
        total += std::pow(c, static_cast<double>(blocks - j)) * std::pow(s, j) * term;
    }
    return total;
}

DenseOperator binomial_commuting_expand(double theta1, double theta_s, int n, std::size_t steps,
                                        std::size_t lattice) {
    check_expansion_budget(steps, lattice);
    const double theta2 = theta1 + n * kPi;
    const std::size_t blocks = steps / 2;
    const DenseOperator u1 = realize_operator({single_coin(theta2), single_coin(theta1)}, lattice);
    const DenseOperator u2 = realize_operator({single_coin(theta1), single_coin(theta2)}, lattice);
    const double c = std::cos(theta_s);
    const double s = std::sin(theta_s);
    const std::size_t dim = 2 * lattice;

    std::vector<DenseOperator> pow1{DenseOperator::Identity(dim, dim)}, pow2{DenseOperator::Identity(dim, dim)};
    for (std::size_t i = 1; i <= blocks; ++i) {
        pow1.push_back(u1 * pow1.back());
        pow2.push_back(u2 * pow2.back());
    }
    DenseOperator total = DenseOperator::Zero(dim, dim);
    for (std::size_t j = 0; j <= blocks; ++j)
        total += binomial(blocks, j) * std::pow(c, static_cast<double>(blocks - j)) * std::pow(s, static_cast<double>(j)) *
                 (pow1[blocks - j] * pow2[j]);
    return total;
}

} // namespace qwalk
