#include "qwalk/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qwalk/causal.hpp"
#include "qwalk/commutator.hpp"
#include "qwalk/oracle.hpp"

namespace qwalk {

namespace {

double state_diff(const WalkerState& a, const WalkerState& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) d = std::max(d, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    return d;
}

double fidelity(const WalkerState& a, const WalkerState& b) {
    Complex overlap{};
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return std::norm(overlap) / (a.norm_squared() * b.norm_squared());
}

} // namespace

VerifyReport verify_lemma(double tol, std::size_t lattice) {
    VerifyReport r;
    r.name = "lemma";
    const double theta1 = 0.3;
    bool iff = true;
    for (int m = 0; m <= 24; ++m) {
        const double theta2 = theta1 + m * kPi / 12;
        const auto pair = commutator_single_param(theta1, theta2, lattice);
        const double size = max_abs(pair.computed);
        const bool commuting = m % 12 == 0;
        if (commuting ? !(size < 1e-12) : !(size > 0.01)) iff = false;
        r.worst = std::max(r.worst, max_abs(pair.computed - pair.predicted));
    }
    r.pass = iff && r.worst < tol;
    std::ostringstream os;
    os << "commutes exactly at multiples of pi: " << (iff ? "yes" : "no") << ", closed-form residual " << r.worst;
    r.detail = os.str();
    return r;
}

VerifyReport verify_expansion(double tol, int draws, std::uint64_t seed) {
    VerifyReport r;
    r.name = "expansion";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    std::uniform_int_distribution<int> shift(-2, 2);
    double worst_expand = 0.0, worst_binomial = 0.0;
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        const std::size_t L = 2 * n + 3;
        for (int d = 0; d < draws; ++d) {
            const double t1 = angle(rng), t2 = angle(rng), ts = angle(rng);
            if (std::abs(std::sin(t2 - t1)) > 1e-6) {
                const auto direct = oracle::direct_switched_step_operator(t1, t2, ts, n, L);
                worst_expand = std::max(worst_expand,
                                        oracle::verify_identity(direct, expand_switched_step(t1, t2, ts, n, L), tol).max_abs_diff);
            }
            int k = shift(rng);
            if (k == 0) k = 1;
            const auto direct_c = oracle::direct_switched_step_operator(t1, t1 + k * kPi, ts, n, L);
            worst_binomial = std::max(
                worst_binomial, oracle::verify_identity(direct_c, binomial_commuting_expand(t1, ts, k, n, L), tol).max_abs_diff);
        }
    }
    r.worst = std::max(worst_expand, worst_binomial);
    r.pass = r.worst < tol;
    std::ostringstream os;
    os << "subset expansion residual " << worst_expand << ", binomial residual " << worst_binomial;
    r.detail = os.str();
    return r;
}

VerifyReport verify_switch(double tol, int draws, std::uint64_t seed) {
    VerifyReport r;
    r.name = "switch";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_int_distribution<int> steps(1, 20);
    const double h = 1.0 / std::sqrt(2.0);
    double worst_infidelity = 0.0, worst_reduction = 0.0;
    for (int d = 0; d < draws; ++d) {
        const double t1 = angle(rng), t2 = angle(rng), ts = angle(rng);
        const std::size_t n = static_cast<std::size_t>(steps(rng));
        const std::size_t L = 2 * n + 3;
        const WalkerState psi0 = make_localized_state(h, h, 0, L);
        const PeriodicWalkSpec a{{t1, t2}, n, CausalOrder::forward, {}};
        const PeriodicWalkSpec b = a.reversed();
        const Projection proj = project_switch(switch_extended_evolve(psi0, a, b, SwitchSpec{ts}), {h, h});
        const UnnormalizedState eff = effective_activation_apply(psi0, a, b, ts);
        worst_infidelity = std::max(worst_infidelity, 1.0 - fidelity(proj.state, eff.state));

        const auto fwd = evolve_definite(psi0, a).states.back();
        const auto rev = evolve_definite(psi0, b).states.back();
        const auto at0 = project_switch(switch_extended_evolve(psi0, a, b, SwitchSpec{0.0}), {1.0, 0.0});
        const auto at90 = project_switch(switch_extended_evolve(psi0, a, b, SwitchSpec{kPi / 2}), {0.0, 1.0});
        worst_reduction = std::max({worst_reduction, state_diff(at0.state, fwd), state_diff(at90.state, rev),
                                    state_diff(effective_activation_apply(psi0, a, b, 0.0).state, fwd),
                                    state_diff(effective_activation_apply(psi0, a, b, kPi / 2).state, rev)});
    }
    r.worst = std::max(worst_infidelity, worst_reduction);
    r.pass = worst_infidelity < tol && worst_reduction < 1e-12;
    std::ostringstream os;
    os << "max infidelity " << worst_infidelity << ", theta_s in {0, pi/2} residual " << worst_reduction;
    r.detail = os.str();
    return r;
}

} // namespace qwalk
