#pragma once

#include <cstdint>
#include <string>

namespace qwalk {

/// Outcome of one identity sweep: the worst deviation seen and whether the
/// sweep passed at the requested tolerance.
struct VerifyReport {
    std::string name;
    double worst = 0.0;
    bool pass = false;
    std::string detail;
};

/// [SC1, SC2] over theta2 - theta1 = m pi/12, m = 0..24 (L = 11): vanishes
/// exactly at multiples of pi, exceeds 0.01 elsewhere, and matches the
/// closed-form block matrix to `tol`.
VerifyReport verify_lemma(double tol, std::size_t lattice = 11);

/// Switched-step operator: direct product vs subset expansion (generic
/// angles) and vs binomial form (theta2 = theta1 + n pi), N = 2..8.
VerifyReport verify_expansion(double tol, int draws = 10, std::uint64_t seed = 20221);

/// |+>-projected switch-extended evolution vs normalized causal activation
/// (1 - fidelity), and theta_s in {0, pi/2} vs the definite orders.
VerifyReport verify_switch(double tol, int draws = 20, std::uint64_t seed = 7331);

} // namespace qwalk
