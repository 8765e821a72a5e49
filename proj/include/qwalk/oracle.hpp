#pragma once

// Brute-force reference implementations. Nothing here calls the evolution
// kernels: operators are assembled entry by entry from their definitions and
// multiplied as dense matrices.

#include <cstddef>
#include <vector>

#include "qwalk/walker.hpp"

namespace qwalk::oracle {

inline constexpr std::size_t kMaxDimension = 1024;
inline constexpr std::size_t kMaxEnumerationSteps = 12;

DenseOperator shift_matrix(std::size_t lattice);
DenseOperator coin_on_walker(const CoinSpec& spec, std::size_t lattice);

/// prod S (C x 1) with the first step rightmost.
DenseOperator brute_force_operator(const std::vector<CoinSpec>& steps, std::size_t lattice);

/// One summand of the switched-step expansion: weight times the walk that
/// applies `steps` in order.
struct SequenceTerm {
    double weight;
    std::vector<CoinSpec> steps;
    std::vector<bool> swapped_slots;  // which 2-step blocks run SC2 SC1
};

/// All 2^(N/2) subset terms; a subset of size j weighs cos^(N/2-j) sin^j.
std::vector<SequenceTerm> enumerate_step_sequences(double theta1, double theta2, double theta_s, std::size_t steps);
DenseOperator sum_terms(const std::vector<SequenceTerm>& terms, std::size_t lattice);

/// (cos ts SC1 SC2 + sin ts SC2 SC1)^(N/2) by direct multiplication.
DenseOperator direct_switched_step_operator(double theta1, double theta2, double theta_s, std::size_t steps,
                                            std::size_t lattice);

struct IdentityReport {
    double max_abs_diff;
    bool pass;
};

IdentityReport verify_identity(const DenseOperator& a, const DenseOperator& b, double tol);

double unitarity_defect(const DenseOperator& u);

} // namespace qwalk::oracle
