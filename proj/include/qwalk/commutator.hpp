#pragma once

#include <cstddef>

#include "qwalk/walker.hpp"

namespace qwalk {

/// Computed [SC1, SC2] next to its closed-form prediction.
struct CommutatorPair {
    DenseOperator computed;
    DenseOperator predicted;
};

/// Lattice translations on the cyclic lattice: T_minus = sum |x-1><x|,
/// T_plus = sum |x+1><x|.
DenseOperator translation_minus(std::size_t lattice);
DenseOperator translation_plus(std::size_t lattice);

/// Single-parameter coins. Predicted block form (D = theta2 - theta1):
///   [[ 0,                      -i sin(D) (1 - T_minus^2) ],
///    [ -i sin(D) (1 - T_plus^2),  0                      ]]
/// which vanishes exactly when D is a multiple of pi.
CommutatorPair commutator_single_param(double theta1, double theta2, std::size_t lattice);

/// General SU(2) coins C(theta, xi, zeta). Predicted blocks:
///   (0,0) = -2i sin(zeta1 - zeta2) sin t1 sin t2 * 1
///   (1,1) = +2i sin(zeta1 - zeta2) sin t1 sin t2 * 1
///   (0,1) = p T_minus^2 + q * 1,   (1,0) = r * 1 + u T_plus^2
/// with p, q, r, u the phase combinations in commutator.cpp.
CommutatorPair commutator_general(const CoinSpec& c1, const CoinSpec& c2, std::size_t lattice);

/// The block matrix [[0, i(1-T_plus^2) sin D], [-i(1-T_minus^2) sin D, 0]]
/// in the form it is usually quoted. It differs from the true commutator by
/// a unitary factor T_minus^2 and a sign in the off-diagonal blocks (it has
/// the same null set); kept to document that discrepancy.
DenseOperator quoted_commutator_form(double theta1, double theta2, std::size_t lattice);

double max_abs(const DenseOperator& op);

} // namespace qwalk
