#include "qwalk/commutator.hpp"

#include <cmath>
#include <string>

#include "qwalk/causal.hpp"

namespace qwalk {

namespace {

void check_lattice(std::size_t lattice) {
    if (lattice < 5 || lattice % 2 == 0)
        throw BoundsError("commutator checks need an odd lattice with L >= 5, got " + std::to_string(lattice));
}

DenseOperator blocks(const DenseOperator& b00, const DenseOperator& b01, const DenseOperator& b10,
                     const DenseOperator& b11) {
    const auto L = b00.rows();
    DenseOperator m(2 * L, 2 * L);
    m.topLeftCorner(L, L) = b00;
    m.topRightCorner(L, L) = b01;
    m.bottomLeftCorner(L, L) = b10;
    m.bottomRightCorner(L, L) = b11;
    return m;
}

DenseOperator commutator_of(const CoinSpec& c1, const CoinSpec& c2, std::size_t lattice) {
    const DenseOperator sc1 = realize_operator({c1}, lattice);
    const DenseOperator sc2 = realize_operator({c2}, lattice);
    return sc1 * sc2 - sc2 * sc1;
}

} // namespace

DenseOperator translation_minus(std::size_t lattice) {
    const auto L = static_cast<Eigen::Index>(lattice);
    DenseOperator t = DenseOperator::Zero(L, L);
    for (Eigen::Index i = 0; i < L; ++i) t((i + L - 1) % L, i) = 1.0;
    return t;
}

DenseOperator translation_plus(std::size_t lattice) {
    const auto L = static_cast<Eigen::Index>(lattice);
    DenseOperator t = DenseOperator::Zero(L, L);
    for (Eigen::Index i = 0; i < L; ++i) t((i + 1) % L, i) = 1.0;
    return t;
}

CommutatorPair commutator_single_param(double theta1, double theta2, std::size_t lattice) {
    check_lattice(lattice);
    const auto L = static_cast<Eigen::Index>(lattice);
    const DenseOperator id = DenseOperator::Identity(L, L);
    const DenseOperator tm = translation_minus(lattice);
    const DenseOperator tp = translation_plus(lattice);
    const Complex k = -kI * std::sin(theta2 - theta1);
    const DenseOperator zero = DenseOperator::Zero(L, L);
    return {commutator_of(single_coin(theta1), single_coin(theta2), lattice),
            blocks(zero, k * (id - tm * tm), k * (id - tp * tp), zero)};
}

CommutatorPair commutator_general(const CoinSpec& c1, const CoinSpec& c2, std::size_t lattice) {
    check_lattice(lattice);
    const auto L = static_cast<Eigen::Index>(lattice);
    const DenseOperator id = DenseOperator::Identity(L, L);
    const DenseOperator tm = translation_minus(lattice);
    const DenseOperator tp = translation_plus(lattice);

    const double ca = std::cos(c1.theta), sa = std::sin(c1.theta);
    const double cb = std::cos(c2.theta), sb = std::sin(c2.theta);
    const auto e = [](double phase) { return std::polar(1.0, phase); };

    const Complex diag = -2.0 * kI * std::sin(c1.zeta - c2.zeta) * sa * sb;
    const Complex p = e(c1.xi + c2.zeta) * ca * sb - e(c2.xi + c1.zeta) * sa * cb;
    const Complex q = e(c1.zeta - c2.xi) * sa * cb - e(c2.zeta - c1.xi) * ca * sb;
    const Complex r = e(c1.xi - c2.zeta) * ca * sb - e(c2.xi - c1.zeta) * sa * cb;
    const Complex u = e(-(c2.xi + c1.zeta)) * sa * cb - e(-(c1.xi + c2.zeta)) * ca * sb;

    return {commutator_of(c1, c2, lattice),
            blocks(diag * id, p * tm * tm + q * id, r * id + u * tp * tp, -diag * id)};
}

DenseOperator quoted_commutator_form(double theta1, double theta2, std::size_t lattice) {
    check_lattice(lattice);
    const auto L = static_cast<Eigen::Index>(lattice);
    const DenseOperator id = DenseOperator::Identity(L, L);
    const DenseOperator tm = translation_minus(lattice);
    const DenseOperator tp = translation_plus(lattice);
    const double s = std::sin(theta2 - theta1);
    const DenseOperator zero = DenseOperator::Zero(L, L);
    return blocks(zero, kI * s * (id - tp * tp), -kI * s * (id - tm * tm), zero);
}

double max_abs(const DenseOperator& op) { return op.size() == 0 ? 0.0 : op.cwiseAbs().maxCoeff(); }

} // namespace qwalk
