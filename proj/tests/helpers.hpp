#pragma once

#include <Eigen/Dense>

#include "qwalk/walker.hpp"

namespace testing {

inline Eigen::VectorXcd to_vector(const qwalk::WalkerState& s) {
    Eigen::VectorXcd v(s.amplitudes().size());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = s.amplitudes()[i];
    return v;
}

inline qwalk::WalkerState from_vector(const Eigen::VectorXcd& v, std::size_t lattice) {
    return qwalk::WalkerState(lattice, std::vector<qwalk::Complex>(v.data(), v.data() + v.size()));
}

inline double max_diff(const qwalk::WalkerState& a, const qwalk::WalkerState& b) {
    return (to_vector(a) - to_vector(b)).cwiseAbs().maxCoeff();
}

// Coin block of the full density matrix |psi><psi| traced over position.
inline Eigen::Matrix2cd dense_partial_trace(const Eigen::VectorXcd& psi, std::size_t lattice) {
    const Eigen::MatrixXcd rho = psi * psi.adjoint();
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    const auto L = static_cast<Eigen::Index>(lattice);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (Eigen::Index x = 0; x < L; ++x) out(a, b) += rho(a * L + x, b * L + x);
    return out / out.trace().real();
}

} // namespace testing
