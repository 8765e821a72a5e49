#pragma once

#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

/// Channel rho -> sum_i K_i rho K_i^dagger on a `dim`-dimensional system.
struct KrausChannel {
    std::vector<DenseOperator> kraus;

    Eigen::Index dim() const { return kraus.empty() ? 0 : kraus.front().rows(); }
    /// Throws ChannelError unless sum K^dagger K = 1 within tol.
    void check_complete(double tol = 1e-10) const;

    static KrausChannel identity(Eigen::Index dim);
    static KrausChannel unitary(const DenseOperator& u);
};

/// Quantum switch of two channels acting on rho_sys (x) rho_switch, ordered
/// system (x) switch:
///   W_ij = K2_i K1_j (x) |0><0| + K1_j K2_i (x) |1><1|
///   out  = sum_ij W_ij (rho (x) rho_s) W_ij^dagger
DenseOperator switch_channel_apply(const KrausChannel& phi1, const KrausChannel& phi2, const DenseOperator& rho_sys,
                                   const DenseOperator& rho_switch);

/// Throws DomainError unless rho is Hermitian, unit trace and PSD within tol.
void validate_density_matrix(const DenseOperator& rho, double tol);
double min_eigenvalue(const DenseOperator& hermitian);

} // namespace qwalk
