#include "qwalk/switch_channel.hpp"

#include <string>

#include <Eigen/Eigenvalues>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
    DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace

void KrausChannel::check_complete(double tol) const {
    if (kraus.empty()) throw ChannelError("channel has no Kraus operators");
    const Eigen::Index d = dim();
    DenseOperator sum = DenseOperator::Zero(d, d);
    for (const auto& k : kraus) {
        if (k.rows() != d || k.cols() != d) throw ChannelError("Kraus operators have inconsistent shapes");
        sum += k.adjoint() * k;
    }
    const double err = (sum - DenseOperator::Identity(d, d)).cwiseAbs().maxCoeff();
    if (err > tol) throw ChannelError("Kraus completeness violated by " + std::to_string(err));
}

KrausChannel KrausChannel::identity(Eigen::Index dim) { return {{DenseOperator::Identity(dim, dim)}}; }

KrausChannel KrausChannel::unitary(const DenseOperator& u) { return {{u}}; }

DenseOperator switch_channel_apply(const KrausChannel& phi1, const KrausChannel& phi2, const DenseOperator& rho_sys,
                                   const DenseOperator& rho_switch) {
    phi1.check_complete();
    phi2.check_complete();
    const Eigen::Index d = phi1.dim();
    if (phi2.dim() != d) throw ChannelError("switched channels act on different dimensions");
    if (rho_sys.rows() != d || rho_sys.cols() != d) throw DimensionError("system state does not match channel dimension");
    if (rho_switch.rows() != 2 || rho_switch.cols() != 2) throw DimensionError("switch state must be 2x2");

    DenseOperator p0 = DenseOperator::Zero(2, 2), p1 = DenseOperator::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const DenseOperator joint = kron(rho_sys, rho_switch);
    DenseOperator out = DenseOperator::Zero(2 * d, 2 * d);
    for (const auto& k2 : phi2.kraus) {
        for (const auto& k1 : phi1.kraus) {
            const DenseOperator w = kron(k2 * k1, p0) + kron(k1 * k2, p1);
            out += w * joint * w.adjoint();
        }
    }
    return out;
}

double min_eigenvalue(const DenseOperator& hermitian) {
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(hermitian, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void validate_density_matrix(const DenseOperator& rho, double tol) {
    if (rho.rows() != rho.cols()) throw DimensionError("density matrix must be square");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) throw DomainError("density matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > tol) throw DomainError("density matrix trace is not 1");
    if (min_eigenvalue(rho) < -tol) throw DomainError("density matrix is not positive semidefinite");
}

} // namespace qwalk
