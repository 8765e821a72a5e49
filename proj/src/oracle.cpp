#include "qwalk/oracle.hpp"

#include <cmath>
#include <string>

namespace qwalk::oracle {

namespace {

void check_budget(std::size_t lattice) {
    if (lattice == 0 || 2 * lattice > kMaxDimension)
        throw BudgetError("dense oracle limited to 2L <= " + std::to_string(kMaxDimension));
}

} // namespace

DenseOperator shift_matrix(std::size_t lattice) {
    check_budget(lattice);
    const auto L = static_cast<Eigen::Index>(lattice);
    DenseOperator s = DenseOperator::Zero(2 * L, 2 * L);
    // |0><0| x |x-1><x| + |1><1| x |x+1><x|
    for (Eigen::Index x = 0; x < L; ++x) {
        s((x - 1 + L) % L, x) = 1.0;
        s(L + (x + 1) % L, L + x) = 1.0;
    }
    return s;
}

DenseOperator coin_on_walker(const CoinSpec& spec, std::size_t lattice) {
    check_budget(lattice);
    const double c = std::cos(spec.theta);
    const double s = std::sin(spec.theta);
    Complex m[2][2];
    m[0][0] = std::exp(kI * spec.xi) * c;
    m[0][1] = std::exp(kI * spec.zeta) * s;
    m[1][0] = -std::exp(-kI * spec.zeta) * s;
    m[1][1] = std::exp(-kI * spec.xi) * c;
    if (spec.is_single_parameter()) {
        m[0][0] = m[1][1] = c;
        m[0][1] = m[1][0] = Complex(0.0, s);
    }
    const auto L = static_cast<Eigen::Index>(lattice);
    DenseOperator op = DenseOperator::Zero(2 * L, 2 * L);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (Eigen::Index x = 0; x < L; ++x) op(a * L + x, b * L + x) = m[a][b];
    return op;
}

DenseOperator brute_force_operator(const std::vector<CoinSpec>& steps, std::size_t lattice) {
    check_budget(lattice);
    const auto dim = static_cast<Eigen::Index>(2 * lattice);
    const DenseOperator s = shift_matrix(lattice);
    DenseOperator u = DenseOperator::Identity(dim, dim);
    for (const auto& step : steps) u = (s * coin_on_walker(step, lattice) * u).eval();
    return u;
}

std::vector<SequenceTerm> enumerate_step_sequences(double theta1, double theta2, double theta_s, std::size_t steps) {
    if (steps % 2 != 0) throw PreconditionError("switched-step enumeration needs an even step count");
    if (steps > kMaxEnumerationSteps)
        throw BudgetError("sequence enumeration limited to N <= " + std::to_string(kMaxEnumerationSteps));
    const std::size_t blocks = steps / 2;
    const double c = std::cos(theta_s);
    const double s = std::sin(theta_s);

    std::vector<SequenceTerm> terms;
    for (std::size_t mask = 0; mask < (std::size_t{1} << blocks); ++mask) {
        SequenceTerm term{1.0, {}, std::vector<bool>(blocks)};
        for (std::size_t slot = 0; slot < blocks; ++slot) {
            const bool swapped = (mask >> slot) & 1U;
            term.swapped_slots[slot] = swapped;
            // SC1 SC2 applies theta2 first; SC2 SC1 applies theta1 first.
            term.steps.push_back(single_coin(swapped ? theta1 : theta2));
            term.steps.push_back(single_coin(swapped ? theta2 : theta1));
            term.weight *= swapped ? s : c;
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

DenseOperator sum_terms(const std::vector<SequenceTerm>& terms, std::size_t lattice) {
    const auto dim = static_cast<Eigen::Index>(2 * lattice);
    DenseOperator total = DenseOperator::Zero(dim, dim);
    for (const auto& t : terms) total += t.weight * brute_force_operator(t.steps, lattice);
    return total;
}

DenseOperator direct_switched_step_operator(double theta1, double theta2, double theta_s, std::size_t steps,
                                            std::size_t lattice) {
    if (steps % 2 != 0) throw PreconditionError("switched-step operator needs an even step count");
    const DenseOperator sc1 = brute_force_operator({single_coin(theta1)}, lattice);
    const DenseOperator sc2 = brute_force_operator({single_coin(theta2)}, lattice);
    const DenseOperator a = std::cos(theta_s) * sc1 * sc2 + std::sin(theta_s) * sc2 * sc1;
    const auto dim = static_cast<Eigen::Index>(2 * lattice);
    DenseOperator u = DenseOperator::Identity(dim, dim);
    for (std::size_t b = 0; b < steps / 2; ++b) u = (a * u).eval();
    return u;
}

IdentityReport verify_identity(const DenseOperator& a, const DenseOperator& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("cannot compare operators of shape " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    const double diff = a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
    return {diff, diff <= tol};
}

double unitarity_defect(const DenseOperator& u) {
    const DenseOperator prod = u.adjoint() * u;
    return (prod - DenseOperator::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

} // namespace qwalk::oracle
