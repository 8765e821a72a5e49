#include "qwalk/walker.hpp"

#include <cmath>
#include <string>

namespace qwalk {

namespace {

void check_lattice(std::size_t lattice) {
    if (lattice == 0 || lattice % 2 == 0)
        throw BoundsError("lattice size must be a positive odd integer, got " + std::to_string(lattice));
}

} // namespace

WalkerState::WalkerState(std::size_t lattice) : lattice_(lattice), amps_(2 * lattice) { check_lattice(lattice); }

WalkerState::WalkerState(std::size_t lattice, std::vector<Complex> amplitudes)
    : lattice_(lattice), amps_(std::move(amplitudes)) {
    check_lattice(lattice);
    if (amps_.size() != 2 * lattice_)
        throw DimensionError("walker state needs 2L = " + std::to_string(2 * lattice_) + " amplitudes, got " +
                             std::to_string(amps_.size()));
}

std::size_t WalkerState::site(long x) const {
    if (x < -half_width() || x > half_width())
        throw BoundsError("position " + std::to_string(x) + " outside lattice of size " + std::to_string(lattice_));
    return static_cast<std::size_t>(x + half_width());
}

double WalkerState::norm() const { return std::sqrt(norm_squared()); }

WalkerState WalkerState::scaled(Complex factor) const {
    WalkerState out = *this;
    for (auto& a : out.amps_) a *= factor;
    return out;
}

WalkerState WalkerState::normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw DegenerateStateError("cannot normalize a zero walker state");
    return scaled(1.0 / n);
}

bool WalkerState::all_finite() const {
    for (const auto& a : amps_)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    return true;
}

double CoinDensityMatrix::purity() const {
    return (m[0] * m[0] + m[1] * m[2] + m[2] * m[1] + m[3] * m[3]).real();
}

std::array<double, 2> CoinDensityMatrix::eigenvalues() const {
    // Hermitian 2x2: mean +- sqrt(((a-d)/2)^2 + |b|^2)
    const double a = m[0].real();
    const double d = m[3].real();
    const double mean = 0.5 * (a + d);
    const double half = 0.5 * (a - d);
    const double r = std::sqrt(half * half + std::norm(m[1]));
    return {mean - r, mean + r};
}

void CoinDensityMatrix::validate(double tol) const {
    if (std::abs(m[1] - std::conj(m[2])) > tol || std::abs(m[0].imag()) > tol || std::abs(m[3].imag()) > tol)
        throw DomainError("coin density matrix is not Hermitian");
    if (std::abs(trace() - 1.0) > tol) throw DomainError("coin density matrix trace is not 1");
    if (eigenvalues()[0] < -tol) throw DomainError("coin density matrix has a negative eigenvalue");
}

CoinDensityMatrix CoinDensityMatrix::pure(Complex alpha, Complex beta) {
    return {{alpha * std::conj(alpha), alpha * std::conj(beta), beta * std::conj(alpha), beta * std::conj(beta)}};
}

WalkerState make_localized_state(Complex alpha, Complex beta, long x0, std::size_t lattice) {
    const double n2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(n2 - 1.0) > 1e-12)
        throw NormalizationError("initial coin (alpha, beta) has |alpha|^2 + |beta|^2 = " + std::to_string(n2));
    WalkerState state(lattice);
    state.amplitude(0, x0) = alpha;
    state.amplitude(1, x0) = beta;
    return state;
}

kernels::Coin2 coin_entries(const CoinSpec& spec) {
    const double c = std::cos(spec.theta);
    const double s = std::sin(spec.theta);
    if (spec.is_single_parameter()) return {c, kI * s, kI * s, c};
    const Complex exi = std::polar(1.0, spec.xi);
    const Complex ezeta = std::polar(1.0, spec.zeta);
    return {exi * c, ezeta * s, -std::conj(ezeta) * s, std::conj(exi) * c};
}

DenseOperator coin_matrix(const CoinSpec& spec) {
    const auto e = coin_entries(spec);
    DenseOperator m(2, 2);
    m << e.m00, e.m01, e.m10, e.m11;
    return m;
}

WalkerState apply_coin(const WalkerState& state, const CoinSpec& spec) {
    WalkerState out(state.lattice());
    kernels::apply_coin(state.amplitudes(), out.amplitudes(), state.lattice(), coin_entries(spec));
    return out;
}

WalkerState apply_shift(const WalkerState& state) {
    WalkerState out(state.lattice());
    kernels::apply_shift(state.amplitudes(), out.amplitudes(), state.lattice());
    return out;
}

WalkerState walk_step(const WalkerState& state, const CoinSpec& spec) {
    WalkerState out(state.lattice());
    kernels::coin_shift(state.amplitudes(), out.amplitudes(), state.lattice(), coin_entries(spec));
    return out;
}

std::vector<PositionProbability> probability_distribution(const WalkerState& state) {
    std::vector<PositionProbability> dist;
    dist.reserve(state.lattice());
    const auto amps = state.amplitudes();
    const std::size_t L = state.lattice();
    for (std::size_t i = 0; i < L; ++i) {
        const double p = std::norm(amps[i]) + std::norm(amps[L + i]);
        if (p > 0.0) dist.push_back({state.position(i), p});
    }
    return dist;
}

CoinDensityMatrix partial_trace_position(const WalkerState& state) {
    Complex block[4];
    kernels::coin_block(state.amplitudes(), state.lattice(), block);
    const double n2 = block[0].real() + block[3].real();
    if (!(n2 > 1e-28)) throw DegenerateStateError("partial trace of a zero-norm walker state");
    CoinDensityMatrix rho;
    for (int i = 0; i < 4; ++i) rho.m[i] = block[i] / n2;
    return rho;
}

} // namespace qwalk
