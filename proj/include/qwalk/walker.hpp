#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// SU(2) coin parameters. The defaults xi = 0, zeta = pi/2 give the
/// single-parameter coin [[cos t, i sin t], [i sin t, cos t]].
struct CoinSpec {
    double theta = 0.0;
    double xi = 0.0;
    double zeta = kPi / 2;

    bool is_single_parameter() const { return xi == 0.0 && zeta == kPi / 2; }
};

inline CoinSpec single_coin(double theta) { return CoinSpec{theta}; }

/// Amplitudes over coin {0,1} x cyclic lattice of L sites (L odd). Site
/// index i is the position x = i - (L-1)/2.
class WalkerState {
public:
    WalkerState() = default;
    explicit WalkerState(std::size_t lattice);
    WalkerState(std::size_t lattice, std::vector<Complex> amplitudes);

    std::size_t lattice() const { return lattice_; }
    long half_width() const { return static_cast<long>(lattice_ - 1) / 2; }
    long position(std::size_t site) const { return static_cast<long>(site) - half_width(); }
    std::size_t site(long x) const;

    Complex amplitude(int coin, long x) const { return amps_[coin * lattice_ + site(x)]; }
    Complex& amplitude(int coin, long x) { return amps_[coin * lattice_ + site(x)]; }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }

    double norm_squared() const { return kernels::norm_squared(amps_); }
    double norm() const;

    WalkerState scaled(Complex factor) const;
    WalkerState normalized() const;
    bool all_finite() const;

private:
    std::size_t lattice_ = 0;
    std::vector<Complex> amps_;
};

/// Reduced coin state; entries row-major.
struct CoinDensityMatrix {
    std::array<Complex, 4> m{};

    Complex operator()(int r, int c) const { return m[2 * r + c]; }
    Complex trace() const { return m[0] + m[3]; }
    double purity() const;
    // Ascending.
    std::array<double, 2> eigenvalues() const;
    // Throws DomainError unless Hermitian, unit trace and PSD within tol.
    void validate(double tol = 1e-12) const;

    static CoinDensityMatrix pure(Complex alpha, Complex beta);
};

struct PositionProbability {
    long x;
    double p;
};

WalkerState make_localized_state(Complex alpha, Complex beta, long x0, std::size_t lattice);

DenseOperator coin_matrix(const CoinSpec& spec);
kernels::Coin2 coin_entries(const CoinSpec& spec);

WalkerState apply_coin(const WalkerState& state, const CoinSpec& spec);
WalkerState apply_shift(const WalkerState& state);
WalkerState walk_step(const WalkerState& state, const CoinSpec& spec);

/// Sites with nonzero probability, ascending x.
std::vector<PositionProbability> probability_distribution(const WalkerState& state);

/// Coin state with the position traced out, renormalized by the state norm.
/// Throws DegenerateStateError for a zero state.
CoinDensityMatrix partial_trace_position(const WalkerState& state);

} // namespace qwalk
