#include "qwalk/kernels.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace qwalk::kernels {

namespace {

bool parallel_worthy(std::size_t n) { return n >= kParallelThreshold; }

} // namespace

void apply_coin(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice, const Coin2& coin) {
    const Complex* up = in.data();
    const Complex* dn = in.data() + lattice;
    Complex* o0 = out.data();
    Complex* o1 = out.data() + lattice;
    const auto n = static_cast<long>(lattice);
#pragma omp parallel for schedule(static) if (parallel_worthy(lattice))
    for (long i = 0; i < n; ++i) {
        const Complex a = up[i];
        const Complex b = dn[i];
        o0[i] = coin.m00 * a + coin.m01 * b;
        o1[i] = coin.m10 * a + coin.m11 * b;
    }
}

void apply_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice) {
    const Complex* up = in.data();
    const Complex* dn = in.data() + lattice;
    Complex* o0 = out.data();
    Complex* o1 = out.data() + lattice;
    const auto n = static_cast<long>(lattice);
#pragma omp parallel for schedule(static) if (parallel_worthy(lattice))
    for (long i = 0; i < n; ++i) {
        const long right = (i + 1 == n) ? 0 : i + 1;
        const long left = (i == 0) ? n - 1 : i - 1;
        o0[i] = up[right];
        o1[i] = dn[left];
    }
}

void coin_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice, const Coin2& coin) {
    const Complex* up = in.data();
    const Complex* dn = in.data() + lattice;
    Complex* o0 = out.data();
    Complex* o1 = out.data() + lattice;
    const auto n = static_cast<long>(lattice);
#pragma omp parallel for schedule(static) if (parallel_worthy(lattice))
    for (long i = 0; i < n; ++i) {
        // coin 0 arrives from the right neighbour, coin 1 from the left one
        const long right = (i + 1 == n) ? 0 : i + 1;
        const long left = (i == 0) ? n - 1 : i - 1;
        o0[i] = coin.m00 * up[right] + coin.m01 * dn[right];
        o1[i] = coin.m10 * up[left] + coin.m11 * dn[left];
    }
}

void axpby(Complex a, std::span<const Complex> x, Complex b, std::span<const Complex> y, std::span<Complex> out) {
    const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(static) if (parallel_worthy(out.size()))
    for (long i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

double norm_squared(std::span<const Complex> amps) {
    if (!parallel_worthy(amps.size())) return serial::norm_squared(amps);
    std::array<double, kReductionChunks> partial{};
    const std::size_t chunk = (amps.size() + kReductionChunks - 1) / kReductionChunks;
#pragma omp parallel for schedule(static)
    for (long c = 0; c < static_cast<long>(kReductionChunks); ++c) {
        const std::size_t lo = c * chunk;
        const std::size_t hi = std::min(amps.size(), lo + chunk);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::norm(amps[i]);
        partial[c] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

void coin_block(std::span<const Complex> amps, std::size_t lattice, Complex out[4]) {
    if (!parallel_worthy(lattice)) {
        serial::coin_block(amps, lattice, out);
        return;
    }
    std::array<std::array<Complex, 3>, kReductionChunks> partial{};
    const Complex* up = amps.data();
    const Complex* dn = amps.data() + lattice;
    const std::size_t chunk = (lattice + kReductionChunks - 1) / kReductionChunks;
#pragma omp parallel for schedule(static)
    for (long c = 0; c < static_cast<long>(kReductionChunks); ++c) {
        const std::size_t lo = c * chunk;
        const std::size_t hi = std::min(lattice, lo + chunk);
        Complex s00{}, s01{}, s11{};
        for (std::size_t i = lo; i < hi; ++i) {
            s00 += std::norm(up[i]);
            s01 += up[i] * std::conj(dn[i]);
            s11 += std::norm(dn[i]);
        }
        partial[c] = {s00, s01, s11};
    }
    Complex s00{}, s01{}, s11{};
    for (const auto& p : partial) {
        s00 += p[0];
        s01 += p[1];
        s11 += p[2];
    }
    out[0] = s00;
    out[1] = s01;
    out[2] = std::conj(s01);
    out[3] = s11;
}

namespace serial {

void apply_coin(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice, const Coin2& coin) {
    for (std::size_t i = 0; i < lattice; ++i) {
        const Complex a = in[i];
        const Complex b = in[lattice + i];
        out[i] = coin.m00 * a + coin.m01 * b;
        out[lattice + i] = coin.m10 * a + coin.m11 * b;
    }
}

void apply_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice) {
    for (std::size_t i = 0; i < lattice; ++i) {
        out[i] = in[(i + 1) % lattice];
        out[lattice + (i + 1) % lattice] = in[lattice + i];
    }
}

void coin_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice, const Coin2& coin) {
    std::vector<Complex> tmp(in.size());
    serial::apply_coin(in, tmp, lattice, coin);
    serial::apply_shift(tmp, out, lattice);
}

void axpby(Complex a, std::span<const Complex> x, Complex b, std::span<const Complex> y, std::span<Complex> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * x[i] + b * y[i];
}

double norm_squared(std::span<const Complex> amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

void coin_block(std::span<const Complex> amps, std::size_t lattice, Complex out[4]) {
    Complex s00{}, s01{}, s11{};
    for (std::size_t i = 0; i < lattice; ++i) {
        const Complex a = amps[i];
        const Complex b = amps[lattice + i];
        s00 += std::norm(a);
        s01 += a * std::conj(b);
        s11 += std::norm(b);
    }
    out[0] = s00;
    out[1] = s01;
    out[2] = std::conj(s01);
    out[3] = s11;
}

} // namespace serial

} // namespace qwalk::kernels
