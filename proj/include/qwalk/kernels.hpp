#pragma once

// Data-parallel inner loops of the walk. Every kernel has an OpenMP version
// (namespace qwalk::kernels) and a plain serial reference
// (qwalk::kernels::serial) that the tests and the benchmark compare against.
//
// Amplitude layout: index coin * L + site, site i <-> position i - (L-1)/2.

#include <cstddef>
#include <span>

#include "qwalk/types.hpp"

namespace qwalk::kernels {

struct Coin2 {
    Complex m00, m01, m10, m11;
};

// Below this lattice size the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 4096;

// Reductions are split into this many fixed chunks and combined in order, so
// results do not depend on the thread count.
inline constexpr std::size_t kReductionChunks = 64;

void apply_coin(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice, const Coin2& coin);
void apply_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice);
// Fused coin + shift: out = S (C x 1) in.
void coin_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice, const Coin2& coin);
// out = a * x + b * y
void axpby(Complex a, std::span<const Complex> x, Complex b, std::span<const Complex> y, std::span<Complex> out);
double norm_squared(std::span<const Complex> amps);
// Unnormalized 2x2 coin block sum_x amp(c,x) conj(amp(c',x)), row-major.
void coin_block(std::span<const Complex> amps, std::size_t lattice, Complex out[4]);

namespace serial {

void apply_coin(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice, const Coin2& coin);
void apply_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice);
void coin_shift(std::span<const Complex> in, std::span<Complex> out, std::size_t lattice, const Coin2& coin);
void axpby(Complex a, std::span<const Complex> x, Complex b, std::span<const Complex> y, std::span<Complex> out);
double norm_squared(std::span<const Complex> amps);
void coin_block(std::span<const Complex> amps, std::size_t lattice, Complex out[4]);

} // namespace serial

} // namespace qwalk::kernels
