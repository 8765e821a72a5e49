#include <doctest.h>

#include <cmath>
#include <vector>

#include <omp.h>

#include "qwalk/kernels.hpp"

using namespace qwalk;

namespace {

std::vector<Complex> pattern(std::size_t n) {
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Complex(std::sin(0.37 * i), std::cos(1.3 * i)) * 1e-2;
    return v;
}

double diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

const kernels::Coin2 kCoin{Complex(0.6, 0.1), Complex(0.2, -0.7), Complex(-0.3, 0.4), Complex(0.9, 0.0)};

} // namespace

TEST_CASE("parallel kernels agree with the serial reference") {
    for (std::size_t L : {9u, 4097u, 20001u}) {
        const auto in = pattern(2 * L);
        std::vector<Complex> a(2 * L), b(2 * L);

        kernels::apply_coin(in, a, L, kCoin);
        kernels::serial::apply_coin(in, b, L, kCoin);
        CHECK(diff(a, b) == 0.0);

        kernels::apply_shift(in, a, L);
        kernels::serial::apply_shift(in, b, L);
        CHECK(diff(a, b) == 0.0);

        kernels::coin_shift(in, a, L, kCoin);
        kernels::serial::coin_shift(in, b, L, kCoin);
        CHECK(diff(a, b) < 1e-15);

        kernels::axpby(Complex(0.3, 0.1), in, Complex(-1.0, 0.5), a, b);
        std::vector<Complex> c(2 * L);
        kernels::serial::axpby(Complex(0.3, 0.1), in, Complex(-1.0, 0.5), a, c);
        CHECK(diff(b, c) == 0.0);

        CHECK(std::abs(kernels::norm_squared(in) - kernels::serial::norm_squared(in)) < 1e-12);

        Complex p[4], s[4];
        kernels::coin_block(in, L, p);
        kernels::serial::coin_block(in, L, s);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(p[i] - s[i]) < 1e-12);
    }
}

TEST_CASE("reductions do not depend on the thread count") {
    const std::size_t L = 50001;
    const auto in = pattern(2 * L);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double one = kernels::norm_squared(in);
    Complex b1[4];
    kernels::coin_block(in, L, b1);
    omp_set_num_threads(4);
    const double four = kernels::norm_squared(in);
    Complex b4[4];
    kernels::coin_block(in, L, b4);
    omp_set_num_threads(saved);
    CHECK(one == four);
    for (int i = 0; i < 4; ++i) CHECK(b1[i] == b4[i]);
}

TEST_CASE("fused step equals coin then shift") {
    const std::size_t L = 11;
    std::vector<Complex> in(2 * L);
    in[5] = 1.0;
    in[L + 5] = Complex(0, 1);
    std::vector<Complex> tmp(2 * L), ref(2 * L), out(2 * L);
    kernels::serial::apply_coin(in, tmp, L, kCoin);
    kernels::serial::apply_shift(tmp, ref, L);
    kernels::coin_shift(in, out, L, kCoin);
    CHECK(diff(out, ref) < 1e-16);
    CHECK(std::abs(out[4] - (kCoin.m00 + kCoin.m01 * Complex(0, 1))) < 1e-16);
    CHECK(std::abs(out[L + 6] - (kCoin.m10 + kCoin.m11 * Complex(0, 1))) < 1e-16);
}
