#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qwalk/causal.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/oracle.hpp"

using namespace qwalk;
using doctest::Approx;

namespace {
const double h = 1.0 / std::sqrt(2.0);
}

TEST_CASE("localized states") {
    auto s = make_localized_state(h, h, 0, 201);
    CHECK(s.amplitude(0, 0) == Complex(h, 0));
    CHECK(s.amplitude(1, 0) == Complex(h, 0));
    CHECK(s.norm_squared() == Approx(1.0));

    auto b = make_localized_state(1.0, 0.0, 0, 5);
    for (long x = -2; x <= 2; ++x) {
        CHECK(std::abs(b.amplitude(0, x)) == (x == 0 ? 1.0 : 0.0));
        CHECK(std::abs(b.amplitude(1, x)) == 0.0);
    }

    auto c = make_localized_state(0.6, Complex(0, 0.8), 3, 11);
    CHECK(std::abs(c.norm() - 1.0) < 1e-12);
    int support = 0;
    for (int coin = 0; coin < 2; ++coin)
        for (long x = -5; x <= 5; ++x)
            if (std::abs(c.amplitude(coin, x)) > 0) {
                CHECK(x == 3);
                ++support;
            }
    CHECK(support == 2);

    CHECK_THROWS_AS(make_localized_state(1.0, 1.0, 0, 5), NormalizationError);
    CHECK_THROWS_AS(make_localized_state(1.0, 0.0, 3, 5), BoundsError);
    CHECK_THROWS_AS(WalkerState(4), BoundsError);
}

TEST_CASE("coin matrices") {
    const DenseOperator id = coin_matrix(single_coin(0.0));
    CHECK((id - DenseOperator::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

    const DenseOperator flip = coin_matrix(single_coin(kPi / 2));
    CHECK(std::abs(flip(0, 0)) < 1e-16);
    CHECK(std::abs(flip(0, 1) - kI) < 1e-16);
    CHECK(std::abs(flip(1, 0) - kI) < 1e-16);

    const DenseOperator g = coin_matrix(CoinSpec{kPi / 4, 0.0, 0.0});
    CHECK(std::abs(g(0, 0) - h) < 1e-15);
    CHECK(std::abs(g(0, 1) - h) < 1e-15);
    CHECK(std::abs(g(1, 0) + h) < 1e-15);
    CHECK(std::abs(g(1, 1) - h) < 1e-15);

    for (double theta : {0.1, 0.7, 2.3}) {
        const DenseOperator c = coin_matrix(single_coin(theta));
        CHECK((c.adjoint() * c - DenseOperator::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
        CHECK(c(0, 0) == Complex(std::cos(theta), 0));
        CHECK(c(0, 1) == Complex(0, std::sin(theta)));
    }
}

TEST_CASE("coin and shift actions") {
    auto s = apply_coin(make_localized_state(1.0, 0.0, 0, 5), single_coin(kPi / 4));
    CHECK(std::abs(s.amplitude(0, 0) - Complex(h, 0)) < 1e-15);
    CHECK(std::abs(s.amplitude(1, 0) - Complex(0, h)) < 1e-15);

    const auto psi = make_localized_state(0.6, Complex(0, 0.8), 1, 7);
    CHECK(testing::max_diff(apply_coin(psi, single_coin(0.0)), psi) == 0.0);
    const auto neg = apply_coin(psi, single_coin(kPi));
    CHECK(testing::max_diff(neg, psi.scaled(-1.0)) < 1e-15);

    auto up = apply_shift(make_localized_state(1.0, 0.0, 0, 5));
    CHECK(std::abs(up.amplitude(0, -1)) == 1.0);
    auto wrap = apply_shift(make_localized_state(0.0, 1.0, 2, 5));
    CHECK(std::abs(wrap.amplitude(1, -2)) == 1.0);
    auto split = apply_shift(make_localized_state(h, h, 0, 5));
    CHECK(std::abs(split.amplitude(0, -1)) == Approx(h));
    CHECK(std::abs(split.amplitude(1, 1)) == Approx(h));
}

TEST_CASE("walk steps") {
    const auto one = walk_step(make_localized_state(h, h, 0, 11), single_coin(kPi / 4));
    const auto d = probability_distribution(one);
    REQUIRE(d.size() == 2);
    CHECK(d[0].x == -1);
    CHECK(d[0].p == Approx(0.5));
    CHECK(d[1].x == 1);
    CHECK(d[1].p == Approx(0.5));

    const auto still = walk_step(make_localized_state(1.0, 0.0, 0, 5), single_coin(0.0));
    CHECK(std::abs(still.amplitude(0, -1)) == 1.0);

    const auto psi0 = make_localized_state(h, h, 0, 11);
    const auto two = walk_step(walk_step(psi0, single_coin(kPi / 4)), single_coin(kPi / 4));
    const Eigen::VectorXcd ref =
        oracle::brute_force_operator({single_coin(kPi / 4), single_coin(kPi / 4)}, 11) * testing::to_vector(psi0);
    CHECK((testing::to_vector(two) - ref).cwiseAbs().maxCoeff() < 1e-15);
    for (const auto& [x, p] : probability_distribution(two)) CHECK((x == -2 || x == 0 || x == 2));

    CHECK(probability_distribution(psi0).size() == 1);
}

TEST_CASE("light cone, parity, unitarity and symmetry") {
    const std::size_t L = 41;
    for (double theta : {0.2, kPi / 4, 1.3, kPi / 3}) {
        auto s = make_localized_state(h, h, 0, L);
        for (long t = 1; t <= 19; ++t) {
            s = walk_step(s, single_coin(theta));
            CHECK(std::abs(s.norm() - 1.0) < 1e-12);
            for (int c = 0; c < 2; ++c)
                for (long x = -20; x <= 20; ++x)
                    if (std::abs(x) > t || (x - t) % 2 != 0) CHECK(std::abs(s.amplitude(c, x)) < 1e-14);
            std::vector<double> p(L, 0.0);
            for (const auto& [x, prob] : probability_distribution(s)) p[x + 20] = prob;
            for (long x = 0; x <= 20; ++x) CHECK(std::abs(p[20 + x] - p[20 - x]) < 1e-12);
        }
    }

    auto g = make_localized_state(0.6, Complex(0, 0.8), -3, 31);
    for (int t = 0; t < 12; ++t) g = walk_step(g, CoinSpec{0.4 + t, 0.3 * t, 1.1});
    CHECK(std::abs(g.norm() - 1.0) < 1e-12);
}

TEST_CASE("partial trace over position") {
    const auto rho = partial_trace_position(make_localized_state(h, h, 0, 5));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(std::abs(rho(r, c) - 0.5) < 1e-15);

    const auto stepped = partial_trace_position(apply_shift(make_localized_state(h, h, 0, 5)));
    CHECK(rho.purity() == Approx(1.0));
    CHECK(std::abs(stepped(0, 1)) < 1e-15);
    CHECK(stepped(0, 0).real() == Approx(0.5));

    const auto psi0 = make_localized_state(h, h, 0, 11);
    const auto two = walk_step(walk_step(psi0, single_coin(kPi / 4)), single_coin(kPi / 4));
    const auto ref = testing::dense_partial_trace(
        oracle::brute_force_operator({single_coin(kPi / 4), single_coin(kPi / 4)}, 11) * testing::to_vector(psi0), 11);
    const auto got = partial_trace_position(two);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(std::abs(got(r, c) - ref(r, c)) < 1e-14);
    got.validate();

    CHECK_THROWS_AS(partial_trace_position(WalkerState(5)), DegenerateStateError);
}

TEST_CASE("density matrix helpers") {
    CoinDensityMatrix m{{0.25, 0.0, 0.0, 0.75}};
    const auto ev = m.eigenvalues();
    CHECK(ev[0] == Approx(0.25));
    CHECK(ev[1] == Approx(0.75));
    CHECK(m.purity() == Approx(0.625));
    CoinDensityMatrix bad{{1.2, 0.0, 0.0, -0.2}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
