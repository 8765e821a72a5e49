// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and parameter sets are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "qwalk/causal.hpp"
#include "qwalk/commutator.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/figures.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/switch_channel.hpp"
#include "qwalk/verify.hpp"

using namespace qwalk;

namespace {

constexpr double kLemmaTol = 1e-12;
constexpr double kLemmaGap = 0.01;
constexpr double kLemmaSeconds = 1.0;
constexpr double kExpansionTol = 1e-10;
constexpr double kExpansionSeconds = 10.0;
constexpr double kInfidelityTol = 1e-12;
constexpr double kSpreadMargin = 0.5;
constexpr double kFig4Seconds = 5.0;
constexpr std::size_t kEarlyWindow = 30;
constexpr double kAsymmetry = 1e-6;
constexpr double kSandwich = 0.02;
constexpr double kSaturation = 0.1;
constexpr double kFig8Seconds = 60.0;
constexpr double kOracleTol = 1e-12;
constexpr double kChannelTol = 1e-10;
constexpr double kControlledTol = 1e-14;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ExperimentConfig cfg(const std::string& text) { return parse_config(text); }

std::vector<double> spreads(const ExperimentConfig& c, Mode m) {
    return spread_series(mode_trajectory(c, m, c.alpha.value, c.beta.value));
}

Outcome lemma() {
    bool iff = true;
    double printed = 0.0, corrected = 0.0;
    for (int m = 0; m <= 24; ++m) {
        const double t1 = 0.3, t2 = t1 + m * kPi / 12;
        const auto pair = commutator_single_param(t1, t2, 11);
        const double size = max_abs(pair.computed);
        iff = iff && (m % 12 == 0 ? size < kLemmaTol : size > kLemmaGap);
        printed = std::max(printed, max_abs(pair.computed - quoted_commutator_form(t1, t2, 11)));
        corrected = std::max(corrected, max_abs(pair.computed - pair.predicted));
    }
    return {iff && printed < kLemmaTol,
            std::string("iff ") + (iff ? "holds" : "violated") + "; printed block form residual " + fmt(printed) +
                " (corrected form residual " + fmt(corrected) + ")"};
}

Outcome expansion() {
    const auto r = verify_expansion(kExpansionTol, 10);
    return {r.pass, r.detail};
}

Outcome switch_consistency() {
    const auto r = verify_switch(kInfidelityTol, 20);
    return {r.pass, r.detail};
}

Outcome fig4() {
    const auto c = cfg("mode = ico\nthetas = pi/4, pi/6\nsteps = 100");
    const double f = spreads(c, Mode::forward).back(), r = spreads(c, Mode::reverse).back(), i = spreads(c, Mode::ico).back();
    return {i - f > kSpreadMargin && i - r > kSpreadMargin,
            "sigma ico " + fmt(i) + ", forward " + fmt(f) + ", reverse " + fmt(r) + " (margins " + fmt(i - f) + ", " +
                fmt(i - r) + ")"};
}

Outcome fig12() {
    bool pass = true;
    std::string detail;
    for (const char* thetas : {"pi/6, pi/4", "pi/4, pi/6"}) {
        const auto c = cfg(std::string("mode = ico-step\nthetas = ") + thetas + "\nsteps = 100");
        const auto fwd = spreads(c, Mode::forward);
        const auto sw = mode_trajectory(c, Mode::ico_step, c.alpha.value, c.beta.value);
        const auto s = spread_series(sw);
        long first = -1;
        for (std::size_t i = 0; i < sw.steps.size() && sw.steps[i] < kEarlyWindow; ++i)
            if (s[i] > fwd[sw.steps[i]]) {
                first = static_cast<long>(sw.steps[i]);
                break;
            }
        const bool late = s.back() < fwd.back();
        pass = pass && first >= 0 && late;
        detail += std::string(detail.empty() ? "" : "; ") + "(" + thetas + ") t* = " + std::to_string(first) +
                  ", sigma(100) " + fmt(s.back()) + " vs forward " + fmt(fwd.back());
    }
    return {pass, detail};
}

Outcome fig6() {
    const auto c = cfg("mode = ico\nthetas = pi/4, pi/6\nsteps = 50");
    const double f = blp_measure(trace_distance_series(c, Mode::forward)).value;
    const double r = blp_measure(trace_distance_series(c, Mode::reverse)).value;
    const double i = blp_measure(trace_distance_series(c, Mode::ico)).value;
    return {i > std::max(f, r) && std::abs(f - r) > kAsymmetry,
            "BLP ico " + fmt(i) + ", forward " + fmt(f) + ", reverse " + fmt(r)};
}

Outcome fig5() {
    const auto asc = cfg("mode = ico\nthetas = pi/6, pi/4, 5pi/12\nsteps = 99");
    const auto desc = cfg("mode = ico\nthetas = 5pi/12, pi/4, pi/6\nsteps = 99");
    const double adv_a = spreads(asc, Mode::ico).back() - spreads(asc, Mode::forward).back();
    const double adv_d = spreads(desc, Mode::ico).back() - spreads(desc, Mode::forward).back();
    return {adv_a > 0 && adv_d > 0 && adv_a >= adv_d,
            "advantage ascending " + fmt(adv_a) + ", descending " + fmt(adv_d)};
}

Outcome fig7() {
    const auto c = cfg("mode = ico\nthetas = pi/4, pi/3\nsteps = 100");
    double worst_s = 0.0, worst_c = 0.0;
    for (Series which : {Series::entropy, Series::concurrence}) {
        const auto s = compare_modes(c, which);
        double& worst = which == Series::entropy ? worst_s : worst_c;
        for (std::size_t i = 0; i < s.t.size(); ++i) {
            if (s.t[i] < 10) continue;
            const double lo = std::min(s.forward[i], s.reverse[i]), hi = std::max(s.forward[i], s.reverse[i]);
            worst = std::max({worst, lo - s.ico[i], s.ico[i] - hi});
        }
    }
    return {worst_s <= kSandwich && worst_c <= kSandwich,
            "largest excursion outside the definite-order band: entropy " + fmt(worst_s) + ", concurrence " +
                fmt(worst_c)};
}

Outcome fig8() {
    bool pass = true;
    std::string detail;
    for (const char* first : {"pi/6", "5pi/12"}) {
        const auto b = blp_versus_period(first, 50, 2, 25);
        int below = 0;
        for (std::size_t i = 0; i < b.period.size(); ++i)
            if (!(b.ico[i] > b.forward[i] && b.ico[i] > b.reverse[i])) ++below;
        const double sat = std::abs(b.ico.back() - b.ico[b.ico.size() - 6]) / b.ico.back();
        pass = pass && below == 0 && sat < kSaturation;
        detail += std::string(detail.empty() ? "" : "; ") + "theta1 = " + first + ": ico not above both at " +
                  std::to_string(below) + "/24 periods, saturation " + fmt(sat);
    }
    return {pass, detail};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    std::uniform_int_distribution<int> kdist(1, 4), ndist(0, 8), odist(0, 1);
    double worst = 0.0;
    for (int draw = 0; draw < 50; ++draw) {
        const std::size_t n = ndist(rng);
        std::vector<double> th(kdist(rng));
        for (auto& x : th) x = angle(rng);
        const PeriodicWalkSpec spec{th, n, odist(rng) ? CausalOrder::reverse : CausalOrder::forward, {}};
        const std::size_t L = 2 * n + 3 + 2 * (draw % 3);
        const double a = angle(rng);
        const WalkerState psi0 = make_localized_state(std::cos(a), Complex(0, std::sin(a)), 0, L);
        const auto got = evolve_definite(psi0, spec).states.back();
        Eigen::VectorXcd v(2 * L);
        for (std::size_t i = 0; i < 2 * L; ++i) v[i] = psi0.amplitudes()[i];
        const Eigen::VectorXcd ref = oracle::brute_force_operator(periodic_sequence(spec), L) * v;
        for (std::size_t i = 0; i < 2 * L; ++i) worst = std::max(worst, std::abs(ref[i] - got.amplitudes()[i]));
    }
    return {worst < kOracleTol, "max entry difference " + fmt(worst) + " over 50 draws"};
}

Outcome switch_channel() {
    const double h = 1.0 / std::sqrt(2.0);
    DenseOperator x(2, 2), z(2, 2), u(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    u << std::cos(0.7), Complex(0, std::sin(0.7)), Complex(0, std::sin(0.7)), std::cos(0.7);
    const auto proj = [](Complex a, Complex b) {
        Eigen::VectorXcd v(2);
        v << a, b;
        return DenseOperator(v * v.adjoint());
    };
    const KrausChannel id = KrausChannel::identity(2), ux = KrausChannel::unitary((x + z) * h), uu = KrausChannel::unitary(u);
    const KrausChannel two{{std::sqrt(0.6) * DenseOperator::Identity(2, 2), std::sqrt(0.4) * x}};
    const KrausChannel deph{{std::sqrt(0.3) * DenseOperator::Identity(2, 2), std::sqrt(0.7) * z}};
    const DenseOperator rho = proj(0.6, Complex(0, 0.8));

    double trace_err = 0.0, min_eig = 0.0;
    for (const auto& [a, b] : {std::pair{id, id}, std::pair{ux, uu}, std::pair{two, deph}, std::pair{id, two}})
        for (const DenseOperator& rs : {proj(1, 0), proj(0, 1), proj(h, h), proj(std::cos(0.3), std::sin(0.3))}) {
            const DenseOperator out = switch_channel_apply(a, b, rho, rs);
            trace_err = std::max(trace_err, std::abs(out.trace() - 1.0));
            min_eig = std::min(min_eig, min_eigenvalue(out));
        }

    const DenseOperator u1 = ux.kraus[0], u2 = uu.kraus[0];
    const DenseOperator w = Eigen::kroneckerProduct((u2 * u1).eval(), proj(1, 0)).eval() +
                            Eigen::kroneckerProduct((u1 * u2).eval(), proj(0, 1)).eval();
    const DenseOperator in = Eigen::kroneckerProduct(rho, proj(h, h)).eval();
    const double controlled = (switch_channel_apply(ux, uu, rho, proj(h, h)) - w * in * w.adjoint()).cwiseAbs().maxCoeff();
    return {trace_err < kChannelTol && min_eig > -kChannelTol && controlled < kControlledTol,
            "trace error " + fmt(trace_err) + ", min eigenvalue " + fmt(min_eig) + ", controlled-unitary residual " +
                fmt(controlled)};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "commutator iff and block form", lemma, kLemmaSeconds},
        {2, "expansion identities", expansion, kExpansionSeconds},
        {3, "switch consistency", switch_consistency, 0},
        {4, "spread advantage (2-period, N=100)", fig4, kFig4Seconds},
        {5, "switched-step early advantage then localization", fig12, 0},
        {6, "BLP ordering (2-period, N=50)", fig6, 0},
        {7, "3-period spread advantage (N=99)", fig5, 0},
        {8, "entropy and concurrence sandwich", fig7, 0},
        {9, "BLP versus period", fig8, kFig8Seconds},
        {10, "oracle equivalence", oracle_equivalence, 0},
        {11, "switch channel", switch_channel, 0},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.pass = false;
            o.detail += "; over time budget";
        }
        if (!o.pass) ++failed;
        std::printf("%s criterion %d: %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
