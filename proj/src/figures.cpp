#include "qwalk/figures.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

std::vector<double> series_of(const ExperimentConfig& config, Mode mode, Series series) {
    if (series == Series::trace_distance) return trace_distance_series(config, mode);
    const Trajectory traj = mode_trajectory(config, mode, config.alpha.value, config.beta.value);
    switch (series) {
    case Series::spread: return spread_series(traj);
    case Series::entropy: return entropy_series(traj);
    case Series::concurrence: return concurrence_series(traj);
    case Series::trace_distance: break;
    }
    return {};
}

std::vector<long long> step_column(const Trajectory& traj) {
    std::vector<long long> t;
    for (auto s : traj.steps) t.push_back(static_cast<long long>(s));
    return t;
}

ResultTable base_table(std::string name, std::vector<std::string> columns, const ExperimentConfig& echo,
                       std::vector<std::pair<std::string, std::string>> extra = {}) {
    ResultTable t{std::move(name), std::move(columns), {}, format_config(echo), convention_notes()};
    for (auto& e : extra) t.notes.push_back(std::move(e));
    return t;
}

ResultTable mode_table(std::string name, std::string_view prefix, const ExperimentConfig& echo, const ModeSeries& s) {
    const std::string p(prefix);
    auto t = base_table(std::move(name), {"t", p + "_forward", p + "_reverse", p + "_ico"}, echo);
    for (std::size_t i = 0; i < s.t.size(); ++i) t.add_row({s.t[i], s.forward[i], s.reverse[i], s.ico[i]});
    return t;
}

ResultTable advantage_table(std::string name, const ExperimentConfig& echo, const ModeSeries& s) {
    auto t = base_table(std::move(name), {"t", "advantage_over_forward", "advantage_over_reverse"}, echo);
    for (std::size_t i = 0; i < s.t.size(); ++i) t.add_row({s.t[i], s.ico[i] - s.forward[i], s.ico[i] - s.reverse[i]});
    return t;
}

ExperimentConfig preset(const std::string& text) { return parse_config(text); }

// Switched-step walk against both definite orders, sampled at even t.
std::vector<ResultTable> switched_step_figure(const std::string& tag, const std::string& thetas) {
    const auto cfg = preset("mode = ico-step\nk = 2\nthetas = " + thetas + "\nsteps = 100\nobservables = spread\n");
    const auto fwd = spread_series(mode_trajectory(cfg, Mode::forward, cfg.alpha.value, cfg.beta.value));
    const auto rev = spread_series(mode_trajectory(cfg, Mode::reverse, cfg.alpha.value, cfg.beta.value));
    const Trajectory sw = mode_trajectory(cfg, Mode::ico_step, cfg.alpha.value, cfg.beta.value);
    const auto swv = spread_series(sw);

    auto a = base_table(tag + "a_spread", {"t", "sigma_forward", "sigma_reverse", "sigma_ico_step"}, cfg);
    auto b = base_table(tag + "b_advantage", {"t", "advantage_over_forward", "advantage_over_reverse"}, cfg);
    for (std::size_t i = 0; i < sw.steps.size(); ++i) {
        const std::size_t t = sw.steps[i];
        a.add_row({static_cast<long long>(t), fwd[t], rev[t], swv[i]});
        b.add_row({static_cast<long long>(t), swv[i] - fwd[t], swv[i] - rev[t]});
    }
    return {a, b};
}

std::vector<ResultTable> spread_figure(const std::string& tag, const std::string& thetas, std::size_t steps) {
    const auto cfg = preset("mode = ico\nthetas = " + thetas + "\nsteps = " + std::to_string(steps) +
                            "\nobservables = spread\n");
    const auto s = compare_modes(cfg, Series::spread);
    return {mode_table(tag + "_spread", "sigma", cfg, s), advantage_table(tag + "_advantage", cfg, s)};
}

std::vector<ResultTable> fig3() {
    const auto cfg = preset("mode = ico\nk = 2\nthetas = pi/4, pi/6\nsteps = 100\nobservables = dist\n");
    const auto final_state = [&](Mode m) { return mode_trajectory(cfg, m, cfg.alpha.value, cfg.beta.value).states.back(); };
    const auto f = final_state(Mode::forward), r = final_state(Mode::reverse), i = final_state(Mode::ico);
    const auto prob = [](const WalkerState& s, long x) { return std::norm(s.amplitude(0, x)) + std::norm(s.amplitude(1, x)); };
    auto t = base_table("fig3_distribution", {"t", "x", "p_forward", "p_reverse", "p_ico"}, cfg);
    for (long x = -f.half_width(); x <= f.half_width(); ++x) {
        if ((x + static_cast<long>(cfg.steps)) % 2 != 0) continue;
        t.add_row({static_cast<long long>(cfg.steps), static_cast<long long>(x), prob(f, x), prob(r, x), prob(i, x)});
    }
    return {t};
}

std::vector<ResultTable> fig6() {
    const auto cfg = preset("mode = ico\nk = 2\nthetas = pi/4, pi/6\nsteps = 50\nobservables = blp\n");
    const auto d = compare_modes(cfg, Series::trace_distance);
    const std::vector<std::pair<std::string, std::string>> params{{"parameter_set", "theta1 = pi/4, theta2 = pi/6, N = 50"}};
    auto td = mode_table("fig6_trace_distance", "d", cfg, d);
    td.notes.insert(td.notes.end(), params.begin(), params.end());
    auto blp = base_table("fig6_blp", {"mode", "blp"}, cfg, params);
    blp.add_row({std::string("forward"), blp_measure(d.forward).value});
    blp.add_row({std::string("reverse"), blp_measure(d.reverse).value});
    blp.add_row({std::string("ico"), blp_measure(d.ico).value});
    return {td, blp};
}

std::vector<ResultTable> fig7() {
    const auto cfg = preset("mode = ico\nk = 2\nthetas = pi/4, pi/3\nsteps = 100\nobservables = concurrence, entropy\n");
    return {mode_table("fig7a_concurrence", "concurrence", cfg, compare_modes(cfg, Series::concurrence)),
            mode_table("fig7b_entropy", "entropy", cfg, compare_modes(cfg, Series::entropy))};
}

ResultTable fig8_panel(const std::string& name, const std::string& first) {
    const BLPByPeriod b = blp_versus_period(first, 50, 2, 25);
    double peak = 0.0;
    for (std::size_t i = 0; i < b.period.size(); ++i) peak = std::max({peak, b.forward[i], b.reverse[i], b.ico[i]});
    std::string thetas = first;
    for (int i = 1; i < 25; ++i) thetas += ", pi/4";
    const auto cfg = preset("mode = ico\nk = 25\nthetas = " + thetas + "\nsteps = 50\nobservables = blp\n");
    auto t = base_table(name,
                        {"k", "blp_forward", "blp_reverse", "blp_ico", "nblp_forward", "nblp_reverse", "nblp_ico"}, cfg,
                        {{"parameter_set", "theta1 = " + first + ", theta_i = pi/4 (i > 1), N = 50, k = 2..25"},
                         {"normalization", "nblp = blp / max over all modes and k in this panel"}});
    for (std::size_t i = 0; i < b.period.size(); ++i)
        t.add_row({static_cast<long long>(b.period[i]), b.forward[i], b.reverse[i], b.ico[i], b.forward[i] / peak,
                   b.reverse[i] / peak, b.ico[i] / peak});
    return t;
}

std::vector<ResultTable> fig9() {
    const auto asc = preset("mode = ico\nthetas = pi/4, pi/3, 5pi/12\nsteps = 100\nobservables = entropy, concurrence\n");
    const auto desc = preset("mode = ico\nthetas = 5pi/12, pi/3, pi/4\nsteps = 100\nobservables = entropy, concurrence\n");
    return {mode_table("fig9a_entropy_ascending", "entropy", asc, compare_modes(asc, Series::entropy)),
            mode_table("fig9b_entropy_descending", "entropy", desc, compare_modes(desc, Series::entropy)),
            mode_table("fig9c_concurrence_ascending", "concurrence", asc, compare_modes(asc, Series::concurrence)),
            mode_table("fig9d_concurrence_descending", "concurrence", desc, compare_modes(desc, Series::concurrence))};
}

} // namespace

ModeSeries compare_modes(const ExperimentConfig& config, Series series) {
    ModeSeries s;
    const Trajectory probe = mode_trajectory(config, Mode::forward, config.alpha.value, config.beta.value);
    s.t = step_column(probe);
    s.forward = series_of(config, Mode::forward, series);
    s.reverse = series_of(config, Mode::reverse, series);
    s.ico = series_of(config, Mode::ico, series);
    return s;
}

BLPByPeriod blp_versus_period(std::string_view first_theta, std::size_t steps, std::size_t k_min, std::size_t k_max) {
    BLPByPeriod b;
    const std::size_t n = k_max >= k_min ? k_max - k_min + 1 : 0;
    b.period.resize(n);
    b.forward.resize(n);
    b.reverse.resize(n);
    b.ico.resize(n);
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            const std::size_t k = k_min + static_cast<std::size_t>(i);
            std::string thetas(first_theta);
            for (std::size_t j = 1; j < k; ++j) thetas += ", pi/4";
            const auto cfg = parse_config("mode = ico\nthetas = " + thetas + "\nsteps = " + std::to_string(steps) +
                                          "\nobservables = blp\n");
            const ModeSeries d = compare_modes(cfg, Series::trace_distance);
            b.period[i] = k;
            b.forward[i] = blp_measure(d.forward).value;
            b.reverse[i] = blp_measure(d.reverse).value;
            b.ico[i] = blp_measure(d.ico).value;
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return b;
}

std::vector<std::string> figure_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"}; }

std::vector<ResultTable> figure_tables(std::string_view name) {
    if (name == "fig1") return switched_step_figure("fig1", "pi/6, pi/4");
    if (name == "fig2") return switched_step_figure("fig2", "pi/4, pi/6");
    if (name == "fig3") return fig3();
    if (name == "fig4") {
        auto t = spread_figure("fig4", "pi/4, pi/6", 100);
        t[0].name = "fig4a_spread";
        t[1].name = "fig4b_advantage";
        return t;
    }
    if (name == "fig5") {
        auto asc = spread_figure("fig5", "pi/6, pi/4, 5pi/12", 100);
        auto desc = spread_figure("fig5", "5pi/12, pi/4, pi/6", 100);
        asc[0].name = "fig5a_spread_ascending";
        asc[1].name = "fig5b_advantage_ascending";
        desc[0].name = "fig5c_spread_descending";
        desc[1].name = "fig5d_advantage_descending";
        return {asc[0], asc[1], desc[0], desc[1]};
    }
    if (name == "fig6") return fig6();
    if (name == "fig7") return fig7();
    if (name == "fig8") return {fig8_panel("fig8a_blp_vs_period", "pi/6"), fig8_panel("fig8b_blp_vs_period", "5pi/12")};
    if (name == "fig9") return fig9();
    throw ConfigError("unknown figure '" + std::string(name) + "' (fig1 .. fig9 or all)");
}

std::vector<std::filesystem::path> figure_suite(std::string_view name, const std::filesystem::path& outdir) {
    std::vector<std::string> names;
    if (name == "all")
        names = figure_names();
    else
        names.emplace_back(name);
    std::vector<std::filesystem::path> written;
    for (const auto& n : names) {
        for (const auto& table : figure_tables(n)) {
            const auto path = outdir / (table.name + ".csv");
            write_atomically(path, emit_csv(table));
            written.push_back(path);
        }
    }
    return written;
}

} // namespace qwalk
