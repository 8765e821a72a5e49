#include "qwalk/experiment.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

std::string format_cell(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                if (v.find_first_of(",\"\r\n") == std::string::npos) return v;
                std::string quoted = "\"";
                for (char c : v) {
                    if (c == '"') quoted.push_back('"');
                    quoted.push_back(c);
                }
                quoted.push_back('"');
                return quoted;
            } else {
                char buf[64];
                const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
                return std::string(buf, ptr);
            }
        },
        cell);
}

PeriodicWalkSpec forward_spec(const ExperimentConfig& c) {
    PeriodicWalkSpec spec{c.theta_values(), c.steps, CausalOrder::forward, {}};
    if (!c.permutation.empty()) {
        spec.order = CausalOrder::explicit_permutation;
        spec.permutation = c.permutation;
    }
    return spec;
}

} // namespace

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw DimensionError("row has " + std::to_string(row.size()) + " cells, table '" + name + "' has " +
                             std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::string engine_version() { return std::string("qwalk ") + QWALK_VERSION; }

std::vector<std::pair<std::string, std::string>> convention_notes() {
    return {{"postselect", "|+> = (|0> + |1>)/sqrt(2)"},
            {"switch_state", "cos(theta_s)|0> + sin(theta_s)|1>"},
            {"entropy_base", "2"},
            {"concurrence", "sqrt(2 (1 - Tr rho_c^2))"},
            {"blp_pair", "|+>, |->"},
            {"reverse_order", "block reversal"},
            {"sequence_tail", "cyclic truncation of the period block"}};
}

std::string emit_csv(const ResultTable& table) {
    std::ostringstream os;
    os << "# " << engine_version() << '\n';
    os << "# table = " << table.name << '\n';
    if (!table.config_text.empty()) {
        os << "# [config]\n";
        std::istringstream in(table.config_text);
        for (std::string line; std::getline(in, line);) os << "# " << line << '\n';
    }
    if (!table.notes.empty()) {
        os << "# [conventions]\n";
        for (const auto& [k, v] : table.notes) os << "# " << k << " = " << v << '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << format_cell(table.columns[i]);
    os << "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
        os << "\r\n";
    }
    return os.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Trajectory mode_trajectory(const ExperimentConfig& config, Mode mode, Complex alpha, Complex beta) {
    const WalkerState initial = make_localized_state(alpha, beta, 0, config.lattice_size());
    const EvolveOptions opts{config.allow_wrap};
    const PeriodicWalkSpec fwd = forward_spec(config);
    const double theta_s = config.theta_s.real();
    switch (mode) {
    case Mode::forward: return evolve_definite(initial, fwd, opts);
    case Mode::reverse: return evolve_definite(initial, fwd.reversed(), opts);
    case Mode::ico: return activation_trajectory(initial, fwd, fwd.reversed(), theta_s, opts);
    case Mode::ico_step: {
        if (config.period != 2) throw SpecError("ico-step needs a 2-period walk");
        const auto th = config.theta_values();
        return switched_step_evolve(initial, th[0], th[1], theta_s, config.steps, opts);
    }
    case Mode::full_ico: return full_activation_trajectory(initial, config.theta_values(), config.steps, opts);
    }
    throw SpecError("unknown mode");
}

std::vector<double> trace_distance_series(const ExperimentConfig& config, Mode mode) {
    const double h = 1.0 / std::numbers::sqrt2;
    const auto plus = coin_trajectory(mode_trajectory(config, mode, h, h));
    const auto minus = coin_trajectory(mode_trajectory(config, mode, h, -h));
    std::vector<double> d;
    d.reserve(plus.size());
    for (std::size_t t = 0; t < plus.size(); ++t) d.push_back(trace_distance(plus[t], minus[t]));
    return d;
}

std::vector<double> spread_series(const Trajectory& traj) {
    std::vector<double> s;
    for (const auto& st : traj.states) s.push_back(spread(probability_distribution(st)));
    return s;
}

std::vector<double> entropy_series(const Trajectory& traj) {
    std::vector<double> s;
    for (const auto& rho : coin_trajectory(traj)) s.push_back(entanglement_entropy(rho));
    return s;
}

std::vector<double> concurrence_series(const Trajectory& traj) {
    std::vector<double> s;
    for (const auto& rho : coin_trajectory(traj)) s.push_back(concurrence(rho));
    return s;
}

std::vector<ResultTable> run_experiment(const ExperimentConfig& config) {
    const std::string cfg = format_config(config);
    const auto table = [&](std::string name, std::vector<std::string> cols) {
        ResultTable t{std::move(name), std::move(cols), {}, cfg, convention_notes()};
        return t;
    };
    std::vector<ResultTable> out;

    const bool needs_walk = config.wants(Observable::dist) || config.wants(Observable::spread) ||
                            config.wants(Observable::entropy) || config.wants(Observable::concurrence);
    Trajectory traj;
    if (needs_walk) {
        traj = mode_trajectory(config, config.mode, config.alpha.value, config.beta.value);
        for (const auto& s : traj.states)
            if (!s.all_finite()) throw DomainError("non-finite amplitude in trajectory");
    }
    const auto t_of = [&](std::size_t i) { return static_cast<long long>(traj.steps[i]); };

    for (Observable o : config.observables) {
        switch (o) {
        case Observable::dist: {
            auto t = table("dist", {"t", "x", "probability"});
            for (std::size_t i = 0; i < traj.states.size(); ++i)
                for (const auto& [x, p] : probability_distribution(traj.states[i])) t.add_row({t_of(i), static_cast<long long>(x), p});
            out.push_back(std::move(t));
            break;
        }
        case Observable::spread: {
            auto t = table("spread", {"t", "sigma"});
            const auto s = spread_series(traj);
            for (std::size_t i = 0; i < s.size(); ++i) t.add_row({t_of(i), s[i]});
            out.push_back(std::move(t));
            break;
        }
        case Observable::entropy: {
            auto t = table("entropy", {"t", "entropy"});
            const auto s = entropy_series(traj);
            for (std::size_t i = 0; i < s.size(); ++i) t.add_row({t_of(i), s[i]});
            out.push_back(std::move(t));
            break;
        }
        case Observable::concurrence: {
            auto t = table("concurrence", {"t", "concurrence"});
            const auto s = concurrence_series(traj);
            for (std::size_t i = 0; i < s.size(); ++i) t.add_row({t_of(i), s[i]});
            out.push_back(std::move(t));
            break;
        }
        case Observable::td:
        case Observable::blp: {
            const auto d = trace_distance_series(config, config.mode);
            const double h = 1.0 / std::numbers::sqrt2;
            const auto steps = mode_trajectory(config, config.mode, h, h).steps;
            if (o == Observable::td) {
                auto t = table("td", {"t", "d"});
                for (std::size_t i = 0; i < d.size(); ++i) t.add_row({static_cast<long long>(steps[i]), d[i]});
                out.push_back(std::move(t));
            } else {
                const BLPResult r = blp_measure(d);
                auto t = table("blp", {"blp", "revival_count"});
                std::string intervals;
                for (const auto& iv : r.revivals) {
                    if (!intervals.empty()) intervals += ";";
                    intervals += std::to_string(steps[iv.start]) + "-" + std::to_string(steps[iv.end]);
                }
                t.notes.emplace_back("revival_intervals", intervals.empty() ? "none" : intervals);
                t.add_row({r.value, static_cast<long long>(r.revivals.size())});
                out.push_back(std::move(t));
            }
            break;
        }
        }
    }
    return out;
}

} // namespace qwalk
