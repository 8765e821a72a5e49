#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/figures.hpp"
#include "qwalk/verify.hpp"

namespace fs = std::filesystem;
using namespace qwalk;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

struct SimulateArgs {
    std::string config_path;
    std::string mode = "forward";
    std::string thetas;
    std::string theta_s;
    std::string alpha, beta;
    std::string observables;
    std::string permutation;
    std::size_t k = 0;
    std::size_t steps = 0;
    std::size_t lattice = 0;
    bool allow_wrap = false;
    std::string out;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string config_from_flags(const SimulateArgs& a) {
    std::ostringstream os;
    os << "mode = " << a.mode << "\n";
    if (a.k) os << "k = " << a.k << "\n";
    if (!a.thetas.empty()) os << "thetas = " << a.thetas << "\n";
    if (!a.theta_s.empty()) os << "theta_s = " << a.theta_s << "\n";
    if (a.steps) os << "steps = " << a.steps << "\n";
    if (!a.alpha.empty()) os << "alpha = " << a.alpha << "\n";
    if (!a.beta.empty()) os << "beta = " << a.beta << "\n";
    if (!a.permutation.empty()) os << "permutation = " << a.permutation << "\n";
    if (!a.observables.empty()) os << "observables = " << a.observables << "\n";
    if (a.lattice) os << "lattice = " << a.lattice << "\n";
    if (a.allow_wrap) os << "allow_wrap = true\n";
    return os.str();
}

void emit(const std::vector<ResultTable>& tables, const std::string& out) {
    if (out.empty()) {
        for (const auto& t : tables) std::cout << emit_csv(t);
        return;
    }
    if (tables.size() == 1) {
        write_atomically(out, emit_csv(tables.front()));
        std::cout << out << "\n";
        return;
    }
    const fs::path base(out);
    for (const auto& t : tables) {
        fs::path p = base.parent_path() / (base.stem().string() + "_" + t.name + base.extension().string());
        write_atomically(p, emit_csv(t));
        std::cout << p.string() << "\n";
    }
}

int run_simulate(const SimulateArgs& a) {
    ExperimentConfig cfg = parse_config(a.config_path.empty() ? config_from_flags(a) : read_file(a.config_path));
    std::string out = a.out.empty() ? cfg.out : a.out;
    emit(run_experiment(cfg), out);
    return 0;
}

int run_verify(const std::string& which, double tol) {
    VerifyReport r;
    if (which == "lemma")
        r = verify_lemma(tol);
    else if (which == "expansion")
        r = verify_expansion(tol);
    else
        r = verify_switch(tol);
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " (tol " << tol << ")\n";
    return r.pass ? 0 : kExitNumerical;
}

ExperimentConfig two_period(const std::string& mode, const std::string& thetas, std::size_t steps,
                            const std::string& theta_s, const std::string& observables) {
    return parse_config("mode = " + mode + "\nthetas = " + thetas + "\nsteps = " + std::to_string(steps) +
                        "\ntheta_s = " + theta_s + "\nobservables = " + observables + "\n");
}

int run_blp(const std::string& thetas, std::size_t steps, const std::string& theta_s, const std::string& out) {
    const auto cfg = two_period("ico", thetas, steps, theta_s, "td,blp");
    const auto d = compare_modes(cfg, Series::trace_distance);
    ResultTable t{"blp", {"mode", "blp", "revival_count"}, {}, format_config(cfg), convention_notes()};
    const auto row = [&](const char* name, const std::vector<double>& s) {
        const BLPResult r = blp_measure(s);
        t.add_row({std::string(name), r.value, static_cast<long long>(r.revivals.size())});
    };
    row("forward", d.forward);
    row("reverse", d.reverse);
    row("ico", d.ico);
    emit({t}, out);
    return 0;
}

int run_entanglement(const std::string& thetas, std::size_t steps, const std::string& theta_s, const std::string& out) {
    const auto cfg = two_period("ico", thetas, steps, theta_s, "entropy,concurrence");
    const auto s = compare_modes(cfg, Series::entropy);
    const auto c = compare_modes(cfg, Series::concurrence);
    ResultTable t{"entanglement",
                  {"t", "entropy_forward", "entropy_reverse", "entropy_ico", "concurrence_forward",
                   "concurrence_reverse", "concurrence_ico"},
                  {},
                  format_config(cfg),
                  convention_notes()};
    for (std::size_t i = 0; i < s.t.size(); ++i)
        t.add_row({s.t[i], s.forward[i], s.reverse[i], s.ico[i], c.forward[i], c.reverse[i], c.ico[i]});
    emit({t}, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time quantum walks under definite and indefinite causal order"};
    app.set_version_flag("--version", engine_version());
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one experiment and write its CSV tables");
    auto* cfg_opt = simulate->add_option("--config", sim.config_path, "Config file (key = value lines)")->check(CLI::ExistingFile);
    const std::vector<CLI::Option*> flag_opts{
        simulate->add_option("--mode", sim.mode, "forward|reverse|ico|ico-step|full-ico"),
        simulate->add_option("--k", sim.k, "Period"),
        simulate->add_option("--thetas", sim.thetas, "Comma-separated coin angles, e.g. pi/4,pi/6"),
        simulate->add_option("--theta-s", sim.theta_s, "Switch angle"),
        simulate->add_option("--steps", sim.steps, "Number of steps N"),
        simulate->add_option("--alpha", sim.alpha, "Initial coin amplitude of |0>"),
        simulate->add_option("--beta", sim.beta, "Initial coin amplitude of |1>"),
        simulate->add_option("--permutation", sim.permutation, "Explicit 1-based block order"),
        simulate->add_option("--observables", sim.observables, "Subset of dist,spread,td,blp,entropy,concurrence"),
        simulate->add_option("--lattice", sim.lattice, "Lattice size L (odd)"),
        simulate->add_flag("--allow-wrap", sim.allow_wrap, "Permit L < 2N+3"),
    };
    for (auto* o : flag_opts) cfg_opt->excludes(o);
    simulate->add_option("--out", sim.out, "Output CSV path (stdout if omitted)");

    std::string fig_name;
    std::string outdir = "figures";
    auto* figures = app.add_subcommand("figures", "Write the CSV panels of a named figure");
    figures->add_option("name", fig_name, "fig1 .. fig9 or all")->required();
    figures->add_option("--outdir", outdir, "Output directory");

    std::string which;
    double tol = 1e-10;
    auto* verify = app.add_subcommand("verify", "Check an operator identity");
    verify->add_option("which", which, "lemma|expansion|switch")->required()->check(CLI::IsMember({"lemma", "expansion", "switch"}));
    verify->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);

    std::string thetas_blp = "pi/4,pi/6", ts_blp = "pi/4", out_blp;
    std::size_t steps_blp = 50;
    auto* blp = app.add_subcommand("blp", "BLP measure for forward, reverse and causally activated 2-period walks");
    blp->add_option("--thetas", thetas_blp, "Coin angles");
    blp->add_option("--steps", steps_blp, "Number of steps");
    blp->add_option("--theta-s", ts_blp, "Switch angle");
    blp->add_option("--out", out_blp, "Output CSV path");

    std::string thetas_ent = "pi/4,pi/3", ts_ent = "pi/4", out_ent;
    std::size_t steps_ent = 100;
    auto* ent = app.add_subcommand("entanglement", "Coin-position entropy and concurrence for the three modes");
    ent->add_option("--thetas", thetas_ent, "Coin angles");
    ent->add_option("--steps", steps_ent, "Number of steps");
    ent->add_option("--theta-s", ts_ent, "Switch angle");
    ent->add_option("--out", out_ent, "Output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*simulate) return run_simulate(sim);
        if (*figures) {
            for (const auto& p : figure_suite(fig_name, outdir)) std::cout << p.string() << "\n";
            return 0;
        }
        if (*verify) return run_verify(which, tol);
        if (*blp) return run_blp(thetas_blp, steps_blp, ts_blp, out_blp);
        if (*ent) return run_entanglement(thetas_ent, steps_ent, ts_ent, out_ent);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
