// dgsp: command-line harness for distributional graph signal processing.
//
// Every subcommand reads a key=value config file, validates it (unknown keys
// are rejected), runs the corresponding module, and writes CSV/text outputs
// into --out. All numeric output uses 17 significant digits so reruns with
// the same config and seed are byte-identical.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dgsp/basechange.hpp"
#include "dgsp/filters.hpp"
#include "dgsp/graph.hpp"
#include "dgsp/infection.hpp"
#include "dgsp/io.hpp"
#include "dgsp/learning.hpp"
#include "dgsp/operator_space.hpp"
#include "dgsp/oracles.hpp"
#include "dgsp/sampling.hpp"
#include "dgsp/spectral.hpp"

namespace {

using namespace dgsp;

/// Input/config problems exit with code 1; anything thrown later (numerical
/// failures) exits with code 2.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Run the loading/validation phase of a subcommand, converting any failure
/// into a validation_error.
template <typename Fn>
auto load_phase(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const std::exception& e) {
        throw validation_error(e.what());
    }
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
};

struct LoadedConfig {
    KeyValueFile kv;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
};

std::string resolve_rel(const std::string& config_path, const std::string& p) {
    if (p.empty() || p[0] == '/') return p;
    auto pos = config_path.find_last_of('/');
    if (pos == std::string::npos) return p;
    return config_path.substr(0, pos) + "/" + p;
}

LoadedConfig load_config(const CommonArgs& args,
                         const std::vector<std::string>& allowed_keys,
                         bool seed_required) {
    return load_phase([&]() -> LoadedConfig {
        LoadedConfig cfg;
        cfg.kv = read_key_value_file(args.config_path);
        std::vector<std::string> allowed = allowed_keys;
        allowed.push_back("seed");
        allowed.push_back("out");
        cfg.kv.require_keys(allowed);
        cfg.out_dir = !args.out_dir.empty() ? args.out_dir
                                            : cfg.kv.get_or("out", "");
        if (cfg.out_dir.empty())
            throw std::runtime_error("no output directory (--out or out= key)");
        if (args.seed)
            cfg.seed = args.seed;
        else if (cfg.kv.has("seed"))
            cfg.seed = std::stoull(cfg.kv.get("seed"));
        if (seed_required && !cfg.seed)
            throw std::runtime_error(
                "this subcommand is stochastic; a seed is required "
                "(--seed or seed= key)");
        std::filesystem::create_directories(cfg.out_dir);
        return cfg;
    });
}

/// Log the fully resolved configuration (including the effective seed) so a
/// run can be reproduced from its output directory alone.
void write_resolved_config(const LoadedConfig& cfg, const std::string& name) {
    std::ofstream out(cfg.out_dir + "/resolved_config.txt");
    out << "subcommand=" << name << "\n";
    for (const auto& [k, v] : cfg.kv.entries)
        if (k != "seed" && k != "out") out << k << "=" << v << "\n";
    out << "out=" << cfg.out_dir << "\n";
    if (cfg.seed) out << "seed=" << *cfg.seed << "\n";
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(17);
    ss << x;
    return ss.str();
}

OperatorSpace load_space(const LoadedConfig& cfg, const CommonArgs& args,
                         const char* key = "space") {
    return load_phase([&] {
        return read_space_manifest(resolve_rel(args.config_path, cfg.kv.get(key)));
    });
}

Eigen::MatrixXd load_csv(const LoadedConfig& cfg, const CommonArgs& args,
                         const char* key) {
    return load_phase([&] {
        return read_csv_matrix(resolve_rel(args.config_path, cfg.kv.get(key)));
    });
}

SpectralKernel config_mask(const LoadedConfig& cfg, const OperatorSpace& space) {
    return load_phase([&] {
        auto masks = cfg.kv.get_all("mask");
        if (!masks.empty()) {
            // per-atom mask=r1,r2,c lines
            std::vector<MaskParams> per_atom;
            for (const auto& m : masks) {
                auto vals = parse_double_list(m);
                if (vals.size() != 3)
                    throw std::runtime_error("mask needs r1,r2,c: " + m);
                per_atom.push_back({vals[0], vals[1], static_cast<int>(vals[2])});
            }
            return frequency_mask(space, per_atom);
        }
        return frequency_mask(space, std::stod(cfg.kv.get("r1")),
                              std::stod(cfg.kv.get("r2")),
                              std::stoi(cfg.kv.get("c")));
    });
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const CommonArgs& args) {
    LoadedConfig cfg = load_config(args, {"space", "signals"}, false);
    OperatorSpace space = load_space(cfg, args);
    Eigen::MatrixXd signals = load_csv(cfg, args, "signals");
    if (signals.rows() != space.n())
        throw validation_error("signals row count does not match space size");
    write_resolved_config(cfg, "spectrum");

    std::ostringstream summary;
    summary.precision(17);
    summary << "# signal,norm_sq,weighted_energy,parseval_abs_diff\n";
    for (Eigen::Index c = 0; c < signals.cols(); ++c) {
        Signal f = signals.col(c);
        SpectralCoefficients g = fourier(space, f);
        write_csv_matrix(g.values,
                         cfg.out_dir + "/coefficients_" + std::to_string(c) +
                             ".csv",
                         "spectral coefficients, rows = atoms");
        // per-atom energy profile: w_j * coefficient^2
        Eigen::MatrixXd energy = g.values.array().square().matrix();
        for (Eigen::Index j = 0; j < energy.rows(); ++j)
            energy.row(j) *= space.weights(j);
        write_csv_matrix(energy,
                         cfg.out_dir + "/energy_" + std::to_string(c) + ".csv",
                         "weighted squared coefficients, rows = atoms");
        double total = energy.sum();
        summary << c << "," << f.squaredNorm() << "," << total << ","
                << std::abs(total - f.squaredNorm()) << "\n";
    }
    write_text(cfg.out_dir + "/summary.csv", summary.str());
    return 0;
}

int cmd_denoise(const CommonArgs& args) {
    LoadedConfig cfg = load_config(
        args, {"space", "signals", "r1", "r2", "c", "mask", "clean", "labels"},
        false);
    OperatorSpace space = load_space(cfg, args);
    Eigen::MatrixXd signals = load_csv(cfg, args, "signals");
    if (signals.rows() != space.n())
        throw validation_error("signals row count does not match space size");
    SpectralKernel mask = config_mask(cfg, space);
    std::optional<Eigen::MatrixXd> clean, labels;
    if (cfg.kv.has("clean")) clean = load_csv(cfg, args, "clean");
    if (cfg.kv.has("labels")) labels = load_csv(cfg, args, "labels");
    write_resolved_config(cfg, "denoise");

    Eigen::MatrixXd filtered(signals.rows(), signals.cols());
    for (Eigen::Index c = 0; c < signals.cols(); ++c)
        filtered.col(c) = convolve(space, mask, signals.col(c));
    write_csv_matrix(filtered, cfg.out_dir + "/filtered.csv",
                     "mask-filtered signals");

    std::ostringstream summary;
    summary.precision(17);
    summary << "# signal,mse_vs_input" << (clean ? ",mse_vs_clean" : "")
            << (labels ? ",accuracy" : "") << "\n";
    for (Eigen::Index c = 0; c < signals.cols(); ++c) {
        summary << c << ","
                << (filtered.col(c) - signals.col(c)).squaredNorm() /
                       static_cast<double>(signals.rows());
        if (clean) {
            Eigen::Index cc = (clean->cols() == signals.cols()) ? c : 0;
            summary << ","
                    << (filtered.col(c) - clean->col(cc)).squaredNorm() /
                           static_cast<double>(signals.rows());
        }
        if (labels) {
            Eigen::Index lc = (labels->cols() == signals.cols()) ? c : 0;
            int hits = 0;
            for (Eigen::Index v = 0; v < signals.rows(); ++v)
                if (std::lround(filtered(v, c)) ==
                    std::lround((*labels)(v, lc)))
                    ++hits;
            summary << ","
                    << static_cast<double>(hits) /
                           static_cast<double>(signals.rows());
        }
        summary << "\n";
    }
    write_text(cfg.out_dir + "/summary.csv", summary.str());
    return 0;
}

int cmd_filter(const CommonArgs& args) {
    LoadedConfig cfg = load_config(
        args, {"space", "signals", "kernel", "r1", "r2", "c", "mask", "mode"},
        false);
    OperatorSpace space = load_space(cfg, args);
    Eigen::MatrixXd signals = load_csv(cfg, args, "signals");
    if (signals.rows() != space.n())
        throw validation_error("signals row count does not match space size");
    SpectralKernel kernel;
    if (cfg.kv.has("kernel")) {
        kernel.values = load_csv(cfg, args, "kernel");
        kernel.space_id = space.id;
        if (kernel.values.rows() != static_cast<Eigen::Index>(space.num_atoms()) ||
            kernel.values.cols() != space.n())
            throw validation_error("kernel CSV must be (#atoms) x n");
    } else {
        kernel = config_mask(cfg, space);
    }
    const std::string mode = cfg.kv.get_or("mode", "spectral");
    if (mode != "spectral" && mode != "polynomial")
        throw validation_error("mode must be spectral or polynomial");
    write_resolved_config(cfg, "filter");

    Eigen::MatrixXd m;
    if (mode == "polynomial")
        m = apply_polynomial_rep(space, polynomial_rep(space, kernel));
    else
        m = filter_matrix(space, kernel);
    write_csv_matrix(m, cfg.out_dir + "/filter_matrix.csv",
                     "dense filter matrix (" + mode + " path)");
    Eigen::MatrixXd filtered = m * signals;
    write_csv_matrix(filtered, cfg.out_dir + "/filtered.csv",
                     "filtered signals");
    return 0;
}

int cmd_sample(const CommonArgs& args) {
    LoadedConfig cfg = load_config(
        args, {"space", "signals", "band", "j", "cond_threshold"}, true);
    OperatorSpace space = load_space(cfg, args);
    Eigen::MatrixXd signals = load_csv(cfg, args, "signals");
    if (signals.rows() != space.n())
        throw validation_error("signals row count does not match space size");
    const int band_count = load_phase([&] { return std::stoi(cfg.kv.get("band")); });
    const int j = load_phase([&] { return std::stoi(cfg.kv.get("j")); });
    const double cond_threshold = load_phase(
        [&] { return std::stod(cfg.kv.get_or("cond_threshold", "1e8")); });
    write_resolved_config(cfg, "sample");

    BandSpec y = lowpass_band(space, band_count);
    std::mt19937_64 rng(*cfg.seed);
    RecoveryPlan plan =
        plan_recovery(space, y, j, rng, std::nullopt, cond_threshold);

    Eigen::MatrixXd vert(static_cast<Eigen::Index>(plan.vertices.size()), 1);
    for (std::size_t r = 0; r < plan.vertices.size(); ++r)
        vert(static_cast<Eigen::Index>(r), 0) = plan.vertices[r];
    write_csv_matrix(vert, cfg.out_dir + "/vertices.csv", "sampled vertices");

    Eigen::MatrixXd recovered(signals.rows(), signals.cols());
    std::ostringstream summary;
    summary.precision(17);
    summary << "# lambda_j=" << fmt(plan.lambda_j) << " sigma="
            << fmt(plan.sigma) << " log_abs_det=" << fmt(plan.log_abs_det)
            << "\n";
    summary << "# signal,eps,error,bound_a,bound_b\n";
    for (Eigen::Index c = 0; c < signals.cols(); ++c) {
        Signal f = signals.col(c);
        double eps = bandlimit_residual(space, y, f);
        Eigen::VectorXd f_obs(static_cast<Eigen::Index>(plan.vertices.size()));
        for (std::size_t r = 0; r < plan.vertices.size(); ++r)
            f_obs(static_cast<Eigen::Index>(r)) = f(plan.vertices[r]);
        RecoveryResult res = recover(plan, f_obs, eps);
        recovered.col(c) = res.f;
        summary << c << "," << eps << "," << (res.f - f).norm() << ","
                << res.bound_a << "," << res.bound_b << "\n";
    }
    write_csv_matrix(recovered, cfg.out_dir + "/recovered.csv",
                     "recovered signals");
    write_text(cfg.out_dir + "/summary.csv", summary.str());
    return 0;
}

int cmd_learn(const CommonArgs& args) {
    LoadedConfig cfg = load_config(
        args,
        {"space", "signals", "loss", "cutoff", "band", "eps_tau", "labels",
         "gamma", "method", "prior", "chain_length", "burn_in", "thinning",
         "step_size"},
        true);
    OperatorSpace space = load_space(cfg, args);
    Eigen::MatrixXd signals = load_csv(cfg, args, "signals");
    if (signals.rows() != space.n())
        throw validation_error("signals row count does not match space size");
    const std::string loss_name = load_phase([&] { return cfg.kv.get("loss"); });
    const double gamma =
        load_phase([&] { return std::stod(cfg.kv.get_or("gamma", "10")); });
    const std::string method = cfg.kv.get_or("method", "exact");
    const std::string prior_name = cfg.kv.get_or("prior", "uniform");
    if (method != "exact" && method != "mh")
        throw validation_error("method must be exact or mh");
    if (prior_name != "uniform" && prior_name != "cells")
        throw validation_error("prior must be uniform or cells");

    AtomLoss loss;
    if (loss_name == "compaction") {
        const int cutoff = load_phase([&] { return std::stoi(cfg.kv.get("cutoff")); });
        loss = [&signals, cutoff](const ShiftOperator& op, std::size_t i) {
            return loss_spectral_compaction(
                op, signals.col(static_cast<Eigen::Index>(i)), cutoff);
        };
    } else if (loss_name == "detection") {
        auto band_vals =
            load_phase([&] { return parse_double_list(cfg.kv.get("band")); });
        std::vector<int> band;
        for (double b : band_vals) band.push_back(static_cast<int>(b));
        const double eps_tau =
            load_phase([&] { return std::stod(cfg.kv.get("eps_tau")); });
        Eigen::MatrixXd labels = load_csv(cfg, args, "labels");
        if (labels.size() < signals.cols())
            throw validation_error("need one label per signal column");
        loss = [&signals, band, eps_tau, labels](const ShiftOperator& op,
                                                 std::size_t i) {
            int label = static_cast<int>(
                std::lround(labels(static_cast<Eigen::Index>(i) % labels.rows(),
                                   static_cast<Eigen::Index>(i) / labels.rows())));
            return loss_zero_one_detection(
                op, signals.col(static_cast<Eigen::Index>(i)), band, eps_tau,
                label);
        };
    } else {
        throw validation_error("loss must be compaction or detection");
    }
    write_resolved_config(cfg, "learn");

    Eigen::VectorXd theta = empirical_risk(
        space, static_cast<std::size_t>(signals.cols()), loss);
    write_csv_matrix(theta, cfg.out_dir + "/theta.csv", "empirical risk per atom");

    Eigen::VectorXd prior;  // empty = uniform
    if (prior_name == "cells") {
        if (!space.has_params())
            throw validation_error("prior=cells needs a parametrized space");
        auto cells = node_cell_masses(space.params, 0.0, 1.0);
        prior.resize(static_cast<Eigen::Index>(cells.size()));
        for (std::size_t k = 0; k < cells.size(); ++k)
            prior(static_cast<Eigen::Index>(k)) = cells[k];
    }

    std::ostringstream diag;
    diag.precision(17);
    Eigen::VectorXd weights;
    if (method == "exact") {
        weights = gibbs_posterior_exact(theta, gamma, prior);
        diag << "method=exact\ngamma=" << gamma << "\n";
    } else {
        if (!space.has_params())
            throw validation_error("method=mh needs a parametrized space");
        GibbsConfig mh;
        mh.gamma = gamma;
        mh.seed = *cfg.seed;
        mh.chain_length = load_phase(
            [&] { return std::stol(cfg.kv.get_or("chain_length", "50000")); });
        mh.burn_in = load_phase(
            [&] { return std::stol(cfg.kv.get_or("burn_in", "5000")); });
        mh.thinning = load_phase(
            [&] { return std::stol(cfg.kv.get_or("thinning", "5")); });
        mh.step_size = load_phase(
            [&] { return std::stod(cfg.kv.get_or("step_size", "0.05")); });
        // piecewise-constant risk: nearest quadrature node
        auto risk = [&space, &theta](double t) {
            std::size_t best = 0;
            double bd = std::abs(t - space.params[0]);
            for (std::size_t k = 1; k < space.params.size(); ++k) {
                double d = std::abs(t - space.params[k]);
                if (d < bd) {
                    bd = d;
                    best = k;
                }
            }
            return theta(static_cast<Eigen::Index>(best));
        };
        MhResult res = metropolis_hastings(space, risk, mh);
        weights = res.histogram;
        diag << "method=mh\ngamma=" << gamma << "\nacceptance_rate="
             << res.acceptance_rate << "\ness=" << res.ess << "\n";
        for (const auto& w : res.warnings) diag << "warning=" << w << "\n";
    }
    write_csv_matrix(weights, cfg.out_dir + "/weights.csv",
                     "learned weights per atom");
    write_text(cfg.out_dir + "/diagnostics.txt", diag.str());
    return 0;
}

int cmd_basechange(const CommonArgs& args) {
    LoadedConfig cfg = load_config(
        args,
        {"space_z", "space_x", "map", "construction", "kernel", "signals"},
        false);
    OperatorSpace z_space = load_space(cfg, args, "space_z");
    OperatorSpace x_space = load_space(cfg, args, "space_x");
    BaseChangeMap h = load_phase([&] {
        return read_base_change_manifest(
            resolve_rel(args.config_path, cfg.kv.get("map")),
            x_space.num_atoms());
    });
    if (h.num_z() != z_space.num_atoms())
        throw validation_error("map size does not match Z space");
    const std::string construction =
        load_phase([&] { return cfg.kv.get("construction"); });
    write_resolved_config(cfg, "basechange");

    if (construction == "pushforward-measure") {
        OperatorSpace pushed = pushforward_measure(h, z_space, x_space);
        write_csv_matrix(pushed.weights, cfg.out_dir + "/weights.csv",
                         "pushforward measure on X atoms");
        return 0;
    }
    if (construction == "pullback-measure") {
        OperatorSpace pulled = pullback_measure(h, x_space, z_space);
        write_csv_matrix(pulled.weights, cfg.out_dir + "/weights.csv",
                         "pullback measure on Z atoms");
        return 0;
    }
    if (construction == "pullback-conv" || construction == "pushforward-conv") {
        SpectralKernel gamma;
        gamma.values = load_csv(cfg, args, "kernel");
        gamma.space_id = x_space.id;
        if (gamma.values.rows() != static_cast<Eigen::Index>(x_space.num_atoms()) ||
            gamma.values.cols() != x_space.n())
            throw validation_error("kernel CSV must be (#X atoms) x n");
        Eigen::MatrixXd signals = load_csv(cfg, args, "signals");
        if (signals.rows() != z_space.n())
            throw validation_error("signals row count does not match space size");
        Eigen::MatrixXd out(signals.rows(), signals.cols());
        for (Eigen::Index c = 0; c < signals.cols(); ++c)
            out.col(c) =
                (construction == "pullback-conv")
                    ? filter_pullback_conv(h, z_space, gamma, signals.col(c))
                    : filter_pushforward_conv(h, z_space, x_space, gamma,
                                              signals.col(c));
        write_csv_matrix(out, cfg.out_dir + "/filtered.csv",
                         construction + " filtered signals");
        return 0;
    }
    throw validation_error(
        "construction must be one of pushforward-measure, pullback-measure, "
        "pullback-conv, pushforward-conv");
}

int cmd_infect(const CommonArgs& args) {
    LoadedConfig cfg = load_config(
        args,
        {"rows", "cols", "fractions", "candidate_fraction",
         "infection_fraction", "trials", "trees_per_candidate", "gamma"},
        true);
    InfectionExperimentConfig config;
    load_phase([&]() -> int {
        config.rows = std::stoi(cfg.kv.get_or("rows", "15"));
        config.cols = std::stoi(cfg.kv.get_or("cols", "15"));
        if (cfg.kv.has("fractions"))
            config.fast_fractions = parse_double_list(cfg.kv.get("fractions"));
        config.candidate_fraction =
            std::stod(cfg.kv.get_or("candidate_fraction", "0.2"));
        config.infection_fraction =
            std::stod(cfg.kv.get_or("infection_fraction", "0.4"));
        config.trials = std::stoi(cfg.kv.get_or("trials", "200"));
        config.trees_per_candidate =
            std::stoi(cfg.kv.get_or("trees_per_candidate", "5"));
        config.gamma = std::stod(cfg.kv.get_or("gamma", "2"));
        return 0;
    });
    config.seed = *cfg.seed;
    write_resolved_config(cfg, "infect");

    auto rows = run_experiment(config);
    std::ostringstream table, errors;
    table.precision(17);
    errors.precision(17);
    table << "# fraction,fast_edges_requested,fast_edges_mean,"
             "mean_error_with,mean_error_without,improvement_pct\n";
    errors << "# fraction,trial,error_with,error_without\n";
    for (const auto& row : rows) {
        table << row.fast_fraction << "," << row.fast_edges_requested << ","
              << row.fast_edges_mean << "," << row.mean_error_with << ","
              << row.mean_error_without << "," << row.improvement_pct << "\n";
        for (std::size_t t = 0; t < row.errors_with.size(); ++t)
            errors << row.fast_fraction << "," << t << ","
                   << row.errors_with[t] << "," << row.errors_without[t]
                   << "\n";
    }
    write_text(cfg.out_dir + "/table.csv", table.str());
    write_text(cfg.out_dir + "/errors.csv", errors.str());
    return 0;
}

int cmd_selftest(std::uint64_t seed) {
    auto results = oracles::run_selftest(seed);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distributional graph signal processing toolkit"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* desc;
        int (*run)(const CommonArgs&);
    };
    const std::vector<Sub> subs = {
        {"spectrum", "distributional Fourier coefficients and energy profiles",
         cmd_spectrum},
        {"denoise", "two-level frequency mask denoising", cmd_denoise},
        {"filter", "convolution filter application", cmd_filter},
        {"sample", "bandlimited sampling and recovery", cmd_sample},
        {"learn", "Gibbs/Metropolis-Hastings weight learning", cmd_learn},
        {"basechange", "measure and filter base change", cmd_basechange},
        {"infect", "epidemic source localization experiment", cmd_infect},
    };

    std::vector<CommonArgs> sub_args(subs.size());
    std::vector<CLI::App*> sub_apps;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].desc);
        sub->add_option("--config", sub_args[i].config_path,
                        "key=value config file")
            ->required();
        sub->add_option("--out", sub_args[i].out_dir,
                        "output directory (overrides out= key)");
        sub->add_option("--seed", sub_args[i].seed,
                        "RNG seed (overrides seed= key)");
        sub_apps.push_back(sub);
    }
    std::uint64_t selftest_seed = 0;
    CLI::App* selftest =
        app.add_subcommand("selftest", "run the brute-force invariant suite");
    selftest->add_option("--seed", selftest_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (selftest->parsed()) return cmd_selftest(selftest_seed);
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (sub_apps[i]->parsed()) return subs[i].run(sub_args[i]);
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
