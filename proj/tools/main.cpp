// Command-line front end: one subcommand per experiment plus direct access
// to the coupling and inference primitives. Every run that produces files
// also writes a manifest.json with the fully resolved configuration, so a
// run can be reproduced bit for bit from its output directory.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "entropic/experiments.hpp"
#include "entropic/io.hpp"
#include "entropic/tuebingen.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace entropic;

namespace {

constexpr const char* kVersion = "1.0.0";

struct CommonOpts {
    std::uint64_t seed = 1;
    unsigned workers = 0;
    std::string out = ".";
    std::string config;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--seed", c.seed, "master seed (all randomness derives from it)");
    cmd->add_option("--workers", c.workers, "worker threads (0 = all cores)");
    cmd->add_option("--out", c.out, "output directory");
    cmd->add_option("--config", c.config, "JSON config file (flags override it)");
}

// Flag > config > default: pull a value from the config JSON only when the
// flag was not given on the command line.
template <typename T>
void merge(const CLI::App* cmd, const json& cfg, const std::string& flag,
           const std::string& key, T& value) {
    if (cmd->count(flag) == 0 && cfg.contains(key)) value = cfg.at(key).get<T>();
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    return json::parse(read_file(path));
}

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const CommonOpts& common, const json& params,
                    double wall_seconds) {
    json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["seed"] = common.seed;
    m["workers"] = common.workers;
    m["params"] = params;
    m["wall_time_s"] = wall_seconds;
    write_file(out_dir / "manifest.json", m.dump(2));
}

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

Criterion parse_criterion(const std::string& name) {
    if (name == "exogenous") return Criterion::Exogenous;
    if (name == "total") return Criterion::Total;
    if (name == "conditional") return Criterion::Conditional;
    if (name == "observed") return Criterion::Observed;
    throw std::invalid_argument("unknown criterion: " + name);
}

int run_mec(const CommonOpts& common, const std::string& input) {
    const auto marginals = marginals_from_json(read_file(input));
    const Coupling c = greedy_mec(marginals);
    const auto check = validate_coupling(c, marginals, 1e-9);
    if (!check.pass)
        throw std::runtime_error("coupling failed validation: " + check.message);

    fs::create_directories(common.out);
    write_file(fs::path(common.out) / "coupling.json", coupling_to_json(c));
    std::printf("%.12g\n", coupling_entropy(c));
    return 0;
}

int run_infer(const CommonOpts& common, const std::string& input,
              const std::string& criterion_name, std::int64_t min_slice,
              double threshold, std::size_t nx, std::size_t ny) {
    (void)common;
    const SampleSet loaded = samples_from_csv(read_file(input));
    if (loaded.pairs.empty())
        throw std::invalid_argument("sample file contains no rows");

    SampleSet s = loaded;
    if (nx) {
        if (loaded.n > nx)
            throw std::invalid_argument("samples exceed the declared X support");
        s.n = nx;
    }
    if (ny) {
        if (loaded.m > ny)
            throw std::invalid_argument("samples exceed the declared Y support");
        s.m = ny;
    }

    const auto [counts, plugin] = plugin_joint(s);
    const Criterion crit = parse_criterion(criterion_name);
    Verdict v;
    switch (crit) {
        case Criterion::Exogenous: v = infer_exogenous(plugin); break;
        case Criterion::Total: v = infer_total(plugin); break;
        case Criterion::Conditional:
            v = infer_conditional(counts, min_slice > 0
                                              ? min_slice
                                              : static_cast<std::int64_t>(s.n));
            break;
        case Criterion::Observed: v = infer_observed(plugin); break;
    }
    if (threshold > 0.0 &&
        (crit == Criterion::Exogenous || crit == Criterion::Total))
        v = thresholded_decision(v, threshold, std::min(s.n, s.m));
    std::cout << verdict_to_json(v) << "\n";
    return 0;
}

int run_sweep_cmd(const CommonOpts& common, const json& cfg, CLI::App* cmd,
                  SweepConfig sc, std::vector<std::string> criteria_names) {
    merge(cmd, cfg, "--n", "n", sc.n);
    merge(cmd, cfg, "--m", "m", sc.m);
    merge(cmd, cfg, "--trials", "trials", sc.trials);
    merge(cmd, cfg, "--thresholds", "thresholds", sc.entropy_thresholds);
    merge(cmd, cfg, "--mixture", "mixture", sc.mixture);
    merge(cmd, cfg, "--criteria", "criteria", criteria_names);
    sc.criteria.clear();
    for (const auto& name : criteria_names)
        sc.criteria.push_back(parse_criterion(name));
    sc.seed = common.seed;
    sc.workers = common.workers;

    Timer timer;
    const SweepResult result = run_accuracy_sweep(sc);
    fs::create_directories(common.out);
    write_file(fs::path(common.out) / "sweep.csv", result.to_csv());

    json params;
    params["n"] = sc.n;
    params["m"] = sc.m;
    params["trials"] = sc.trials;
    params["thresholds"] = sc.entropy_thresholds;
    params["mixture"] = sc.mixture;
    params["criteria"] = criteria_names;
    write_manifest(common.out, "sweep", common, params, timer.seconds());
    return 0;
}

int run_histogram_cmd(const CommonOpts& common, std::size_t n, double alpha,
                      std::size_t trials) {
    Timer timer;
    const auto values =
        run_backward_entropy_histogram(n, alpha, trials, common.seed,
                                       common.workers);
    std::string csv = "trial,h_exo_bwd\n";
    char buf[64];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.12g\n", i, values[i]);
        csv += buf;
    }
    fs::create_directories(common.out);
    write_file(fs::path(common.out) / "histogram.csv", csv);

    json params;
    params["n"] = n;
    params["alpha"] = alpha;
    params["trials"] = trials;
    write_manifest(common.out, "histogram", common, params, timer.seconds());
    return 0;
}

int run_finite_cmd(const CommonOpts& common, SweepConfig sc) {
    sc.seed = common.seed;
    sc.workers = common.workers;
    Timer timer;
    const SweepResult result = run_finite_sample_sweep(sc);
    fs::create_directories(common.out);
    write_file(fs::path(common.out) / "finite.csv", result.to_csv());
    write_file(fs::path(common.out) / "required_samples.csv",
               result.required_samples_csv());

    json params;
    params["supports"] = sc.support_grid;
    params["samples"] = sc.sample_counts;
    params["theta"] = sc.entropy_thresholds;
    params["trials"] = sc.trials;
    params["min_slice"] = sc.min_slice;
    write_manifest(common.out, "finite", common, params, timer.seconds());
    return 0;
}

int run_confound_cmd(const CommonOpts& common, SweepConfig sc) {
    sc.seed = common.seed;
    sc.workers = common.workers;
    sc.criteria = {Criterion::Exogenous, Criterion::Total,
                   Criterion::Observed};
    Timer timer;
    const SweepResult result = run_confounding_sweep(sc);
    fs::create_directories(common.out);
    write_file(fs::path(common.out) / "confound.csv", result.to_csv());

    json params;
    params["n"] = sc.n;
    params["m"] = sc.m;
    params["theta_e"] = sc.entropy_thresholds;
    params["h_l"] = sc.confounder_thresholds;
    params["l_states"] = sc.l_states;
    params["trials"] = sc.trials;
    write_manifest(common.out, "confound", common, params, timer.seconds());
    return 0;
}

int run_tuebingen_cmd(const CommonOpts& common, const std::string& data_dir,
                      std::size_t b, std::vector<double> thresholds,
                      std::size_t votes) {
    Timer timer;
    const auto report = load_pairs(data_dir);
    for (const auto& skip : report.skipped)
        std::cerr << "skipped pair " << skip << "\n";
    const auto result =
        run_benchmark(report.pairs, b, thresholds, votes, common.seed,
                      common.workers);

    fs::create_directories(common.out);
    write_file(fs::path(common.out) / "tuebingen.csv", result.to_csv());
    write_file(fs::path(common.out) / "pairs.json",
               pair_log_to_json(result, thresholds));

    json params;
    params["data"] = data_dir;
    params["b"] = b;
    params["thresholds"] = thresholds;
    params["votes"] = votes;
    params["pairs_loaded"] = report.pairs.size();
    params["pairs_skipped"] = report.skipped.size();
    write_manifest(common.out, "tuebingen", common, params, timer.seconds());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropic: causal direction inference for categorical pairs"};
    app.require_subcommand(1);

    CommonOpts common;

    // mec
    auto* mec = app.add_subcommand("mec", "greedy minimum-entropy coupling");
    std::string mec_input;
    mec->add_option("input", mec_input, "JSON file with a list of marginals")
        ->required();
    add_common(mec, common);

    // infer
    auto* infer = app.add_subcommand("infer", "causal verdict from samples");
    std::string infer_input, infer_criterion = "exogenous";
    std::int64_t infer_min_slice = 0;
    double infer_threshold = 0.0;
    std::size_t infer_nx = 0, infer_ny = 0;
    infer->add_option("samples", infer_input, "two-column CSV of 1-based states")
        ->required();
    infer->add_option("--criterion", infer_criterion,
                      "exogenous|total|conditional|observed");
    infer->add_option("--min-slice", infer_min_slice,
                      "conditional slice sample filter (default: X support)");
    infer->add_option("--threshold", infer_threshold,
                      "decision threshold t (times log2 of the support)");
    infer->add_option("--nx", infer_nx, "declared X support");
    infer->add_option("--ny", infer_ny, "declared Y support");
    add_common(infer, common);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "accuracy vs exogenous entropy");
    SweepConfig sweep_cfg;
    std::vector<std::string> sweep_criteria = {"exogenous", "total",
                                               "conditional", "observed"};
    sweep->add_option("--n", sweep_cfg.n, "cause support");
    sweep->add_option("--m", sweep_cfg.m, "effect support");
    sweep->add_option("--trials", sweep_cfg.trials, "trials per threshold");
    sweep->add_option("--thresholds", sweep_cfg.entropy_thresholds,
                      "exogenous entropy thresholds (bits)");
    sweep->add_flag("--mixture", sweep_cfg.mixture,
                    "balance ground truth directions when n != m");
    sweep->add_option("--criteria", sweep_criteria, "criteria to evaluate");
    add_common(sweep, common);

    // histogram
    auto* hist = app.add_subcommand(
        "histogram", "anti-causal exogenous entropies for H(E) <= a log2 n");
    std::size_t hist_n = 64, hist_trials = 1000;
    double hist_alpha = 0.8;
    hist->add_option("--n", hist_n, "observed support");
    hist->add_option("--alpha", hist_alpha, "entropy fraction in (0,1)");
    hist->add_option("--trials", hist_trials, "number of models");
    add_common(hist, common);

    // finite
    auto* finite = app.add_subcommand("finite", "finite-sample phase transition");
    SweepConfig finite_cfg;
    finite_cfg.trials = 100;
    double finite_theta = std::log2(40.0);
    finite->add_option("--supports", finite_cfg.support_grid, "n grid")
        ->required();
    finite->add_option("--samples", finite_cfg.sample_counts, "N grid")
        ->required();
    finite->add_option("--theta", finite_theta, "exogenous entropy (bits)");
    finite->add_option("--trials", finite_cfg.trials, "trials per cell");
    finite->add_option("--min-slice", finite_cfg.min_slice,
                       "slice filter (default: n)");
    finite->add_flag("--uniform-px", finite_cfg.uniform_px,
                     "exactly uniform p(X) instead of a simplex draw");
    add_common(finite, common);

    // confound
    auto* confound = app.add_subcommand("confound", "accuracy vs confounder entropy");
    SweepConfig confound_cfg;
    double confound_theta_e = 2.0;
    confound->add_option("--n", confound_cfg.n, "cause support");
    confound->add_option("--m", confound_cfg.m, "effect support");
    confound->add_option("--theta-e", confound_theta_e, "H(E) bound (bits)");
    confound
        ->add_option("--hl", confound_cfg.confounder_thresholds,
                     "confounder entropy grid (bits)")
        ->required();
    confound->add_option("--l-states", confound_cfg.l_states,
                         "latent support (default: n)");
    confound->add_option("--trials", confound_cfg.trials, "trials per point");
    confound->add_flag("--mixture", confound_cfg.mixture,
                       "balance ground truth directions when n != m");
    add_common(confound, common);

    // tuebingen
    auto* tueb = app.add_subcommand("tuebingen", "cause-effect pair benchmark");
    std::string tueb_data;
    std::size_t tueb_b = 10, tueb_votes = 1;
    std::vector<double> tueb_thresholds = {0.7, 0.8, 0.85, 0.9, 1.0, 1.2};
    tueb->add_option("--data", tueb_data, "dataset directory")->required();
    tueb->add_option("--b", tueb_b, "target quantization states (5, 10 or 20)");
    tueb->add_option("--thresholds", tueb_thresholds, "decision thresholds");
    tueb->add_option("--votes", tueb_votes, "1 or 5 perturbed quantizations");
    add_common(tueb, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mec->parsed()) return run_mec(common, mec_input);
        if (infer->parsed())
            return run_infer(common, infer_input, infer_criterion,
                             infer_min_slice, infer_threshold, infer_nx,
                             infer_ny);
        if (sweep->parsed()) {
            const json cfg = load_config(common.config);
            return run_sweep_cmd(common, cfg, sweep, sweep_cfg, sweep_criteria);
        }
        if (hist->parsed()) {
            const json cfg = load_config(common.config);
            merge(hist, cfg, "--n", "n", hist_n);
            merge(hist, cfg, "--alpha", "alpha", hist_alpha);
            merge(hist, cfg, "--trials", "trials", hist_trials);
            return run_histogram_cmd(common, hist_n, hist_alpha, hist_trials);
        }
        if (finite->parsed()) {
            const json cfg = load_config(common.config);
            merge(finite, cfg, "--theta", "theta", finite_theta);
            merge(finite, cfg, "--trials", "trials", finite_cfg.trials);
            finite_cfg.entropy_thresholds = {finite_theta};
            return run_finite_cmd(common, finite_cfg);
        }
        if (confound->parsed()) {
            const json cfg = load_config(common.config);
            merge(confound, cfg, "--theta-e", "theta_e", confound_theta_e);
            merge(confound, cfg, "--trials", "trials", confound_cfg.trials);
            confound_cfg.entropy_thresholds = {confound_theta_e};
            return run_confound_cmd(common, confound_cfg);
        }
        if (tueb->parsed())
            return run_tuebingen_cmd(common, tueb_data, tueb_b,
                                     tueb_thresholds, tueb_votes);
    } catch (const DatasetMissingError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "Download the cause-effect pairs dataset (pairNNNN.txt "
                     "files plus pairmeta.txt)\n"
                  << "from https://webdav.tuebingen.mpg.de/cause-effect/ and "
                     "pass the directory via --data.\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
