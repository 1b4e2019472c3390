// End-to-end acceptance suite. Each criterion prints exactly one
// PASS/FAIL/SKIP line (plus detail lines prefixed with two spaces) and the
// binary exits with the number of failed criteria. CSV artifacts land in
// ./acceptance_out for auditing.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "entropic/coupling.hpp"
#include "entropic/estimation.hpp"
#include "entropic/experiments.hpp"
#include "entropic/inference.hpp"
#include "entropic/io.hpp"
#include "entropic/parallel.hpp"
#include "entropic/scm.hpp"
#include "entropic/tuebingen.hpp"

using namespace entropic;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240901;
int g_failures = 0;

struct Check {
    bool ok = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (!cond) ok = false;
        details.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    }
    void info(const std::string& what) { details.push_back("     " + what); }
};

void report(int id, const std::string& name, const Check& c, double seconds,
            double limit_seconds) {
    const bool in_time = seconds <= limit_seconds;
    const bool pass = c.ok && in_time;
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.1fs, limit %.0fs)\n",
                pass ? "PASS" : "FAIL", id, name.c_str(), seconds,
                limit_seconds);
    for (const auto& d : c.details) std::printf("  %s\n", d.c_str());
    if (!in_time) std::printf("  FAIL runtime above limit\n");
    std::fflush(stdout);
}

void skip(int id, const std::string& name, const std::string& why) {
    std::printf("[SKIP] criterion %d: %s (%s)\n", id, name.c_str(),
                why.c_str());
    std::fflush(stdout);
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// all grid distributions on `states` with masses that are multiples of step
std::vector<Dist> grid_distributions(std::size_t states, double step) {
    const int ticks = static_cast<int>(std::lround(1.0 / step));
    std::vector<Dist> out;
    std::vector<int> parts(states, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == states) {
            parts[i] = left;
            std::vector<double> v(states);
            for (std::size_t k = 0; k < states; ++k) v[k] = parts[k] * step;
            out.push_back(Dist(v));
            return;
        }
        for (int t = 0; t <= left; ++t) {
            parts[i] = t;
            rec(i + 1, left - t);
        }
    };
    rec(0, ticks);
    return out;
}

void write_artifact(const std::string& name, const std::string& text) {
    fs::create_directories("acceptance_out");
    write_file(fs::path("acceptance_out") / name, text);
}

// ---------------------------------------------------------------------------

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;

    const auto two = grid_distributions(2, 0.05);
    double max_gap = 0.0;
    for (const auto& a : two)
        for (const auto& b : two) {
            const double hg = coupling_entropy(greedy_mec({a, b}));
            const double hb = coupling_entropy(brute_force_mec_small({a, b}));
            max_gap = std::max(max_gap, std::abs(hg - hb));
        }
    c.require(max_gap <= 1e-9,
              "2-state 0.05 grid: |greedy - oracle| <= 1e-9 (max " +
                  fmt(max_gap) + ")");

    const auto three = grid_distributions(3, 0.1);
    const auto four = grid_distributions(4, 0.1);
    auto never_below = [&](const std::vector<Dist>& lhs,
                           const std::vector<Dist>& rhs) {
        std::vector<double> worst(lhs.size(), 0.0);
        parallel_for(lhs.size(), 0, [&](std::size_t i) {
            double w = 0.0;
            for (const auto& b : rhs) {
                const double hg = coupling_entropy(greedy_mec({lhs[i], b}));
                const double hb =
                    coupling_entropy(brute_force_mec_small({lhs[i], b}));
                w = std::min(w, hg - hb);  // most negative gap
            }
            worst[i] = w;
        });
        return *std::min_element(worst.begin(), worst.end());
    };
    const double gap33 = never_below(three, three);
    const double gap44 = never_below(four, four);
    const double gap34 = never_below(three, four);
    c.require(gap33 >= -1e-9, "3x3 0.1 grid: greedy >= oracle - 1e-9");
    c.require(gap44 >= -1e-9, "4x4 0.1 grid: greedy >= oracle - 1e-9");
    c.require(gap34 >= -1e-9, "3x4 0.1 grid: greedy >= oracle - 1e-9");
    c.info(std::to_string(two.size() * two.size()) + " + " +
           std::to_string(three.size() * three.size()) + " + " +
           std::to_string(four.size() * four.size()) + " + " +
           std::to_string(three.size() * four.size()) + " instances");

    report(1, "greedy coupling vs exact small-instance oracle", c,
           elapsed(t0), 60.0);
}

// ---------------------------------------------------------------------------

Dist perturb_within(const Dist& d, double delta, Rng& rng) {
    std::vector<double> q = d.probs();
    std::vector<double> budget(d.size(), delta);
    for (int moves = 0; moves < 64; ++moves) {
        const std::size_t a = rng.uniform_int(d.size());
        const std::size_t b = rng.uniform_int(d.size());
        if (a == b) continue;
        const double room = std::min({budget[a], budget[b], q[a]});
        if (room <= 0.0) continue;
        const double t = room * rng.uniform();
        q[a] -= t;
        q[b] += t;
        budget[a] -= t;
        budget[b] -= t;
    }
    return Dist(q);
}

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;

    for (std::size_t n : {4u, 8u, 16u, 32u}) {
        const double delta =
            1.0 / (static_cast<double>(n * n) * std::log2(double(n)));
        double worst_gap = 0.0;
        bool all_valid = true;
        for (int trial = 0; trial < 100; ++trial) {
            Rng rng(derive_seed(kSeed, {2, n, std::uint64_t(trial)}));
            std::vector<Dist> ms;
            for (std::size_t i = 0; i < n; ++i)
                ms.push_back(sample_dirichlet(n, 1.0, rng));
            const Coupling p = greedy_mec(ms);
            std::vector<Dist> noisy;
            for (const auto& d : ms)
                noisy.push_back(perturb_within(d, delta * 0.999, rng));
            const Coupling q = transfer_coupling(p, noisy, delta);
            if (!validate_coupling(q, noisy, 1e-9).pass) all_valid = false;
            worst_gap = std::max(worst_gap,
                                 coupling_entropy(q) - coupling_entropy(p));
        }
        c.require(all_valid, "n=" + std::to_string(n) +
                                 ": transferred coupling valid at 1e-9");
        c.require(worst_gap <= 3.0, "n=" + std::to_string(n) +
                                        ": entropy gap <= 3 bits (max " +
                                        fmt(worst_gap) + ")");
    }
    report(2, "noisy-marginal coupling transfer bound", c, elapsed(t0), 60.0);
}

// ---------------------------------------------------------------------------

std::string criterion_3_csv(unsigned workers) {
    const std::size_t n = 64, trials = 500;
    struct Row {
        Direction exo, cond;
        bool cond_gap;
        double fwd, bwd;
    };
    std::vector<Row> rows(trials);
    parallel_for(trials, workers, [&](std::size_t trial) {
        Rng rng(derive_seed(kSeed, {3, trial}));
        Scm s{sample_function_table(n, n * n, n, rng),
              sample_dirichlet(n, 1.0, rng),
              sample_low_entropy(n * n, 2.0, rng)};
        const Joint j = scm_joint(s);
        const JointScores sc = score_joint(j, true);
        auto decide = [](double f, double b) {
            if (std::abs(f - b) <= kTieTol) return Direction::Undecided;
            return f < b ? Direction::XtoY : Direction::YtoX;
        };
        rows[trial] = {decide(sc.h_exo_fwd, sc.h_exo_bwd),
                       decide(sc.max_cond_fwd, sc.max_cond_bwd),
                       sc.max_cond_bwd > sc.max_cond_fwd, sc.h_exo_fwd,
                       sc.h_exo_bwd};
    });
    std::string csv = "trial,exogenous,conditional,cond_gap,h_exo_fwd,h_exo_bwd\n";
    char buf[128];
    for (std::size_t t = 0; t < trials; ++t) {
        std::snprintf(buf, sizeof(buf), "%zu,%s,%s,%d,%.12g,%.12g\n", t,
                      to_string(rows[t].exo), to_string(rows[t].cond),
                      rows[t].cond_gap ? 1 : 0, rows[t].fwd, rows[t].bwd);
        csv += buf;
    }
    return csv;
}

std::string g_c3_csv;

void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    g_c3_csv = criterion_3_csv(0);
    write_artifact("criterion3_identifiability.csv", g_c3_csv);

    std::size_t exo_ok = 0, cond_ok = 0, gap_ok = 0, total = 0;
    std::istringstream in(g_c3_csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        ++total;
        if (line.find(",XtoY,") != std::string::npos) ++exo_ok;
        std::size_t first = line.find(',');
        std::size_t second = line.find(',', first + 1);
        std::size_t third = line.find(',', second + 1);
        if (line.substr(second + 1, third - second - 1) == "XtoY") ++cond_ok;
        if (line.substr(third + 1, 1) == "1") ++gap_ok;
    }
    c.info("n=64, H(E)<=2, 500 trials");
    c.require(exo_ok >= 475, "exogenous accuracy >= 0.95 (" +
                                 fmt(exo_ok / 500.0) + ")");
    c.require(cond_ok >= 475, "conditional accuracy >= 0.95 (" +
                                  fmt(cond_ok / 500.0) + ")");
    c.require(gap_ok >= 475, "max cond. backward > forward in >= 95% (" +
                                 fmt(gap_ok / 500.0) + ")");
    c.require(total == 500, "all 500 trials accounted for");
    report(3, "identifiability in the constant-entropy regime", c,
           elapsed(t0), 600.0);
}

// ---------------------------------------------------------------------------

SweepConfig figure2_config(unsigned workers) {
    SweepConfig cfg;
    cfg.n = 40;
    cfg.m = 40;
    const double logn = std::log2(40.0);
    for (int k = 1; k <= 8; ++k)
        cfg.entropy_thresholds.push_back(0.1 * k * logn);
    cfg.trials = 200;
    cfg.seed = kSeed;
    cfg.workers = workers;
    return cfg;
}

SweepResult g_c4_result;

void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    g_c4_result = run_accuracy_sweep(figure2_config(0));
    write_artifact("criterion4_accuracy_sweep.csv", g_c4_result.to_csv());

    const double logn = std::log2(40.0);
    double min_exo = 1.0, min_total = 1.0, min_observed_mid = 1.0;
    for (const auto& row : g_c4_result.rows) {
        if (row.criterion == Criterion::Exogenous)
            min_exo = std::min(min_exo, row.accuracy);
        if (row.criterion == Criterion::Total)
            min_total = std::min(min_total, row.accuracy);
        if (row.criterion == Criterion::Observed && row.param >= 0.3 * logn &&
            row.param <= 0.6 * logn)
            min_observed_mid = std::min(min_observed_mid, row.accuracy);
    }
    c.info("n=m=40, theta in {0.1..0.8} log2(40), 200 trials each");
    c.require(min_exo >= 0.90,
              "exogenous accuracy >= 0.90 at every theta (min " +
                  fmt(min_exo) + ")");
    c.require(min_total >= 0.90,
              "total accuracy >= 0.90 at every theta (min " + fmt(min_total) +
                  ")");
    c.require(min_observed_mid <= 0.5,
              "observed baseline <= 0.5 somewhere in [0.3,0.6] log2 n (min " +
                  fmt(min_observed_mid) + ")");
    report(4, "three regimes of the accuracy sweep", c, elapsed(t0), 1800.0);
}

// ---------------------------------------------------------------------------

std::string histogram_csv(const std::vector<double>& values) {
    std::string csv = "trial,h_exo_bwd\n";
    char buf[64];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.12g\n", i, values[i]);
        csv += buf;
    }
    return csv;
}

std::vector<std::vector<double>> g_c5_values;

void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;

    const struct {
        std::size_t n;
        double alpha;
    } cases[] = {{64, 0.8}, {16, 0.2}, {16, 0.5}};
    g_c5_values.clear();
    for (const auto& cs : cases) {
        const auto values = run_backward_entropy_histogram(
            cs.n, cs.alpha, 500, derive_seed(kSeed, {5, cs.n}), 0);
        g_c5_values.push_back(values);
        char name[96];
        std::snprintf(name, sizeof(name), "criterion5_histogram_n%zu_a%g.csv",
                      cs.n, cs.alpha);
        write_artifact(name, histogram_csv(values));

        const double bar = cs.alpha * std::log2(double(cs.n));
        const auto above = static_cast<std::size_t>(
            std::count_if(values.begin(), values.end(),
                          [&](double v) { return v > bar; }));
        const double mean =
            std::accumulate(values.begin(), values.end(), 0.0) / values.size();
        const std::string tag =
            "n=" + std::to_string(cs.n) + ", alpha=" + fmt(cs.alpha);
        c.require(above >= 475, tag + ": >=95% of H(bwd) above alpha log2 n (" +
                                    fmt(above / 500.0) + ")");
        c.require(mean > bar, tag + ": mean " + fmt(mean) +
                                  " above threshold " + fmt(bar));
    }
    report(5, "anti-causal entropy concentration", c, elapsed(t0), 900.0);
}

// ---------------------------------------------------------------------------

SweepConfig finite_config_saturation(unsigned workers) {
    SweepConfig cfg;
    cfg.entropy_thresholds = {std::log2(40.0)};
    cfg.uniform_px = true;
    cfg.support_grid = {20};
    cfg.sample_counts = {1000, 10000, 100000, 1000000};
    cfg.trials = 300;
    cfg.seed = kSeed + 6;
    cfg.workers = workers;
    return cfg;
}

SweepConfig finite_config_growth(unsigned workers) {
    SweepConfig cfg;
    cfg.entropy_thresholds = {std::log2(40.0)};
    cfg.uniform_px = true;
    cfg.support_grid = {50, 80, 110};
    cfg.sample_counts = {1000,   1400,   2000,   2800,   4000,   5600,
                         8000,   10000,  14000,  20000,  28000,  40000,
                         56000,  80000,  110000, 160000, 220000, 310000,
                         440000, 620000, 870000, 1000000};
    cfg.trials = 60;
    cfg.seed = kSeed + 7;
    cfg.workers = workers;
    return cfg;
}

SweepResult g_c6_sat, g_c6_growth;

void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    g_c6_sat = run_finite_sample_sweep(finite_config_saturation(0));
    g_c6_growth = run_finite_sample_sweep(finite_config_growth(0));
    write_artifact("criterion6_saturation.csv", g_c6_sat.to_csv());
    write_artifact("criterion6_growth.csv", g_c6_growth.to_csv());
    write_artifact("criterion6_required_samples.csv",
                   g_c6_growth.required_samples_csv());

    // correctness fraction over all trials, the conservative reading
    auto frac = [](const SweepRow& r) {
        return static_cast<double>(r.correct) / static_cast<double>(r.trials);
    };

    double sat_max = 0.0;
    for (const auto& row : g_c6_sat.rows)
        if (row.criterion == Criterion::Exogenous)
            sat_max = std::max(sat_max, frac(row));
    c.require(sat_max <= 0.9,
              "n=20: exogenous accuracy saturates <= 0.9 up to N=1e6 (max " +
                  fmt(sat_max) + ")");

    double n80_best = 0.0;
    for (const auto& row : g_c6_growth.rows)
        if (row.support == 80 && row.criterion == Criterion::Exogenous)
            n80_best = std::max(n80_best, frac(row));
    c.require(n80_best >= 0.95,
              "n=80: exogenous accuracy >= 0.95 for large N (best " +
                  fmt(n80_best) + ")");

    std::int64_t nstar50 = -1, nstar110 = -1;
    for (const auto& req : g_c6_growth.required_samples) {
        if (req.criterion != Criterion::Exogenous) continue;
        if (req.support == 50) nstar50 = req.n_star;
        if (req.support == 110) nstar110 = req.n_star;
    }
    c.require(nstar50 > 0, "N*(50) reached within the grid (" +
                               std::to_string(nstar50) + ")");
    c.require(nstar110 > 0, "N*(110) reached within the grid (" +
                                std::to_string(nstar110) + ")");
    if (nstar50 > 0 && nstar110 > 0) {
        const double ratio =
            static_cast<double>(nstar110) / static_cast<double>(nstar50);
        const double quad = (110.0 / 50.0) * (110.0 / 50.0);
        c.require(ratio <= quad, "N*(110)/N*(50) = " + fmt(ratio) +
                                     " sub-quadratic (< " + fmt(quad) + ")");
    }
    report(6, "finite-sample phase transition", c, elapsed(t0), 3600.0);
}

// ---------------------------------------------------------------------------

SweepConfig confound_config(unsigned workers) {
    SweepConfig cfg;
    cfg.n = 40;
    cfg.m = 40;
    cfg.entropy_thresholds = {2.0};
    cfg.confounder_thresholds = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    cfg.trials = 200;
    cfg.criteria = {Criterion::Exogenous};
    cfg.seed = kSeed + 8;
    cfg.workers = workers;
    return cfg;
}

SweepConfig confound_anchor_config(unsigned workers) {
    SweepConfig cfg;
    cfg.n = 40;
    cfg.m = 40;
    cfg.entropy_thresholds = {2.5, 3.0, 3.5, 4.0, 4.5, 5.0};
    // The criterion pins 200 trials per point on the confounded side only;
    // a larger anchor sample keeps the reference curve sharp.
    cfg.trials = 1000;
    cfg.criteria = {Criterion::Exogenous};
    cfg.seed = kSeed + 9;
    cfg.workers = workers;
    return cfg;
}

SweepResult g_c7_conf, g_c7_anchor;

void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    g_c7_conf = run_confounding_sweep(confound_config(0));
    g_c7_anchor = run_accuracy_sweep(confound_anchor_config(0));
    write_artifact("criterion7_confounded.csv", g_c7_conf.to_csv());
    write_artifact("criterion7_anchor.csv", g_c7_anchor.to_csv());

    c.info("n=m=40, H(E)=2, H(L) in {0.5..3}, vs unconfounded at 2 + H(L)");
    for (std::size_t i = 0; i < g_c7_conf.rows.size(); ++i) {
        const auto& conf = g_c7_conf.rows[i];
        const auto& anchor = g_c7_anchor.rows[i];
        const double diff = std::abs(conf.accuracy - anchor.accuracy);
        c.require(diff <= 0.10,
                  "H(L)=" + fmt(conf.param) + ": |" + fmt(conf.accuracy) +
                      " - " + fmt(anchor.accuracy) + "| = " + fmt(diff) +
                      " <= 0.10");
    }
    report(7, "confounding matches shifted exogenous entropy", c, elapsed(t0),
           1800.0);
}

// ---------------------------------------------------------------------------

void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    fs::path dir;
    if (const char* env = std::getenv("ENTROPIC_TUEBINGEN_DIR")) dir = env;
    if (dir.empty() || !fs::exists(dir / "pairmeta.txt")) {
        for (const char* guess :
             {"data/tuebingen", "../data/tuebingen", "../../data/tuebingen"})
            if (fs::exists(fs::path(guess) / "pairmeta.txt")) {
                dir = guess;
                break;
            }
    }
    if (dir.empty() || !fs::exists(dir / "pairmeta.txt")) {
        skip(8, "cause-effect pair benchmark",
             "dataset not present; set ENTROPIC_TUEBINGEN_DIR or place it in "
             "data/tuebingen");
        return;
    }

    Check c;
    const auto report_pairs = load_pairs(dir);
    c.info(std::to_string(report_pairs.pairs.size()) + " scalar pairs, " +
           std::to_string(report_pairs.skipped.size()) + " skipped");
    const auto result = run_benchmark(report_pairs.pairs, 10, {0.7, 1.2}, 1,
                                      kSeed, 0);
    write_artifact("criterion8_tuebingen.csv", result.to_csv());

    const auto& strict = result.rows[0];
    const auto& loose = result.rows[1];
    c.require(strict.decided >= 9 && strict.decided <= 17,
              "threshold 0.7 decides 9..17 pairs (" +
                  std::to_string(strict.decided) + ")");
    c.require(strict.accuracy >= 0.70, "threshold 0.7 accuracy >= 0.70 (" +
                                           fmt(strict.accuracy) + ")");
    c.require(loose.decided == report_pairs.pairs.size(),
              "threshold 1.2 decides every scalar pair (" +
                  std::to_string(loose.decided) + ")");
    c.require(loose.accuracy >= 0.50, "threshold 1.2 accuracy >= 0.50 (" +
                                          fmt(loose.accuracy) + ")");
    report(8, "cause-effect pair benchmark", c, elapsed(t0), 600.0);
}

// ---------------------------------------------------------------------------

void criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;

    for (std::size_t n : {4u, 8u}) {
        const double target =
            1.0 / (static_cast<double>(n * n) * std::log(double(n)));
        const std::size_t trials = 200;
        std::vector<int> ok(trials, 0);
        parallel_for(trials, 0, [&](std::size_t trial) {
            Rng rng(derive_seed(kSeed, {9, n, trial}));
            auto flat = sample_dirichlet(n * n, 1.0, rng).probs();
            for (auto& p : flat)
                p = 0.5 * p + 0.5 / static_cast<double>(n * n);
            const Joint truth(n, n, flat);

            double alpha = 1.0;
            for (std::size_t i = 0; i < n; ++i)
                alpha = std::min({alpha, truth.row_sum(i), truth.col_sum(i)});
            const double ln_n = std::log(static_cast<double>(n));
            const auto samples = static_cast<std::int64_t>(
                std::ceil(6.0 * std::pow(double(n), 4.0) / (alpha * alpha) *
                          std::pow(ln_n, 3.0)));

            const CountTable counts = draw_counts(truth, samples, rng);
            std::vector<double> est(counts.counts.size());
            for (std::size_t k = 0; k < est.size(); ++k)
                est[k] = static_cast<double>(counts.counts[k]) /
                         static_cast<double>(counts.total);
            const Joint est_j(n, n, est);
            const double err =
                std::max(conditional_linf_error(truth, est_j, Axis::X),
                         conditional_linf_error(truth, est_j, Axis::Y));
            ok[trial] = err <= target ? 1 : 0;
        });
        const int good = std::accumulate(ok.begin(), ok.end(), 0);
        const double need = (1.0 - 4.0 / double(n)) * double(trials);
        c.require(good >= need, "n=" + std::to_string(n) + ": error <= 1/(n^2 ln n) in " +
                                    std::to_string(good) + "/200 trials (need >= " +
                                    fmt(need) + ")");
    }
    report(9, "plug-in conditional concentration", c, elapsed(t0), 600.0);
}

// ---------------------------------------------------------------------------

void criterion_10() {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;

    c.require(criterion_3_csv(1) == g_c3_csv,
              "criterion 3 CSV identical with 1 worker");
    c.require(run_accuracy_sweep(figure2_config(1)).to_csv() ==
                  g_c4_result.to_csv(),
              "criterion 4 CSV identical with 1 worker");

    bool hist_same = true;
    const struct {
        std::size_t n;
        double alpha;
    } cases[] = {{64, 0.8}, {16, 0.2}, {16, 0.5}};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto again = run_backward_entropy_histogram(
            cases[i].n, cases[i].alpha, 500,
            derive_seed(kSeed, {5, cases[i].n}), 1);
        if (histogram_csv(again) != histogram_csv(g_c5_values[i]))
            hist_same = false;
    }
    c.require(hist_same, "criterion 5 CSVs identical with 1 worker");

    const auto sat = run_finite_sample_sweep(finite_config_saturation(1));
    const auto growth = run_finite_sample_sweep(finite_config_growth(1));
    c.require(sat.to_csv() == g_c6_sat.to_csv() &&
                  growth.to_csv() == g_c6_growth.to_csv() &&
                  growth.required_samples_csv() ==
                      g_c6_growth.required_samples_csv(),
              "criterion 6 CSVs identical with 1 worker");

    c.require(run_confounding_sweep(confound_config(1)).to_csv() ==
                      g_c7_conf.to_csv() &&
                  run_accuracy_sweep(confound_anchor_config(1)).to_csv() ==
                      g_c7_anchor.to_csv(),
              "criterion 7 CSVs identical with 1 worker");

    report(10, "byte-identical CSVs across worker counts", c, elapsed(t0),
           7200.0);
}

}  // namespace

int main() {
    std::printf("acceptance suite (seed %llu)\n",
                static_cast<unsigned long long>(kSeed));
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s: %d criterion(s) failed\n",
                g_failures == 0 ? "SUCCESS" : "FAILURE", g_failures);
    return g_failures;
}
