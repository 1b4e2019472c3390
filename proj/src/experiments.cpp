#include "entropic/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "entropic/parallel.hpp"

namespace entropic {

namespace {

// Operation tags keep the derived per-trial seed streams of the different
// sweeps disjoint even under one master seed.
enum : std::uint64_t {
    kTagAccuracy = 1,
    kTagHistogram = 2,
    kTagFinite = 3,
    kTagConfound = 4,
};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct TrialOutcome {
    JointScores scores;
    // direction per requested criterion, parallel to cfg.criteria
    std::vector<Direction> directions;
    Direction truth = Direction::XtoY;
};

Direction apply_criterion(const JointScores& s, Criterion c) {
    auto decide = [](double fwd, double bwd) {
        if (std::isnan(fwd) || std::isnan(bwd)) return Direction::Undecided;
        if (std::abs(fwd - bwd) <= kTieTol) return Direction::Undecided;
        return fwd < bwd ? Direction::XtoY : Direction::YtoX;
    };
    switch (c) {
        case Criterion::Exogenous: return decide(s.h_exo_fwd, s.h_exo_bwd);
        case Criterion::Total:
            return decide(s.h_x + s.h_exo_fwd, s.h_y + s.h_exo_bwd);
        case Criterion::Conditional:
            return decide(s.max_cond_fwd, s.max_cond_bwd);
        default: return decide(s.h_y, s.h_x);
    }
}

bool needs_mec(const std::vector<Criterion>& criteria) {
    for (Criterion c : criteria)
        if (c == Criterion::Exogenous || c == Criterion::Total) return true;
    return false;
}

TrialOutcome score_trial(const Joint& j, Direction truth,
                         const std::vector<Criterion>& criteria,
                         bool with_mec) {
    TrialOutcome out;
    out.truth = truth;
    out.scores = score_joint(j, with_mec);
    out.directions.reserve(criteria.size());
    for (Criterion c : criteria)
        out.directions.push_back(apply_criterion(out.scores, c));
    return out;
}

// Square or swapped structural model for one trial. In mixture mode odd
// trial indices put the cause on the m-state side and the observed joint is
// transposed, so the ground truth is balanced exactly.
Joint sample_trial_joint(const SweepConfig& cfg, double theta,
                         std::size_t trial, Rng& rng, Direction& truth) {
    const bool swapped = cfg.mixture && cfg.n != cfg.m && (trial % 2 == 1);
    std::size_t nc = cfg.n, nf = cfg.m;
    truth = Direction::XtoY;
    if (swapped) {
        std::swap(nc, nf);
        truth = Direction::YtoX;
    }
    const std::size_t n_exo = cfg.n * cfg.m;
    Scm s{sample_function_table(nc, n_exo, nf, rng),
          sample_dirichlet(nc, 1.0, rng),
          sample_low_entropy(n_exo, theta, rng)};
    Joint j = scm_joint(s);
    return truth == Direction::XtoY ? j : j.transpose();
}

void reduce_rows(SweepResult& result, const SweepConfig& cfg,
                 std::size_t support, double param,
                 const std::vector<TrialOutcome>& outcomes) {
    for (std::size_t ci = 0; ci < cfg.criteria.size(); ++ci) {
        SweepRow row;
        row.support = support;
        row.param = param;
        row.criterion = cfg.criteria[ci];
        row.trials = outcomes.size();
        double sum_fwd = 0.0, sum_bwd = 0.0;
        for (const TrialOutcome& t : outcomes) {
            const Direction d = t.directions[ci];
            if (d == Direction::Undecided)
                ++row.undecided;
            else if (d == t.truth)
                ++row.correct;
            else
                ++row.wrong;
            sum_fwd += t.scores.h_exo_fwd;
            sum_bwd += t.scores.h_exo_bwd;
        }
        const std::size_t decided = row.correct + row.wrong;
        row.accuracy = decided ? static_cast<double>(row.correct) / decided
                               : std::numeric_limits<double>::quiet_NaN();
        row.undecided_frac =
            row.trials ? static_cast<double>(row.undecided) / row.trials : 0.0;
        row.mean_h_exo_fwd =
            row.trials ? sum_fwd / static_cast<double>(row.trials) : 0.0;
        row.mean_h_exo_bwd =
            row.trials ? sum_bwd / static_cast<double>(row.trials) : 0.0;
        result.rows.push_back(row);
    }
}

}  // namespace

void SweepConfig::validate() const {
    if (n < 1 || m < 1) throw std::invalid_argument("SweepConfig: empty support");
    if (trials < 1) throw std::invalid_argument("SweepConfig: trials must be >= 1");
    if (criteria.empty())
        throw std::invalid_argument("SweepConfig: no criteria selected");
    if (!std::is_sorted(entropy_thresholds.begin(), entropy_thresholds.end()))
        throw std::invalid_argument("SweepConfig: thresholds must be sorted");
    for (double t : entropy_thresholds)
        if (t < 0.0)
            throw std::invalid_argument("SweepConfig: negative threshold");
    for (double t : confounder_thresholds)
        if (t < 0.0)
            throw std::invalid_argument("SweepConfig: negative H(L) threshold");
    for (std::int64_t s : sample_counts)
        if (s < 1)
            throw std::invalid_argument("SweepConfig: sample counts must be >= 1");
    if (!std::is_sorted(sample_counts.begin(), sample_counts.end()))
        throw std::invalid_argument("SweepConfig: sample counts must be sorted");
}

std::string SweepResult::to_csv() const {
    std::string csv = "n," + param_name +
                      ",criterion,trials,correct,wrong,undecided,accuracy,"
                      "undecided_frac,mean_h_exo_fwd,mean_h_exo_bwd\n";
    for (const SweepRow& r : rows) {
        csv += std::to_string(r.support) + ',' + format_double(r.param) + ',' +
               to_string(r.criterion) + ',' + std::to_string(r.trials) + ',' +
               std::to_string(r.correct) + ',' + std::to_string(r.wrong) +
               ',' + std::to_string(r.undecided) + ',' +
               format_double(r.accuracy) + ',' +
               format_double(r.undecided_frac) + ',' +
               format_double(r.mean_h_exo_fwd) + ',' +
               format_double(r.mean_h_exo_bwd) + '\n';
    }
    return csv;
}

std::string SweepResult::required_samples_csv() const {
    std::string csv = "n,criterion,n_star\n";
    for (const RequiredSamplesRow& r : required_samples)
        csv += std::to_string(r.support) + ',' + to_string(r.criterion) + ',' +
               std::to_string(r.n_star) + '\n';
    return csv;
}

SweepResult run_accuracy_sweep(const SweepConfig& cfg) {
    cfg.validate();
    if (cfg.entropy_thresholds.empty())
        throw std::invalid_argument("run_accuracy_sweep: no thresholds");

    SweepResult result;
    result.param_name = "theta";
    const bool with_mec = needs_mec(cfg.criteria);

    for (std::size_t ti = 0; ti < cfg.entropy_thresholds.size(); ++ti) {
        const double theta = cfg.entropy_thresholds[ti];
        std::vector<TrialOutcome> outcomes(cfg.trials);
        parallel_for(cfg.trials, cfg.workers, [&](std::size_t trial) {
            Rng rng(derive_seed(cfg.seed, {kTagAccuracy, ti, trial}));
            Direction truth;
            const Joint j = sample_trial_joint(cfg, theta, trial, rng, truth);
            outcomes[trial] = score_trial(j, truth, cfg.criteria, with_mec);
        });
        reduce_rows(result, cfg, cfg.n, theta, outcomes);
    }
    return result;
}

std::vector<double> run_backward_entropy_histogram(std::size_t n,
                                                   double alpha_frac,
                                                   std::size_t trials,
                                                   std::uint64_t seed,
                                                   unsigned workers) {
    if (!(alpha_frac > 0.0) || !(alpha_frac < 1.0))
        throw std::invalid_argument(
            "run_backward_entropy_histogram: alpha_frac must be in (0,1)");
    const double theta = alpha_frac * std::log2(static_cast<double>(n));
    std::vector<double> values(trials);
    parallel_for(trials, workers, [&](std::size_t trial) {
        Rng rng(derive_seed(seed, {kTagHistogram, trial}));
        Scm s{sample_function_table(n, n * n, n, rng),
              sample_dirichlet(n, 1.0, rng),
              sample_low_entropy(n * n, theta, rng)};
        const Joint j = scm_joint(s);
        const auto bwd = conditional_profile(j, Axis::Y);
        std::vector<Dist> conds;
        for (const auto& c : bwd.family.conds)
            if (c) conds.push_back(*c);
        values[trial] = coupling_entropy(greedy_mec(conds));
    });
    return values;
}

SweepResult run_finite_sample_sweep(const SweepConfig& cfg) {
    cfg.validate();
    if (cfg.entropy_thresholds.size() != 1)
        throw std::invalid_argument(
            "run_finite_sample_sweep: exactly one exogenous threshold");
    if (cfg.support_grid.empty() || cfg.sample_counts.empty())
        throw std::invalid_argument(
            "run_finite_sample_sweep: support_grid and sample_counts required");

    const double theta = cfg.entropy_thresholds[0];
    SweepResult result;
    result.param_name = "samples";
    const std::vector<Criterion> criteria = {Criterion::Exogenous,
                                             Criterion::Conditional};

    for (std::size_t ni = 0; ni < cfg.support_grid.size(); ++ni) {
        const std::size_t n = cfg.support_grid[ni];
        const std::int64_t min_slice =
            cfg.min_slice > 0 ? cfg.min_slice
                              : static_cast<std::int64_t>(n);

        // outcomes[trial * #N + Ni]
        std::vector<TrialOutcome> outcomes(cfg.trials *
                                           cfg.sample_counts.size());
        parallel_for(cfg.trials, cfg.workers, [&](std::size_t trial) {
            Rng model_rng(derive_seed(cfg.seed, {kTagFinite, ni, trial, 0}));
            Dist px = cfg.uniform_px
                          ? Dist(std::vector<double>(
                                n, 1.0 / static_cast<double>(n)))
                          : sample_dirichlet(n, 1.0, model_rng);
            Scm s{sample_function_table(n, n * n, n, model_rng), std::move(px),
                  sample_low_entropy(n * n, theta, model_rng)};
            const Joint exact = scm_joint(s);

            for (std::size_t Ni = 0; Ni < cfg.sample_counts.size(); ++Ni) {
                Rng rng(derive_seed(cfg.seed, {kTagFinite, ni, trial, Ni + 1}));
                const SampleSet samples = draw_samples(
                    exact, static_cast<std::size_t>(cfg.sample_counts[Ni]),
                    rng);
                auto [counts, plugin] = plugin_joint(samples);

                TrialOutcome out;
                out.truth = Direction::XtoY;
                const Verdict exo = infer_exogenous(plugin);
                const Verdict cond = infer_conditional(counts, min_slice);
                out.scores = exo.scores;
                out.directions = {exo.direction, cond.direction};
                outcomes[trial * cfg.sample_counts.size() + Ni] =
                    std::move(out);
            }
        });

        SweepConfig row_cfg = cfg;
        row_cfg.criteria = criteria;
        for (std::size_t Ni = 0; Ni < cfg.sample_counts.size(); ++Ni) {
            std::vector<TrialOutcome> cell;
            cell.reserve(cfg.trials);
            for (std::size_t trial = 0; trial < cfg.trials; ++trial)
                cell.push_back(outcomes[trial * cfg.sample_counts.size() + Ni]);
            reduce_rows(result, row_cfg, n,
                        static_cast<double>(cfg.sample_counts[Ni]), cell);
        }

        for (Criterion c : criteria) {
            RequiredSamplesRow req;
            req.support = n;
            req.criterion = c;
            for (const SweepRow& row : result.rows) {
                if (row.support != n || row.criterion != c) continue;
                const double frac_correct =
                    row.trials ? static_cast<double>(row.correct) / row.trials
                               : 0.0;
                if (frac_correct >= 0.95) {
                    req.n_star = static_cast<std::int64_t>(row.param);
                    break;
                }
            }
            result.required_samples.push_back(req);
        }
    }
    return result;
}

SweepResult run_confounding_sweep(const SweepConfig& cfg) {
    cfg.validate();
    if (cfg.entropy_thresholds.size() != 1)
        throw std::invalid_argument(
            "run_confounding_sweep: exactly one exogenous threshold");
    if (cfg.confounder_thresholds.empty())
        throw std::invalid_argument(
            "run_confounding_sweep: confounder_thresholds required");

    const double theta_e = cfg.entropy_thresholds[0];
    SweepResult result;
    result.param_name = "h_l";
    const bool with_mec = needs_mec(cfg.criteria);

    for (std::size_t li = 0; li < cfg.confounder_thresholds.size(); ++li) {
        const double theta_l = cfg.confounder_thresholds[li];
        std::vector<TrialOutcome> outcomes(cfg.trials);
        parallel_for(cfg.trials, cfg.workers, [&](std::size_t trial) {
            Rng rng(derive_seed(cfg.seed, {kTagConfound, li, trial}));
            const bool swapped =
                cfg.mixture && cfg.n != cfg.m && (trial % 2 == 1);
            std::size_t nc = cfg.n, nf = cfg.m;
            Direction truth = Direction::XtoY;
            if (swapped) {
                std::swap(nc, nf);
                truth = Direction::YtoX;
            }
            const std::size_t l_states = cfg.l_states ? cfg.l_states : cfg.n;
            const ConfoundedScm c =
                sample_confounded(nc, nf, cfg.n * cfg.m, l_states, theta_e,
                                  theta_l, rng);
            Joint j = confounded_joint(c);
            if (truth == Direction::YtoX) j = j.transpose();
            outcomes[trial] = score_trial(j, truth, cfg.criteria, with_mec);
        });
        reduce_rows(result, cfg, cfg.n, theta_l, outcomes);
    }
    return result;
}

}  // namespace entropic
