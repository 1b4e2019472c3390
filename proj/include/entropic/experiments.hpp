#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entropic/inference.hpp"
#include "entropic/scm.hpp"

namespace entropic {

/// Configuration shared by the synthetic sweeps. A sweep varies exactly one
/// of: exogenous-entropy threshold (accuracy sweep), sample count grid
/// (finite-sample sweep) or confounder-entropy threshold (confounding
/// sweep).
struct SweepConfig {
    std::size_t n = 40;  // cause support
    std::size_t m = 40;  // effect support
    std::vector<double> entropy_thresholds;  // bits; sorted, non-negative
    std::size_t trials = 200;
    std::vector<Criterion> criteria = {Criterion::Exogenous, Criterion::Total,
                                       Criterion::Conditional,
                                       Criterion::Observed};
    /// When n != m, draw alternating trials with the cause on each side so
    /// the ground truth is balanced.
    bool mixture = false;

    // finite-sample mode
    std::vector<std::size_t> support_grid;   // n values (square models)
    std::vector<std::int64_t> sample_counts; // N grid
    std::int64_t min_slice = 0;              // 0: use n
    /// Finite-sample mode draws p(X) uniformly from the simplex by default;
    /// set to true for an exactly uniform p(X) (the easiest regime of the
    /// uniformity assumption, where the phase transition is sharpest).
    bool uniform_px = false;

    // confounding mode
    std::vector<double> confounder_thresholds;  // H(L) grid, bits
    std::size_t l_states = 0;                   // 0: use n

    std::uint64_t seed = 1;
    unsigned workers = 0;  // 0: hardware concurrency

    void validate() const;
};

/// One aggregated grid cell. `param` is the swept quantity (theta bits, N,
/// or H(L) bits); accuracy is over decided trials and correct + wrong +
/// undecided = trials.
struct SweepRow {
    std::size_t support = 0;
    double param = 0.0;
    Criterion criterion = Criterion::Exogenous;
    std::size_t trials = 0, correct = 0, wrong = 0, undecided = 0;
    double accuracy = 0.0;        // correct / (correct + wrong)
    double undecided_frac = 0.0;  // undecided / trials
    double mean_h_exo_fwd = 0.0;
    double mean_h_exo_bwd = 0.0;
};

/// Least sample count in the grid reaching 95% accuracy (-1 if none).
struct RequiredSamplesRow {
    std::size_t support = 0;
    Criterion criterion = Criterion::Exogenous;
    std::int64_t n_star = -1;
};

struct SweepResult {
    std::string param_name;  // "theta", "samples" or "h_l"
    std::vector<SweepRow> rows;
    std::vector<RequiredSamplesRow> required_samples;  // finite mode only

    std::string to_csv() const;
    std::string required_samples_csv() const;
};

/// Accuracy of the chosen criteria on exact joints, per exogenous entropy
/// threshold: each trial draws p(X) from the uniform simplex, p(E) with
/// H(E) <= theta on n*m states, a uniform random function table, and scores
/// the resulting joint against the generating direction.
SweepResult run_accuracy_sweep(const SweepConfig& cfg);

/// Backward exogenous entropies of models generated with
/// H(E) <= alpha_frac * log2(n); one value per trial, for histogramming.
std::vector<double> run_backward_entropy_histogram(std::size_t n,
                                                   double alpha_frac,
                                                   std::size_t trials,
                                                   std::uint64_t seed,
                                                   unsigned workers = 0);

/// Finite-sample phase transition: per (n, N) cell, draws N samples from an
/// exact model (exogenous entropy from entropy_thresholds[0]), applies the
/// exogenous criterion to the plug-in joint and the conditional criterion
/// with the per-slice sample filter, and records accuracy. Also emits the
/// least N reaching 95% accuracy per support size.
SweepResult run_finite_sample_sweep(const SweepConfig& cfg);

/// Confounding sweep: exogenous entropy fixed by entropy_thresholds[0],
/// confounder entropy swept over confounder_thresholds.
SweepResult run_confounding_sweep(const SweepConfig& cfg);

}  // namespace entropic
