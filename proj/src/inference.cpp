#include "entropic/inference.hpp"

#include <algorithm>
#include <stdexcept>

namespace entropic {

const char* to_string(Direction d) {
    switch (d) {
        case Direction::XtoY: return "XtoY";
        case Direction::YtoX: return "YtoX";
        default: return "Undecided";
    }
}

const char* to_string(Criterion c) {
    switch (c) {
        case Criterion::Exogenous: return "exogenous";
        case Criterion::Total: return "total";
        case Criterion::Conditional: return "conditional";
        default: return "observed";
    }
}

namespace {

// XtoY iff fwd_score < bwd_score strictly; exact ties stay undecided.
Direction decide(double fwd_score, double bwd_score) {
    if (std::isnan(fwd_score) || std::isnan(bwd_score))
        return Direction::Undecided;
    if (std::abs(fwd_score - bwd_score) <= kTieTol) return Direction::Undecided;
    return fwd_score < bwd_score ? Direction::XtoY : Direction::YtoX;
}

std::vector<Dist> present_conds(const CondFamily& fam) {
    std::vector<Dist> out;
    for (const auto& c : fam.conds)
        if (c) out.push_back(*c);
    return out;
}

double max_or_nan(const std::vector<double>& v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    return *std::max_element(v.begin(), v.end());
}

}  // namespace

JointScores score_joint(const Joint& j, bool with_mec) {
    JointScores s;
    s.h_x = entropy(j.row_marginal());
    s.h_y = entropy(j.col_marginal());

    const auto fwd = conditional_profile(j, Axis::X);  // {p(Y|x)}_x
    const auto bwd = conditional_profile(j, Axis::Y);  // {p(X|y)}_y
    s.max_cond_fwd = max_or_nan(fwd.slice_entropies);
    s.max_cond_bwd = max_or_nan(bwd.slice_entropies);

    if (with_mec) {
        const auto fc = present_conds(fwd.family);
        const auto bc = present_conds(bwd.family);
        if (!fc.empty()) s.h_exo_fwd = coupling_entropy(greedy_mec(fc));
        if (!bc.empty()) s.h_exo_bwd = coupling_entropy(greedy_mec(bc));
    }
    return s;
}

Verdict infer_exogenous(const Joint& j) {
    Verdict v;
    v.criterion = Criterion::Exogenous;
    v.scores = score_joint(j, true);
    v.direction = decide(v.scores.h_exo_fwd, v.scores.h_exo_bwd);
    return v;
}

Verdict infer_total(const Joint& j) {
    Verdict v;
    v.criterion = Criterion::Total;
    v.scores = score_joint(j, true);
    v.direction = decide(v.scores.h_x + v.scores.h_exo_fwd,
                         v.scores.h_y + v.scores.h_exo_bwd);
    return v;
}

Verdict infer_conditional(const Joint& j) {
    Verdict v;
    v.criterion = Criterion::Conditional;
    v.scores = score_joint(j, false);
    // Larger backward conditional entropy means the backward model needs
    // more randomness, which points forward.
    v.direction = decide(v.scores.max_cond_fwd, v.scores.max_cond_bwd);
    return v;
}

Verdict infer_conditional(const CountTable& counts, std::int64_t min_slice) {
    if (min_slice < 1)
        throw std::invalid_argument("infer_conditional: min_slice must be >= 1");
    Verdict v;
    v.criterion = Criterion::Conditional;

    const auto rows = counts.row_counts();
    const auto cols = counts.col_counts();
    if (counts.total > 0) {
        v.scores.h_x = entropy_estimate(rows, EntropyMethod::Plugin);
        v.scores.h_y = entropy_estimate(cols, EntropyMethod::Plugin);
    }

    std::vector<double> fwd, bwd;
    std::vector<std::int64_t> slice;
    for (std::size_t x = 0; x < counts.n; ++x) {
        if (rows[x] < min_slice) continue;
        slice.assign(counts.m, 0);
        for (std::size_t y = 0; y < counts.m; ++y) slice[y] = counts.at(x, y);
        fwd.push_back(entropy_estimate(slice, EntropyMethod::MillerMadow));
    }
    for (std::size_t y = 0; y < counts.m; ++y) {
        if (cols[y] < min_slice) continue;
        slice.assign(counts.n, 0);
        for (std::size_t x = 0; x < counts.n; ++x) slice[x] = counts.at(x, y);
        bwd.push_back(entropy_estimate(slice, EntropyMethod::MillerMadow));
    }
    v.scores.max_cond_fwd = max_or_nan(fwd);
    v.scores.max_cond_bwd = max_or_nan(bwd);
    if (fwd.empty() || bwd.empty()) {
        v.direction = Direction::Undecided;
        v.note = "no slice reaches the sample-count filter";
        return v;
    }
    v.direction = decide(v.scores.max_cond_fwd, v.scores.max_cond_bwd);
    return v;
}

Verdict infer_observed(const Joint& j) {
    Verdict v;
    v.criterion = Criterion::Observed;
    v.scores = score_joint(j, false);
    v.direction = decide(v.scores.h_y, v.scores.h_x);  // XtoY iff H(X) > H(Y)
    return v;
}

Verdict thresholded_decision(const Verdict& v, double t, std::size_t n_states) {
    if (t < 0.0)
        throw std::invalid_argument("thresholded_decision: negative threshold");
    if (std::isnan(v.scores.h_exo_fwd) || std::isnan(v.scores.h_exo_bwd))
        throw std::invalid_argument(
            "thresholded_decision: verdict carries no exogenous entropies");
    Verdict out = v;
    out.threshold_used = t;
    const double budget = t * std::log2(static_cast<double>(n_states));
    if (std::min(v.scores.h_exo_fwd, v.scores.h_exo_bwd) > budget) {
        out.direction = Direction::Undecided;
        out.note = "both exogenous entropies above threshold";
    }
    return out;
}

}  // namespace entropic
