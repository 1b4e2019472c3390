#include "entropic/tuebingen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "entropic/parallel.hpp"

namespace entropic {

namespace {

std::size_t count_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(
        std::unique(v.begin(), v.end()) - v.begin());
}

bool parse_columns(const std::filesystem::path& file, std::size_t want_cols,
                   std::vector<std::vector<double>>& cols,
                   std::string& reason) {
    std::ifstream in(file);
    if (!in) {
        reason = "file missing";
        return false;
    }
    cols.assign(want_cols, {});
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<double> values;
        std::string tok;
        while (row >> tok) {
            try {
                std::size_t used = 0;
                const double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                values.push_back(v);
            } catch (const std::exception&) {
                reason = "non-numeric token '" + tok + "'";
                return false;
            }
        }
        if (values.empty()) continue;  // blank line
        if (values.size() < want_cols) {
            reason = "row with fewer columns than metadata declares";
            return false;
        }
        for (std::size_t c = 0; c < want_cols; ++c)
            cols[c].push_back(values[c]);
    }
    if (cols[0].empty()) {
        reason = "no data rows";
        return false;
    }
    return true;
}

}  // namespace

PairLoadReport load_pairs(const std::filesystem::path& dir) {
    const auto meta_path = dir / "pairmeta.txt";
    std::ifstream meta(meta_path);
    if (!meta)
        throw DatasetMissingError("metadata file not found: " +
                                  meta_path.string());

    PairLoadReport report;
    std::string line;
    while (std::getline(meta, line)) {
        std::istringstream row(line);
        std::string id;
        std::size_t c0, c1, e0, e1;
        double weight;
        if (!(row >> id >> c0 >> c1 >> e0 >> e1 >> weight)) continue;

        if (c0 != c1 || e0 != e1) {
            report.skipped.push_back(id + ": multivariate");
            continue;
        }
        if (weight <= 0.0) {
            report.skipped.push_back(id + ": non-positive weight");
            continue;
        }

        const auto file = dir / ("pair" + id + ".txt");
        const std::size_t want = std::max(c0, e0);
        std::vector<std::vector<double>> cols;
        std::string reason;
        if (!parse_columns(file, want, cols, reason)) {
            report.skipped.push_back(id + ": " + reason);
            continue;
        }

        PairRecord rec;
        rec.id = id;
        // Keep file column order for (x, y); the metadata then fixes which
        // direction is causal.
        const std::size_t cause_col = c0 - 1, effect_col = e0 - 1;
        if (cause_col <= effect_col) {
            rec.x_col = std::move(cols[cause_col]);
            rec.y_col = std::move(cols[effect_col]);
            rec.truth = Direction::XtoY;
        } else {
            rec.x_col = std::move(cols[effect_col]);
            rec.y_col = std::move(cols[cause_col]);
            rec.truth = Direction::YtoX;
        }
        rec.weight = weight;
        rec.n_samples = rec.x_col.size();
        rec.uniq_x = count_unique(rec.x_col);
        rec.uniq_y = count_unique(rec.y_col);
        report.pairs.push_back(std::move(rec));
    }
    return report;
}

std::size_t choose_states(std::size_t b, std::size_t n_samples,
                          std::size_t uniq_x, std::size_t uniq_y) {
    if (b < 1 || n_samples < 1 || uniq_x < 1 || uniq_y < 1)
        throw std::invalid_argument("choose_states: arguments must be >= 1");
    const std::size_t n = std::min({b, n_samples / 10, uniq_x, uniq_y});
    return std::max<std::size_t>(1, n);
}

std::vector<std::uint32_t> quantize(const std::vector<double>& col,
                                    std::size_t n, bool perturb, Rng& rng) {
    if (n < 1) throw std::invalid_argument("quantize: n must be >= 1");
    if (col.empty()) throw std::invalid_argument("quantize: empty column");

    const auto [lo_it, hi_it] = std::minmax_element(col.begin(), col.end());
    const double a = *lo_it, b = *hi_it;
    std::vector<std::uint32_t> states(col.size(), 0);
    if (n == 1 || a == b) return states;

    std::vector<double> bounds(n - 1);
    const double width = (b - a) / static_cast<double>(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        bounds[i] = a + width * static_cast<double>(i + 1);
        if (perturb) {
            const double amp = (b - a) / (8.0 * static_cast<double>(n));
            bounds[i] += amp * (2.0 * rng.uniform() - 1.0);
        }
    }

    for (std::size_t k = 0; k < col.size(); ++k) {
        // state = number of boundaries at or below the value, so a value
        // exactly on a boundary joins the upper bin
        states[k] = static_cast<std::uint32_t>(
            std::upper_bound(bounds.begin(), bounds.end(), col[k]) -
            bounds.begin());
    }
    return states;
}

std::string BenchmarkResult::to_csv() const {
    std::string csv = "threshold,decided,correct,accuracy,weighted_accuracy\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.12g,%zu,%zu,%.12g,%.12g\n",
                      r.threshold, r.decided, r.correct, r.accuracy,
                      r.weighted_accuracy);
        csv += buf;
    }
    return csv;
}

BenchmarkResult run_benchmark(const std::vector<PairRecord>& pairs,
                              std::size_t b,
                              const std::vector<double>& thresholds,
                              std::size_t votes, std::uint64_t seed,
                              unsigned workers) {
    if (votes != 1 && votes != 5)
        throw std::invalid_argument("run_benchmark: votes must be 1 or 5");
    for (double t : thresholds)
        if (!(t > 0.0))
            throw std::invalid_argument("run_benchmark: thresholds must be > 0");

    BenchmarkResult result;
    result.b = b;
    result.votes = votes;
    result.pair_log.resize(pairs.size());

    parallel_for(pairs.size(), workers, [&](std::size_t pi) {
        const PairRecord& pair = pairs[pi];
        const std::size_t n =
            choose_states(b, pair.n_samples, pair.uniq_x, pair.uniq_y);

        PairVerdictLog log;
        log.id = pair.id;
        log.states = n;
        log.truth = pair.truth;

        // votes x thresholds matrix of single-vote decisions
        std::vector<std::vector<Direction>> vote_dirs(
            votes, std::vector<Direction>(thresholds.size(),
                                          Direction::Undecided));
        const bool perturb = votes > 1;
        for (std::size_t v = 0; v < votes; ++v) {
            Rng rng(derive_seed(seed, {5 /*tag*/, pi, v}));
            const auto xs = quantize(pair.x_col, n, perturb, rng);
            const auto ys = quantize(pair.y_col, n, perturb, rng);

            std::vector<double> table(n * n, 0.0);
            const double w = 1.0 / static_cast<double>(xs.size());
            for (std::size_t k = 0; k < xs.size(); ++k)
                table[xs[k] * n + ys[k]] += w;
            const Verdict verdict = infer_exogenous(Joint(n, n, table));
            if (v == 0) {
                log.h_exo_fwd = verdict.scores.h_exo_fwd;
                log.h_exo_bwd = verdict.scores.h_exo_bwd;
            }
            for (std::size_t ti = 0; ti < thresholds.size(); ++ti)
                vote_dirs[v][ti] =
                    thresholded_decision(verdict, thresholds[ti], n).direction;
        }

        log.per_threshold.resize(thresholds.size(), Direction::Undecided);
        for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
            std::size_t fwd = 0, bwd = 0;
            for (std::size_t v = 0; v < votes; ++v) {
                if (vote_dirs[v][ti] == Direction::XtoY) ++fwd;
                if (vote_dirs[v][ti] == Direction::YtoX) ++bwd;
            }
            if (fwd > bwd)
                log.per_threshold[ti] = Direction::XtoY;
            else if (bwd > fwd)
                log.per_threshold[ti] = Direction::YtoX;
            // equal (including zero) stays undecided
        }
        result.pair_log[pi] = std::move(log);
    });

    for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
        BenchmarkThresholdRow row;
        row.threshold = thresholds[ti];
        double w_correct = 0.0, w_decided = 0.0;
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const Direction d = result.pair_log[pi].per_threshold[ti];
            if (d == Direction::Undecided) continue;
            ++row.decided;
            w_decided += pairs[pi].weight;
            if (d == pairs[pi].truth) {
                ++row.correct;
                w_correct += pairs[pi].weight;
            }
        }
        row.accuracy = row.decided
                           ? static_cast<double>(row.correct) / row.decided
                           : std::numeric_limits<double>::quiet_NaN();
        row.weighted_accuracy =
            w_decided > 0.0 ? w_correct / w_decided
                            : std::numeric_limits<double>::quiet_NaN();
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace entropic
