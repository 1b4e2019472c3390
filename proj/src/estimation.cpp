#include "entropic/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace entropic {

std::vector<std::int64_t> CountTable::row_counts() const {
    std::vector<std::int64_t> r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) r[i] += counts[i * m + j];
    return r;
}

std::vector<std::int64_t> CountTable::col_counts() const {
    std::vector<std::int64_t> c(m, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) c[j] += counts[i * m + j];
    return c;
}

SampleSet draw_samples(const Joint& j, std::size_t n_samples, Rng& rng) {
    SampleSet s;
    s.n = j.n();
    s.m = j.m();
    s.pairs.reserve(n_samples);

    std::vector<double> cum(j.table().size());
    double acc = 0.0;
    for (std::size_t k = 0; k < cum.size(); ++k) {
        acc += j.table()[k];
        cum[k] = acc;
    }
    const double total = acc;

    for (std::size_t i = 0; i < n_samples; ++i) {
        const double u = rng.uniform() * total;
        const std::size_t k = static_cast<std::size_t>(
            std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
        const std::size_t cell = std::min(k, cum.size() - 1);
        s.pairs.emplace_back(static_cast<std::uint32_t>(cell / j.m()),
                             static_cast<std::uint32_t>(cell % j.m()));
    }
    return s;
}

CountTable draw_counts(const Joint& j, std::int64_t n_samples, Rng& rng) {
    if (n_samples < 0)
        throw std::invalid_argument("draw_counts: negative sample count");
    CountTable t{j.n(), j.m(), std::vector<std::int64_t>(j.n() * j.m(), 0), 0};

    std::int64_t remaining = n_samples;
    double mass_left = 1.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < j.table().size() && remaining > 0; ++k) {
        const double p = j.table()[k];
        if (p <= 0.0) continue;
        last_positive = k;
        std::int64_t c;
        if (p >= mass_left) {
            c = remaining;
        } else {
            std::binomial_distribution<std::int64_t> bin(remaining,
                                                         p / mass_left);
            c = bin(rng.engine());
        }
        t.counts[k] = c;
        remaining -= c;
        mass_left -= p;
    }
    // Rounding dust in the joint can leave a few draws unassigned; park
    // them in the last occupied cell so the table always sums to N.
    if (remaining > 0) t.counts[last_positive] += remaining;
    t.total = n_samples;
    return t;
}

CountTable tabulate(const SampleSet& s) {
    CountTable t{s.n, s.m, std::vector<std::int64_t>(s.n * s.m, 0),
                 static_cast<std::int64_t>(s.pairs.size())};
    for (const auto& [x, y] : s.pairs) {
        if (x >= s.n || y >= s.m)
            throw std::out_of_range("tabulate: state outside declared support");
        ++t.counts[x * s.m + y];
    }
    return t;
}

std::pair<CountTable, Joint> plugin_joint(const SampleSet& s) {
    if (s.pairs.empty())
        throw std::invalid_argument("plugin_joint: empty sample set");
    CountTable t = tabulate(s);
    std::vector<double> table(t.counts.size());
    const double inv = 1.0 / static_cast<double>(t.total);
    for (std::size_t k = 0; k < table.size(); ++k)
        table[k] = static_cast<double>(t.counts[k]) * inv;
    return {std::move(t), Joint(s.n, s.m, std::move(table))};
}

double entropy_estimate(const std::vector<std::int64_t>& counts,
                        EntropyMethod method) {
    std::int64_t total = 0;
    std::int64_t occupied = 0;
    for (std::int64_t c : counts) {
        if (c < 0)
            throw std::invalid_argument("entropy_estimate: negative count");
        total += c;
        if (c > 0) ++occupied;
    }
    if (total == 0)
        throw std::invalid_argument("entropy_estimate: all counts zero");

    double h = 0.0;
    for (std::int64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    if (method == EntropyMethod::MillerMadow)
        h += static_cast<double>(occupied - 1) /
             (2.0 * static_cast<double>(total) * std::log(2.0));
    return h;
}

double conditional_linf_error(const Joint& true_j, const Joint& est_j,
                              Axis axis) {
    if (true_j.n() != est_j.n() || true_j.m() != est_j.m())
        throw std::invalid_argument("conditional_linf_error: shape mismatch");
    const std::size_t slices = (axis == Axis::Y) ? true_j.m() : true_j.n();
    const std::size_t states = (axis == Axis::Y) ? true_j.n() : true_j.m();

    double worst = 0.0;
    for (std::size_t s = 0; s < slices; ++s) {
        const double tw =
            (axis == Axis::Y) ? true_j.col_sum(s) : true_j.row_sum(s);
        if (tw <= 0.0) continue;
        const double ew =
            (axis == Axis::Y) ? est_j.col_sum(s) : est_j.row_sum(s);
        if (ew <= 0.0) return std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < states; ++i) {
            const double tp =
                ((axis == Axis::Y) ? true_j.at(i, s) : true_j.at(s, i)) / tw;
            const double ep =
                ((axis == Axis::Y) ? est_j.at(i, s) : est_j.at(s, i)) / ew;
            worst = std::max(worst, std::abs(tp - ep));
        }
    }
    return worst;
}

}  // namespace entropic
