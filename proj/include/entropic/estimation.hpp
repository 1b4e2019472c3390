#pragma once

#include <cstdint>
#include <vector>

#include "entropic/dist.hpp"

namespace entropic {

/// N i.i.d. draws from a joint over [n] x [m], 0-based state indices.
struct SampleSet {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::size_t n = 0, m = 0;

    std::size_t count() const { return pairs.size(); }
};

/// Contingency table of a sample set.
struct CountTable {
    std::size_t n = 0, m = 0;
    std::vector<std::int64_t> counts;  // row-major n x m
    std::int64_t total = 0;

    std::int64_t at(std::size_t i, std::size_t j) const {
        return counts[i * m + j];
    }
    std::vector<std::int64_t> row_counts() const;
    std::vector<std::int64_t> col_counts() const;
};

enum class EntropyMethod { Plugin, MillerMadow };

/// N independent draws from the joint; deterministic under a fixed seed.
SampleSet draw_samples(const Joint& j, std::size_t n_samples, Rng& rng);

/// Multinomial cell counts of N i.i.d. draws, sampled directly via a chain
/// of conditional binomials. Distributionally identical to counting
/// draw_samples output but O(cells) instead of O(N); intended for very
/// large N.
CountTable draw_counts(const Joint& j, std::int64_t n_samples, Rng& rng);

CountTable tabulate(const SampleSet& s);

/// Empirical counts and the plug-in joint (counts / N). Rows or columns
/// never observed come out identically zero. Throws on an empty sample.
std::pair<CountTable, Joint> plugin_joint(const SampleSet& s);

/// Entropy (bits) estimated from a count vector. Plugin is the entropy of
/// the empirical frequencies; MillerMadow adds the (K-1)/(2N ln 2) bias
/// correction with K the number of occupied states.
double entropy_estimate(const std::vector<std::int64_t>& counts,
                        EntropyMethod method);

/// Largest absolute deviation between the conditional distributions of two
/// joints along an axis. Slices with zero true weight are skipped; a slice
/// with true weight but zero estimated weight yields +infinity.
double conditional_linf_error(const Joint& true_j, const Joint& est_j,
                              Axis axis);

}  // namespace entropic
