#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "entropic/rng.hpp"

namespace entropic {

/// Absolute tolerance for every sum-to-one check in the library.
inline constexpr double kSumTol = 1e-9;

/// Shannon entropy in bits of a raw non-negative mass vector, with the
/// convention 0 * log 0 = 0. No validation; the typed wrappers validate.
double shannon_bits(std::span<const double> masses);

/// A categorical probability distribution on {1..n}. Immutable once built;
/// the constructor rejects negative entries and vectors whose sum strays
/// from 1 by more than kSumTol.
class Dist {
  public:
    explicit Dist(std::vector<double> probs);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }
    auto begin() const { return probs_.begin(); }
    auto end() const { return probs_.end(); }

  private:
    std::vector<double> probs_;
};

/// A sub-distribution: entries in [0,1] that may sum to less than 1.
/// Used wherever partially-assigned mass carries entropy on its own.
class SubDist {
  public:
    explicit SubDist(std::vector<double> masses);

    std::size_t size() const { return masses_.size(); }
    double operator[](std::size_t i) const { return masses_[i]; }
    const std::vector<double>& masses() const { return masses_; }

  private:
    std::vector<double> masses_;
};

/// An n x m joint probability table over (X, Y), row-major.
class Joint {
  public:
    Joint(std::size_t n, std::size_t m, std::vector<double> table);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    double at(std::size_t i, std::size_t j) const { return table_[i * m_ + j]; }
    const std::vector<double>& table() const { return table_; }

    double row_sum(std::size_t i) const;
    double col_sum(std::size_t j) const;
    Dist row_marginal() const;  // p(X)
    Dist col_marginal() const;  // p(Y)
    Joint transpose() const;

  private:
    std::size_t n_, m_;
    std::vector<double> table_;
};

/// Which variable a conditional family is conditioned on.
enum class Axis { X, Y };

/// The family of slice conditionals of a joint: for Axis::Y these are
/// {p(X|Y=y)}_y weighted by p(Y). Slices of zero weight hold no
/// distribution (nullopt) rather than a fabricated one.
struct CondFamily {
    std::vector<std::optional<Dist>> conds;
    Dist weights;
};

struct ConditionalProfile {
    CondFamily family;
    /// Entropy (bits) of each non-empty slice, in slice order.
    std::vector<double> slice_entropies;
};

/// Shannon entropy of a distribution, in bits. Always in [0, log2 n].
double entropy(const Dist& d);

/// Entropy functional extended to sub-distributions: -sum m_i log2 m_i over
/// the nonzero entries. Coincides with entropy() when the masses sum to 1.
double extended_entropy(const SubDist& s);

/// Slice conditionals of a joint along an axis together with their
/// entropies: Axis::Y yields {p(X|Y=y)}_y and H(X|Y=y).
ConditionalProfile conditional_profile(const Joint& j, Axis axis);

/// One draw from the symmetric Dirichlet(alpha) on the n-simplex.
/// alpha = 1 is the uniform distribution on the simplex and is generated
/// by normalizing unit-rate exponentials. Throws std::domain_error when
/// alpha is so small that every coordinate underflows.
Dist sample_dirichlet(std::size_t n, double alpha, Rng& rng);

/// Draws a distribution on n states with entropy at most `theta` bits.
/// Adaptive scheme: starting from alpha = 1, draw `batch` Dirichlet(alpha)
/// samples; if at least batch/10 of them meet the entropy bound, return one
/// of those uniformly at random, otherwise halve alpha and repeat. Throws
/// std::runtime_error after 64 halvings (threshold unreachable in double
/// precision).
Dist sample_low_entropy(std::size_t n, double theta, Rng& rng,
                        std::size_t batch = 10);

}  // namespace entropic
