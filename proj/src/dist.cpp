#include "entropic/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace entropic {

double shannon_bits(std::span<const double> masses) {
    // Summation in sorted order makes the result independent of the input
    // permutation, bit for bit.
    std::vector<double> sorted(masses.begin(), masses.end());
    std::sort(sorted.begin(), sorted.end());
    double h = 0.0;
    for (double p : sorted) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

Dist::Dist(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::invalid_argument("Dist: empty support");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0))
            throw std::invalid_argument("Dist: negative or NaN entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw std::invalid_argument("Dist: entries sum to " +
                                    std::to_string(sum) + ", expected 1");
}

SubDist::SubDist(std::vector<double> masses) : masses_(std::move(masses)) {
    double sum = 0.0;
    for (double m : masses_) {
        if (!(m >= 0.0) || m > 1.0 + 1e-12)
            throw std::invalid_argument("SubDist: entry outside [0,1]");
        sum += m;
    }
    if (sum > 1.0 + kSumTol)
        throw std::invalid_argument("SubDist: entries sum to more than 1");
}

Joint::Joint(std::size_t n, std::size_t m, std::vector<double> table)
    : n_(n), m_(m), table_(std::move(table)) {
    if (n_ == 0 || m_ == 0 || table_.size() != n_ * m_)
        throw std::invalid_argument("Joint: shape mismatch");
    double sum = 0.0;
    for (double p : table_) {
        if (!(p >= 0.0))
            throw std::invalid_argument("Joint: negative or NaN entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw std::invalid_argument("Joint: entries sum to " +
                                    std::to_string(sum) + ", expected 1");
}

double Joint::row_sum(std::size_t i) const {
    double s = 0.0;
    for (std::size_t j = 0; j < m_; ++j) s += table_[i * m_ + j];
    return s;
}

double Joint::col_sum(std::size_t j) const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += table_[i * m_ + j];
    return s;
}

Dist Joint::row_marginal() const {
    std::vector<double> p(n_);
    for (std::size_t i = 0; i < n_; ++i) p[i] = row_sum(i);
    return Dist(std::move(p));
}

Dist Joint::col_marginal() const {
    std::vector<double> p(m_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < m_; ++j) p[j] += table_[i * m_ + j];
    return Dist(std::move(p));
}

Joint Joint::transpose() const {
    std::vector<double> t(n_ * m_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < m_; ++j) t[j * n_ + i] = table_[i * m_ + j];
    return Joint(m_, n_, std::move(t));
}

double entropy(const Dist& d) { return shannon_bits(d.probs()); }

double extended_entropy(const SubDist& s) { return shannon_bits(s.masses()); }

ConditionalProfile conditional_profile(const Joint& j, Axis axis) {
    const std::size_t slices = (axis == Axis::Y) ? j.m() : j.n();
    const std::size_t states = (axis == Axis::Y) ? j.n() : j.m();

    std::vector<double> w(slices);
    for (std::size_t s = 0; s < slices; ++s)
        w[s] = (axis == Axis::Y) ? j.col_sum(s) : j.row_sum(s);

    ConditionalProfile out{CondFamily{{}, Dist(w)}, {}};
    out.family.conds.resize(slices);
    for (std::size_t s = 0; s < slices; ++s) {
        if (w[s] <= 0.0) continue;  // empty slice: no distribution exists
        std::vector<double> cond(states);
        for (std::size_t i = 0; i < states; ++i) {
            const double cell = (axis == Axis::Y) ? j.at(i, s) : j.at(s, i);
            cond[i] = cell / w[s];
        }
        out.family.conds[s] = Dist(std::move(cond));
        out.slice_entropies.push_back(entropy(*out.family.conds[s]));
    }
    return out;
}

namespace {

// One Dirichlet draw, or nullopt when all coordinates underflow to zero
// (happens for very small alpha; the adaptive sampler treats such draws as
// rejected).
std::optional<Dist> try_dirichlet(std::size_t n, double alpha, Rng& rng) {
    std::vector<double> x(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = (alpha == 1.0) ? rng.exponential() : rng.gamma(alpha);
        sum += x[i];
    }
    if (!(sum > 0.0) || !std::isfinite(sum)) return std::nullopt;
    for (double& v : x) v /= sum;
    return Dist(std::move(x));
}

}  // namespace

Dist sample_dirichlet(std::size_t n, double alpha, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_dirichlet: n must be >= 1");
    if (!(alpha > 0.0))
        throw std::invalid_argument("sample_dirichlet: alpha must be > 0");
    if (n == 1) return Dist({1.0});
    auto d = try_dirichlet(n, alpha, rng);
    if (!d)
        throw std::domain_error(
            "sample_dirichlet: draw underflowed (alpha too small)");
    return *d;
}

Dist sample_low_entropy(std::size_t n, double theta, Rng& rng,
                        std::size_t batch) {
    if (!(theta > 0.0))
        throw std::invalid_argument("sample_low_entropy: theta must be > 0");
    if (n < 1) throw std::invalid_argument("sample_low_entropy: n must be >= 1");
    if (batch < 1) throw std::invalid_argument("sample_low_entropy: empty batch");

    const std::size_t need = std::max<std::size_t>(1, batch / 10);
    double alpha = 1.0;
    // 64 halvings past the initial alpha = 1 attempt.
    for (int level = 0; level <= 64; ++level, alpha *= 0.5) {
        std::vector<Dist> accepted;
        for (std::size_t b = 0; b < batch; ++b) {
            auto d = try_dirichlet(n, alpha, rng);
            if (d && entropy(*d) <= theta) accepted.push_back(std::move(*d));
        }
        if (accepted.size() >= need) {
            const std::size_t pick = rng.uniform_int(accepted.size());
            return accepted[pick];
        }
    }
    throw std::runtime_error(
        "sample_low_entropy: entropy threshold unreachable after 64 halvings");
}

}  // namespace entropic
