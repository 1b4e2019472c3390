#include "entropic/scm.hpp"

#include <cmath>
#include <stdexcept>

namespace entropic {

FunctionTable sample_function_table(std::size_t rows, std::size_t cols,
                                    std::size_t n_values, Rng& rng) {
    if (rows < 1 || cols < 1 || n_values < 1)
        throw std::invalid_argument("sample_function_table: empty dimension");
    FunctionTable t{rows, cols, n_values, {}};
    t.values.resize(rows * cols);
    for (auto& v : t.values)
        v = static_cast<std::int32_t>(rng.uniform_int(n_values));
    return t;
}

FunctionTable sample_uniform_function(std::size_t n, std::size_t m, Rng& rng) {
    return sample_function_table(n, m, n, rng);
}

Joint scm_joint(const Scm& s) {
    const std::size_t nx = s.n_cause(), ny = s.n_effect(), ne = s.n_exo();
    if (s.px.size() != nx || s.pe.size() != ne)
        throw std::invalid_argument("scm_joint: marginal sizes disagree with table");
    std::vector<double> table(nx * ny, 0.0);
    for (std::size_t i = 0; i < nx; ++i) {
        const double xi = s.px[i];
        for (std::size_t k = 0; k < ne; ++k)
            table[i * ny + s.f.at(i, k)] += xi * s.pe[k];
    }
    return Joint(nx, ny, std::move(table));
}

ConfoundedScm sample_confounded(std::size_t nx, std::size_t ny, std::size_t ne,
                                std::size_t l_states, double theta_e,
                                double theta_l, Rng& rng) {
    if (nx < 1 || ny < 1 || ne < 1 || l_states < 1)
        throw std::invalid_argument("sample_confounded: empty dimension");
    Dist pl = sample_low_entropy(l_states, theta_l, rng);
    Dist pe = sample_low_entropy(ne, theta_e, rng);
    std::vector<Dist> px_given_l;
    px_given_l.reserve(l_states);
    for (std::size_t l = 0; l < l_states; ++l)
        px_given_l.push_back(sample_dirichlet(nx, 1.0, rng));
    std::vector<std::int32_t> effect(nx * l_states * ne);
    for (auto& v : effect)
        v = static_cast<std::int32_t>(rng.uniform_int(ny));
    return ConfoundedScm{std::move(pl), std::move(pe), std::move(px_given_l),
                         std::move(effect), nx, ny, l_states, ne};
}

Joint confounded_joint(const ConfoundedScm& c) {
    std::vector<double> table(c.nx * c.ny, 0.0);
    for (std::size_t x = 0; x < c.nx; ++x) {
        double* row = table.data() + x * c.ny;
        for (std::size_t l = 0; l < c.nl; ++l) {
            const double w = c.pl[l] * c.px_given_l[l][x];
            if (w <= 0.0) continue;
            const std::int32_t* f = c.effect.data() + (x * c.nl + l) * c.ne;
            for (std::size_t e = 0; e < c.ne; ++e) row[f[e]] += w * c.pe[e];
        }
    }
    return Joint(c.nx, c.ny, std::move(table));
}

UniformityReport uniformity_check(const Dist& d, double rho) {
    if (!(rho >= 1.0))
        throw std::invalid_argument("uniformity_check: rho must be >= 1");
    const double n = static_cast<double>(d.size());
    const double lo = 1.0 / (std::sqrt(rho) * n);
    const double hi = std::sqrt(rho) / n;
    UniformityReport r;
    r.rho = rho;
    for (std::size_t x = 0; x < d.size(); ++x)
        if (d[x] >= lo && d[x] <= hi) r.subset.push_back(x);
    r.d = static_cast<double>(r.subset.size()) / n;
    return r;
}

double identifiability_threshold(double r, double q, double rho, double c,
                                 double d) {
    if (!(r > 0.0) || !(q > r))
        throw std::invalid_argument("identifiability_threshold: need 0 < r < q");
    if (!(d > 0.0))
        throw std::invalid_argument("identifiability_threshold: need d > 0");
    if (!(rho >= 1.0) || c < 0.0)
        throw std::invalid_argument("identifiability_threshold: need rho >= 1, c >= 0");
    const double a = std::exp(std::pow(4.0 / d, 1.0 / r));
    const double b = 2.0 * std::exp(q * q * std::pow(2.0, 2.0 * (c + 1.0)) * rho);
    return std::max({4.0, a, b});
}

namespace {

// Entropy deficit (bits) of a strictly positive distribution whose
// max/min probability ratio is at most `ratio`. Continuous at ratio = 1,
// where the deficit vanishes.
double bounded_ratio_entropy_gap(double ratio) {
    if (std::abs(ratio - 1.0) < 1e-9) return 0.0;
    const double g = ratio * std::log(ratio) / (ratio - 1.0);
    return (g - 1.0 - std::log(g)) / std::log(2.0);
}

}  // namespace

double theoretical_lower_bound(std::size_t n, double r, double q, double rho,
                               double c) {
    if (n < 4)
        throw std::invalid_argument("theoretical_lower_bound: need n >= 4");
    if (!(r > 0.0) || !(q > r))
        throw std::invalid_argument("theoretical_lower_bound: need 0 < r < q");
    if (!(rho >= 1.0) || c < 0.0)
        throw std::invalid_argument("theoretical_lower_bound: need rho >= 1, c >= 0");
    const double k = bounded_ratio_entropy_gap(rho * std::pow(2.0, c));
    const double lead = 1.0 - (1.0 + r) / (1.0 + q);
    return lead * (0.5 * std::log2(std::log2(static_cast<double>(n))) -
                   std::log2(1.0 + r) - k);
}

}  // namespace entropic
