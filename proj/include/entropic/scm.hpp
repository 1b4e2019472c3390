#pragma once

#include <cstdint>
#include <vector>

#include "entropic/dist.hpp"

namespace entropic {

/// A tabulated function f: [rows] x [cols] -> [n_values], stored row-major
/// with 0-based values.
struct FunctionTable {
    std::size_t rows = 0, cols = 0, n_values = 0;
    std::vector<std::int32_t> values;

    std::int32_t at(std::size_t r, std::size_t c) const {
        return values[r * cols + c];
    }
};

/// Structural model Y = f(X, E) with X independent of E: a function table
/// over (cause state, exogenous state), the cause marginal and the
/// exogenous marginal. The effect support may differ from the cause's.
struct Scm {
    FunctionTable f;  // rows = |X|, cols = |E|, values in [0, n_effect)
    Dist px;
    Dist pe;

    std::size_t n_cause() const { return f.rows; }
    std::size_t n_effect() const { return f.n_values; }
    std::size_t n_exo() const { return f.cols; }
};

/// Confounded model: a latent L feeds both sides. X|L=l is drawn from a
/// per-l conditional; Y is determined by the table y = f(x, l, e) with
/// exogenous E independent of (X, L).
struct ConfoundedScm {
    Dist pl;
    Dist pe;
    std::vector<Dist> px_given_l;      // one distribution over X per l
    std::vector<std::int32_t> effect;  // y at ((x * |L|) + l) * |E| + e
    std::size_t nx = 0, ny = 0, nl = 0, ne = 0;

    std::int32_t effect_at(std::size_t x, std::size_t l, std::size_t e) const {
        return effect[(x * nl + l) * ne + e];
    }
};

/// Result of testing how uniform a distribution is: the set S of states
/// whose mass lies within a sqrt(rho) factor of 1/n, and d = |S|/n.
struct UniformityReport {
    double rho = 1.0;
    std::vector<std::size_t> subset;
    double d = 0.0;
};

/// Function table with every entry independently uniform on [0, n).
FunctionTable sample_uniform_function(std::size_t n, std::size_t m, Rng& rng);

/// As above with an explicit value range; used when cause and effect have
/// different support sizes.
FunctionTable sample_function_table(std::size_t rows, std::size_t cols,
                                    std::size_t n_values, Rng& rng);

/// Exact joint induced by the model: p(x, y) = px(x) * sum_e 1{f(x,e)=y} pe(e).
Joint scm_joint(const Scm& s);

/// Draws a confounded model: low-entropy pl and pe, uniform-simplex
/// conditionals p(X|l), and a uniformly random effect table over (x, l, e).
ConfoundedScm sample_confounded(std::size_t nx, std::size_t ny, std::size_t ne,
                                std::size_t l_states, double theta_e,
                                double theta_l, Rng& rng);

/// p(x, y) = sum_l sum_e pl(l) pe(e) p(x|l) 1{f(x,l,e)=y}.
Joint confounded_joint(const ConfoundedScm& c);

/// States whose probability lies in [1/(sqrt(rho) n), sqrt(rho)/n].
UniformityReport uniformity_check(const Dist& d, double rho);

/// Smallest support size for which the explicit anti-causal entropy bound
/// applies: max{4, e^((4/d)^(1/r)), 2 e^(q^2 2^(2(c+1)) rho)}.
double identifiability_threshold(double r, double q, double rho, double c,
                                 double d);

/// Explicit lower bound (bits) on the anti-causal exogenous entropy:
/// (1 - (1+r)/(1+q)) (0.5 log2 log2 n - log2(1+r) - K(rho, c)), where
/// K is the entropy deficit of a distribution with probability ratio
/// bounded by rho 2^c (zero in the limit rho 2^c -> 1). May be negative
/// for small n, in which case the bound is vacuous.
double theoretical_lower_bound(std::size_t n, double r, double q, double rho,
                               double c);

}  // namespace entropic
