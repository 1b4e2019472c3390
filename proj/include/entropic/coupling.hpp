#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entropic/dist.hpp"

namespace entropic {

/// One cell of a sparse coupling: an index tuple (one coordinate per
/// marginal, 0-based) and its probability mass.
struct CouplingCell {
    std::vector<std::uint32_t> idx;
    double mass;
};

/// A sparse joint distribution over t marginals. Cells are kept sorted by
/// index tuple, without duplicates.
struct Coupling {
    std::vector<std::size_t> shape;  // support size of each marginal
    std::vector<CouplingCell> cells;

    double total_mass() const;
};

/// Per-marginal projection errors of a coupling against target marginals.
struct CouplingValidation {
    bool pass = false;
    double max_error = 0.0;
    /// errors[i][u]: |projection of coordinate i at state u - marginal|.
    std::vector<std::vector<double>> errors;
    std::string message;
};

/// Greedy approximate minimum-entropy coupling. Repeatedly takes the
/// smallest of the per-marginal maximum residual masses, places that amount
/// at the tuple of argmax indices, and subtracts it from every marginal.
/// Ties break toward the lowest index; residuals below 1e-12 are zeroed so
/// the loop terminates under floating-point arithmetic. Support size is at
/// most sum_i (n_i - 1) + 1.
Coupling greedy_mec(const std::vector<Dist>& marginals);

/// Shannon entropy (bits) of the coupling's cell masses.
double coupling_entropy(const Coupling& c);

/// Checks that projecting the coupling onto each coordinate reproduces the
/// corresponding marginal within tol, that masses are non-negative and sum
/// to 1, and that no index tuple repeats. Throws on shape mismatch.
CouplingValidation validate_coupling(const Coupling& c,
                                     const std::vector<Dist>& marginals,
                                     double tol);

/// Exact minimum-entropy coupling of two marginals with supports of at most
/// 4 states. Entropy is concave, so the minimum over the transportation
/// polytope sits at a vertex; every vertex is the solution of some spanning
/// tree of the bipartite support graph, and all spanning trees are
/// enumerated. Throws for more than 2 marginals or supports above 4.
Coupling brute_force_mec_small(const std::vector<Dist>& marginals);

/// Converts a valid coupling for some original marginals into a valid
/// coupling for entrywise-perturbed marginals (|noisy - original| <= delta).
/// Phase I proportionally rescales over-target projections down to the
/// noisy targets; Phase II couples the per-marginal residual excess with
/// the greedy algorithm and adds it cell-wise. For t marginals on n states
/// with delta <= 1/(n^2 log2 n) the output entropy exceeds the input's by
/// less than log2(e)/e + 2 + o(1) bits.
Coupling transfer_coupling(const Coupling& p,
                           const std::vector<Dist>& noisy_marginals,
                           double delta);

}  // namespace entropic
