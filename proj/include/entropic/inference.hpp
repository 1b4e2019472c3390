#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "entropic/coupling.hpp"
#include "entropic/estimation.hpp"

namespace entropic {

enum class Direction { XtoY, YtoX, Undecided };
enum class Criterion { Exogenous, Total, Conditional, Observed };

const char* to_string(Direction d);
const char* to_string(Criterion c);

/// Entropy scores of a joint, all in bits. Fields a criterion did not need
/// are NaN.
struct JointScores {
    double h_x = std::numeric_limits<double>::quiet_NaN();
    double h_y = std::numeric_limits<double>::quiet_NaN();
    /// Greedy minimum-entropy-coupling entropy of {p(Y|x)}_x / {p(X|y)}_y:
    /// the smallest exogenous entropy that explains the joint in each
    /// direction, up to the greedy approximation.
    double h_exo_fwd = std::numeric_limits<double>::quiet_NaN();
    double h_exo_bwd = std::numeric_limits<double>::quiet_NaN();
    double max_cond_fwd = std::numeric_limits<double>::quiet_NaN();  // max_x H(Y|X=x)
    double max_cond_bwd = std::numeric_limits<double>::quiet_NaN();  // max_y H(X|Y=y)
};

struct Verdict {
    Direction direction = Direction::Undecided;
    Criterion criterion = Criterion::Exogenous;
    JointScores scores;
    std::optional<double> threshold_used;
    std::string note;
};

/// Exact ties (within 1e-12) are Undecided so symmetric joints never get an
/// arbitrary direction.
inline constexpr double kTieTol = 1e-12;

/// Everything the four criteria consume, computed in one pass so batch
/// callers pay for the couplings only once. `with_mec` skips the two greedy
/// couplings when only marginal/conditional scores are needed.
JointScores score_joint(const Joint& j, bool with_mec = true);

/// Declares the direction whose greedy-coupling exogenous entropy is
/// smaller.
Verdict infer_exogenous(const Joint& j);

/// Compares H(X) + exogenous entropy forward against H(Y) + exogenous
/// entropy backward.
Verdict infer_total(const Joint& j);

/// Compares max_y H(X|Y=y) against max_x H(Y|X=x); the direction with the
/// *larger* opposing conditional entropy wins.
Verdict infer_conditional(const Joint& j);

/// Finite-sample variant: slices with fewer than min_slice samples are
/// dropped, and slice entropies use the Miller-Madow corrected estimator.
Verdict infer_conditional(const CountTable& counts, std::int64_t min_slice);

/// Baseline: X -> Y iff H(X) > H(Y).
Verdict infer_observed(const Joint& j);

/// Withholds the decision unless at least one direction's exogenous entropy
/// is at most t * log2(n_states).
Verdict thresholded_decision(const Verdict& v, double t, std::size_t n_states);

}  // namespace entropic
