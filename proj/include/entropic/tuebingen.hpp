#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "entropic/inference.hpp"

namespace entropic {

/// One scalar cause-effect pair: two aligned columns of real observations,
/// the annotated ground-truth direction and the dataset weight.
struct PairRecord {
    std::string id;
    std::vector<double> x_col, y_col;
    Direction truth = Direction::XtoY;
    double weight = 1.0;
    std::size_t n_samples = 0;
    std::size_t uniq_x = 0, uniq_y = 0;
};

struct PairLoadReport {
    std::vector<PairRecord> pairs;
    std::vector<std::string> skipped;  // "id: reason" per excluded pair
};

/// Raised when the dataset directory or its metadata file is absent.
struct DatasetMissingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads pairNNNN.txt files as described by the pairmeta.txt in `dir`
/// (columns: id, cause first/last column, effect first/last column,
/// weight). Pairs whose cause or effect spans more than one column are
/// skipped, as are files with non-numeric rows; each skip is logged.
PairLoadReport load_pairs(const std::filesystem::path& dir);

/// Number of quantization states: min(b, floor(N/10), uniq_x, uniq_y),
/// clamped to at least 1.
std::size_t choose_states(std::size_t b, std::size_t n_samples,
                          std::size_t uniq_x, std::size_t uniq_y);

/// Uniform quantization of a column into n states over its observed range,
/// 0-based. Boundaries sit at a + (b-a) i/n; a value exactly on a boundary
/// joins the upper bin. With `perturb`, each boundary is shifted by an
/// independent uniform offset in [-(b-a)/(8n), +(b-a)/(8n)].
std::vector<std::uint32_t> quantize(const std::vector<double>& col,
                                    std::size_t n, bool perturb, Rng& rng);

struct BenchmarkThresholdRow {
    double threshold = 0.0;
    std::size_t decided = 0, correct = 0;
    double accuracy = 0.0;           // correct / decided, unweighted
    double weighted_accuracy = 0.0;  // weight-adjusted over decided pairs
};

struct PairVerdictLog {
    std::string id;
    std::size_t states = 0;
    double h_exo_fwd = 0.0, h_exo_bwd = 0.0;  // first vote's entropies
    Direction truth = Direction::XtoY;
    std::vector<Direction> per_threshold;
};

struct BenchmarkResult {
    std::size_t b = 0;
    std::size_t votes = 1;
    std::vector<BenchmarkThresholdRow> rows;
    std::vector<PairVerdictLog> pair_log;

    std::string to_csv() const;
};

/// Full benchmark pass: quantize each pair to choose_states(b, ...) states
/// (votes > 1 repeats with independently perturbed boundaries and takes the
/// majority among decided votes; an even split is undecided), score the
/// empirical joint with the exogenous criterion, and apply each decision
/// threshold t (decide only when some direction needs at most t * log2(n)
/// bits of exogenous entropy).
BenchmarkResult run_benchmark(const std::vector<PairRecord>& pairs,
                              std::size_t b,
                              const std::vector<double>& thresholds,
                              std::size_t votes, std::uint64_t seed,
                              unsigned workers = 0);

}  // namespace entropic
