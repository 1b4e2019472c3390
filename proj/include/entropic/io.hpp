#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "entropic/coupling.hpp"
#include "entropic/estimation.hpp"
#include "entropic/inference.hpp"
#include "entropic/scm.hpp"
#include "entropic/tuebingen.hpp"

namespace entropic {

/// Couplings travel as {"shape":[...],"cells":[{"idx":[...],"mass":...}]}
/// with 1-based cell indices.
std::string coupling_to_json(const Coupling& c);
Coupling coupling_from_json(const std::string& text);

/// Structural models travel as {"n":...,"m":...,"fmap":[[...]],"px":[...],
/// "pe":[...]} with 1-based function values; "ny" is added only when the
/// effect support differs from the cause's.
std::string scm_to_json(const Scm& s);
Scm scm_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& v);
/// Single CSV row (with header line available separately) for batch runs.
std::string verdict_csv_header();
std::string verdict_to_csv_row(const Verdict& v);

/// Parses a JSON array of probability vectors, e.g. [[0.5,0.5],[0.3,0.7]].
std::vector<Dist> marginals_from_json(const std::string& text);

/// Two-column CSV of 1-based (x,y) state pairs.
std::string samples_to_csv(const SampleSet& s);
SampleSet samples_from_csv(const std::string& text);

std::string pair_log_to_json(const BenchmarkResult& result,
                             const std::vector<double>& thresholds);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace entropic
