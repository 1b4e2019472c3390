#include "entropic/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entropic {

using nlohmann::json;

namespace {

json scores_to_json(const JointScores& s) {
    json j;
    auto put = [&j](const char* key, double v) {
        if (!std::isnan(v)) j[key] = v;
    };
    put("h_x", s.h_x);
    put("h_y", s.h_y);
    put("h_exo_fwd", s.h_exo_fwd);
    put("h_exo_bwd", s.h_exo_bwd);
    put("max_cond_fwd", s.max_cond_fwd);
    put("max_cond_bwd", s.max_cond_bwd);
    return j;
}

}  // namespace

std::string coupling_to_json(const Coupling& c) {
    json j;
    j["shape"] = c.shape;
    j["cells"] = json::array();
    for (const auto& cell : c.cells) {
        json jc;
        std::vector<std::uint32_t> idx(cell.idx);
        for (auto& v : idx) ++v;  // 1-based on the wire
        jc["idx"] = idx;
        jc["mass"] = cell.mass;
        j["cells"].push_back(jc);
    }
    return j.dump();
}

Coupling coupling_from_json(const std::string& text) {
    const json j = json::parse(text);
    Coupling c;
    c.shape = j.at("shape").get<std::vector<std::size_t>>();
    for (const auto& jc : j.at("cells")) {
        CouplingCell cell;
        cell.idx = jc.at("idx").get<std::vector<std::uint32_t>>();
        for (auto& v : cell.idx) {
            if (v == 0)
                throw std::invalid_argument("coupling_from_json: 0 index in "
                                            "1-based tuple");
            --v;
        }
        cell.mass = jc.at("mass").get<double>();
        c.cells.push_back(std::move(cell));
    }
    return c;
}

std::string scm_to_json(const Scm& s) {
    json j;
    j["n"] = s.n_cause();
    j["m"] = s.n_exo();
    if (s.n_effect() != s.n_cause()) j["ny"] = s.n_effect();
    j["fmap"] = json::array();
    for (std::size_t i = 0; i < s.f.rows; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < s.f.cols; ++k)
            row.push_back(s.f.at(i, k) + 1);  // 1-based state labels
        j["fmap"].push_back(row);
    }
    j["px"] = s.px.probs();
    j["pe"] = s.pe.probs();
    return j.dump();
}

Scm scm_from_json(const std::string& text) {
    const json j = json::parse(text);
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t m = j.at("m").get<std::size_t>();
    const std::size_t ny = j.contains("ny") ? j.at("ny").get<std::size_t>() : n;

    FunctionTable f{n, m, ny, {}};
    f.values.reserve(n * m);
    for (const auto& row : j.at("fmap")) {
        if (row.size() != m)
            throw std::invalid_argument("scm_from_json: fmap row length");
        for (const auto& v : row) {
            const std::int64_t val = v.get<std::int64_t>();
            if (val < 1 || val > static_cast<std::int64_t>(ny))
                throw std::invalid_argument("scm_from_json: fmap value range");
            f.values.push_back(static_cast<std::int32_t>(val - 1));
        }
    }
    if (f.values.size() != n * m)
        throw std::invalid_argument("scm_from_json: fmap shape");
    return Scm{std::move(f), Dist(j.at("px").get<std::vector<double>>()),
               Dist(j.at("pe").get<std::vector<double>>())};
}

std::string verdict_to_json(const Verdict& v) {
    json j;
    j["direction"] = to_string(v.direction);
    j["criterion"] = to_string(v.criterion);
    j["scores"] = scores_to_json(v.scores);
    if (v.threshold_used) j["threshold_used"] = *v.threshold_used;
    if (!v.note.empty()) j["note"] = v.note;
    return j.dump();
}

std::string verdict_csv_header() {
    return "direction,criterion,h_x,h_y,h_exo_fwd,h_exo_bwd,max_cond_fwd,"
           "max_cond_bwd,threshold_used\n";
}

std::string verdict_to_csv_row(const Verdict& v) {
    std::ostringstream out;
    out.precision(12);
    auto cell = [&out](double x) {
        out << ',';
        if (!std::isnan(x)) out << x;
    };
    out << to_string(v.direction) << ',' << to_string(v.criterion);
    cell(v.scores.h_x);
    cell(v.scores.h_y);
    cell(v.scores.h_exo_fwd);
    cell(v.scores.h_exo_bwd);
    cell(v.scores.max_cond_fwd);
    cell(v.scores.max_cond_bwd);
    out << ',';
    if (v.threshold_used) out << *v.threshold_used;
    out << '\n';
    return out.str();
}

std::vector<Dist> marginals_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(
            "marginals file must be a non-empty JSON array of vectors");
    std::vector<Dist> out;
    for (const auto& row : j)
        out.emplace_back(row.get<std::vector<double>>());
    return out;
}

std::string samples_to_csv(const SampleSet& s) {
    std::string csv = "x,y\n";
    for (const auto& [x, y] : s.pairs)
        csv += std::to_string(x + 1) + ',' + std::to_string(y + 1) + '\n';
    return csv;
}

SampleSet samples_from_csv(const std::string& text) {
    SampleSet s;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("x,", 0) == 0) {
            first = false;
            continue;  // header
        }
        first = false;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("samples CSV: missing comma in '" +
                                        line + "'");
        const long x = std::stol(line.substr(0, comma));
        const long y = std::stol(line.substr(comma + 1));
        if (x < 1 || y < 1)
            throw std::invalid_argument("samples CSV: states are 1-based");
        s.pairs.emplace_back(static_cast<std::uint32_t>(x - 1),
                             static_cast<std::uint32_t>(y - 1));
        s.n = std::max<std::size_t>(s.n, static_cast<std::size_t>(x));
        s.m = std::max<std::size_t>(s.m, static_cast<std::size_t>(y));
    }
    return s;
}

std::string pair_log_to_json(const BenchmarkResult& result,
                             const std::vector<double>& thresholds) {
    json j;
    j["b"] = result.b;
    j["votes"] = result.votes;
    j["thresholds"] = thresholds;
    j["pairs"] = json::array();
    for (const auto& log : result.pair_log) {
        json p;
        p["id"] = log.id;
        p["states"] = log.states;
        p["truth"] = to_string(log.truth);
        p["h_exo_fwd"] = log.h_exo_fwd;
        p["h_exo_bwd"] = log.h_exo_bwd;
        p["per_threshold"] = json::array();
        for (Direction d : log.per_threshold)
            p["per_threshold"].push_back(to_string(d));
        j["pairs"].push_back(p);
    }
    return j.dump(2);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path.string());
    out << text;
}

}  // namespace entropic
