#include <doctest.h>

#include <stdexcept>

#include "entropic/io.hpp"

using namespace entropic;

TEST_CASE("coupling JSON round trip with 1-based indices") {
    const auto c = greedy_mec({Dist({0.6, 0.4}), Dist({0.5, 0.5})});
    const std::string text = coupling_to_json(c);
    CHECK(text.find("\"shape\":[2,2]") != std::string::npos);
    CHECK(text.find("\"idx\":[1,1]") != std::string::npos);  // 1-based

    const Coupling back = coupling_from_json(text);
    REQUIRE(back.cells.size() == c.cells.size());
    for (std::size_t k = 0; k < c.cells.size(); ++k) {
        CHECK(back.cells[k].idx == c.cells[k].idx);
        CHECK(back.cells[k].mass == c.cells[k].mass);
    }
    CHECK_THROWS(coupling_from_json("{"));
}

TEST_CASE("scm JSON round trip with 1-based function values") {
    Rng rng(5);
    const Scm s{sample_uniform_function(3, 4, rng),
                sample_dirichlet(3, 1.0, rng), sample_dirichlet(4, 1.0, rng)};
    const Scm back = scm_from_json(scm_to_json(s));
    CHECK(back.f.values == s.f.values);
    CHECK(back.px.probs() == s.px.probs());
    CHECK(back.pe.probs() == s.pe.probs());
    CHECK(back.n_effect() == 3);

    // non-square effect support survives the round trip
    const Scm wide{sample_function_table(2, 3, 5, rng),
                   sample_dirichlet(2, 1.0, rng), sample_dirichlet(3, 1.0, rng)};
    const Scm wide_back = scm_from_json(scm_to_json(wide));
    CHECK(wide_back.n_effect() == 5);
    CHECK(wide_back.f.values == wide.f.values);
}

TEST_CASE("verdict serialization carries only computed scores") {
    const Joint j(2, 2, {0.4, 0.1, 0.25, 0.25});
    const Verdict v = infer_observed(j);
    const std::string text = verdict_to_json(v);
    CHECK(text.find("\"direction\"") != std::string::npos);
    CHECK(text.find("\"criterion\":\"observed\"") != std::string::npos);
    CHECK(text.find("h_exo_fwd") == std::string::npos);  // not computed

    const Verdict e = infer_exogenous(j);
    CHECK(verdict_to_json(e).find("h_exo_fwd") != std::string::npos);

    const std::string row = verdict_to_csv_row(e);
    CHECK(row.find("exogenous") != std::string::npos);
    CHECK(verdict_csv_header().find("h_exo_bwd") != std::string::npos);
}

TEST_CASE("marginals file parsing") {
    const auto ms = marginals_from_json("[[0.5,0.5],[0.3,0.7]]");
    REQUIRE(ms.size() == 2);
    CHECK(ms[1][1] == 0.7);
    CHECK_THROWS(marginals_from_json("[]"));
    CHECK_THROWS(marginals_from_json("{\"a\":1}"));
    CHECK_THROWS_AS(marginals_from_json("[[0.5,0.6]]"), std::invalid_argument);
}

TEST_CASE("sample CSV round trip is 1-based") {
    SampleSet s;
    s.n = 3;
    s.m = 2;
    s.pairs = {{0, 0}, {2, 1}, {1, 0}};
    const std::string csv = samples_to_csv(s);
    CHECK(csv.rfind("x,y\n1,1\n3,2\n2,1\n", 0) == 0);
    const SampleSet back = samples_from_csv(csv);
    CHECK(back.pairs == s.pairs);
    CHECK(back.n == 3);
    CHECK(back.m == 2);
    CHECK_THROWS(samples_from_csv("x,y\n0,1\n"));
}
