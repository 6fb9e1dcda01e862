#include <doctest.h>

#include <algorithm>

#include "spin7/errors.hpp"
#include "spin7/report.hpp"
#include "spin7/scenario.hpp"

using namespace spin7;

namespace {

Integer milestone(const Report& r, const std::string& name) {
    auto it = std::find_if(r.milestones.begin(), r.milestones.end(),
                           [&](const auto& m) { return m.first == name; });
    REQUIRE_MESSAGE(it != r.milestones.end(), "missing milestone " << name);
    return it->second;
}

} // namespace

TEST_CASE("builtin scenarios are available") {
    const auto names = builtin_scenario_names();
    CHECK(names == std::vector<std::string>{"section4", "m11", "m12", "m22", "cy-double"});
    for (const auto& n : names)
        CHECK(builtin_scenario(n).name == n);
    CHECK_THROWS_AS(builtin_scenario("nope"), ParseError);

    const Scenario s4 = builtin_scenario("section4");
    CHECK(s4.weights == Weights({1, 1, 1, 1, 4}));
    CHECK(s4.kind == PipelineKind::Spin7Double);
    CHECK(s4.blocks.size() == 1);
    CHECK(s4.blocks[0].construction.ci_degrees == std::vector<long long>{8});
    CHECK(s4.blocks[0].construction.s_degree == 8);
    CHECK(s4.blocks[0].fixed_points.value == 1);

    const Scenario m12 = builtin_scenario("m12");
    CHECK(m12.blocks.size() == 2);
    CHECK(m12.kind == PipelineKind::Spin7Glue);
}

TEST_CASE("the doubling chain reproduces every intermediate") {
    const Report r = run(builtin_scenario("section4"));
    CHECK(milestone(r, "chi(Xbar)") == 1381);
    CHECK(milestone(r, "tau(Xbar)") == 577);
    CHECK(milestone(r, "chi(X)") == 1677);
    CHECK(milestone(r, "chi(Z)") == 839);
    CHECK(milestone(r, "chi(Mt)") == 1678);
    CHECK(milestone(r, "tau(Mt)") == 578);
    CHECK(milestone(r, "b4(Mt)") == 1676);
    CHECK(r.result.final.chi == 1680);
    CHECK(r.result.final.tau == 576);
    CHECK(*r.result.final.b2 == 0);
    CHECK(*r.result.final.b3 == 0);
    CHECK(*r.result.final.b4 == 1678);
    CHECK(r.result.a_hat == 1);
    CHECK(r.result.holonomy == Holonomy::Spin7);

    // every produced trace line carries a source
    for (const auto& t : r.trace)
        CHECK_FALSE(t.source.empty());
}

TEST_CASE("reproductions pass for all builtins") {
    for (const auto& name : builtin_scenario_names()) {
        const Report r = reproduce(name);
        INFO("scenario ", name);
        CHECK_FALSE(r.comparisons.empty());
        for (const auto& c : r.comparisons) {
            INFO(c.name, " expected ", c.expected, " got ", c.actual);
            CHECK(c.pass);
        }
        CHECK(all_comparisons_pass(r));
    }
}

TEST_CASE("mixed gluing uses per-block labels") {
    const Report r = run(builtin_scenario("m12"));
    CHECK(milestone(r, "chi(Z)[V1]") == 454);
    CHECK(milestone(r, "chi(Z)[V2]") == 839);
    CHECK(r.result.final.chi == 1296);
}

TEST_CASE("the typo warning survives into the report") {
    const Report r = run(builtin_scenario("section4"));
    REQUIRE_FALSE(r.warnings.empty());
    bool found = false;
    for (const auto& w : r.warnings)
        found = found || (w.find("304") != std::string::npos &&
                          w.find("7808") != std::string::npos);
    CHECK(found);

    const std::string text = emit_text(r);
    CHECK(text.find("7808") != std::string::npos);
}

TEST_CASE("json round trip") {
    for (const auto& name : {"section4", "m12", "cy-double"}) {
        const Report r = reproduce(name);
        const auto j = report_to_json(r);
        const Report back = report_from_json(j);
        CHECK(back == r);
        // a serialized-again report is byte-identical
        CHECK(report_to_json(back).dump(2) == j.dump(2));
    }
}

TEST_CASE("reports are byte-identical across runs") {
    for (const auto& name : builtin_scenario_names()) {
        const std::string a = report_to_json(reproduce(name)).dump(2);
        const std::string b = report_to_json(reproduce(name)).dump(2);
        CHECK(a == b);
    }
}

TEST_CASE("json carries the A-genus") {
    const auto j = report_to_json(run(builtin_scenario("section4")));
    CHECK(j.at("A_hat").get<long long>() == 1);
    CHECK(j.at("holonomy").get<std::string>() == "Spin(7)");
    CHECK(j.at("schema_version").get<int>() == 1);
}

TEST_CASE("empty report emits valid json") {
    const Report empty;
    const auto j = report_to_json(empty);
    CHECK(j.at("trace").is_array());
    CHECK(j.at("trace").empty());
    CHECK(report_from_json(j) == empty);
}

TEST_CASE("scenario files parse strictly") {
    const char* good = R"({
      "schema_version": 1,
      "name": "tiny",
      "description": "file-loaded copy of the doubling scenario",
      "weights": [1,1,1,1,4],
      "pipeline": "spin7_double",
      "simply_connected": {"value": true, "source": "test"},
      "blocks": [{
        "label": "V",
        "construction": {
          "ci_degrees": [8], "s_degree": 8,
          "assertions": {
            "quasismooth": {"value": true, "source": "test"},
            "d_smooth": {"value": true, "source": "test"},
            "s_smooth": {"value": true, "source": "test"},
            "involution_free_on_d_and_s": {"value": true, "source": "test"},
            "fixed_locus_is_singular_locus": {"value": true, "source": "test"}
          }
        },
        "ambient": {"kind": "weighted_projective_space", "tau": {"value": 1, "source": "test"}},
        "divisor": {"kind": "hypersurface", "degree": 8,
                    "cover": {"ambient_dim": 4, "degrees": [8], "sheets": 4}},
        "surface": {"kind": "branched_cover",
                    "cover": {"ambient_dim": 4, "degrees": [8, 8], "sheets": 4},
                    "ci_degrees": [8, 8]},
        "fixed_points": {"value": 1, "source": "test"},
        "stratum_restriction": {"variables": 1, "coefficients": [0], "source": "test"}
      }]
    })";
    const Scenario sc = parse_scenario(good);
    CHECK(sc.name == "tiny");
    const Report r = run(sc);
    CHECK(r.result.final.chi == 1680);
    CHECK(r.result.a_hat == 1);
}

TEST_CASE("scenario parse errors carry field paths") {
    CHECK_THROWS_WITH_AS(parse_scenario("{"), doctest::Contains("invalid JSON"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"schema_version": 1})"),
                         doctest::Contains("$.name"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_scenario(
            R"({"schema_version": 1, "name": "x", "description": "", "weights": [1,1],
                "pipeline": "spin7_double", "simply_connected": {"value": true, "source": "s"},
                "blocks": [], "surprise": 1})"),
        doctest::Contains("$.surprise"), ParseError);
    // gcd violation in the weights
    CHECK_THROWS_WITH_AS(
        parse_scenario(
            R"({"schema_version": 1, "name": "x", "description": "", "weights": [2,4],
                "pipeline": "spin7_double", "simply_connected": {"value": true, "source": "s"},
                "blocks": []})"),
        doctest::Contains("$.weights"), ParseError);
}

TEST_CASE("corrupted inputs trip the integrality guards") {
    // a wrong fixed-point count breaks the stratum cross-check
    Scenario sc = builtin_scenario("section4");
    sc.blocks[0].fixed_points.value = 3;
    CHECK_THROWS_AS(run(sc), InconsistencyError);

    // without the cross-check the parity guard catches it downstream
    sc.blocks[0].stratum_restriction.reset();
    CHECK_THROWS_AS(run(sc), InconsistencyError);

    // a tampered ambient signature with intact parity breaks the
    // 48-divisibility of the A-genus
    Scenario sc2 = builtin_scenario("section4");
    sc2.blocks[0].ambient.tau.value = 3;
    CHECK_THROWS_AS(run(sc2), InconsistencyError);

    // an even shift instead trips the halving parity guard
    Scenario sc2b = builtin_scenario("section4");
    sc2b.blocks[0].ambient.tau.value = 2;
    CHECK_THROWS_AS(run(sc2b), InconsistencyError);

    // a violated degree condition aborts before the chain
    Scenario sc3 = builtin_scenario("section4");
    sc3.blocks[0].construction.ci_degrees = {7};
    CHECK_THROWS_AS(run(sc3), InconsistencyError);

    // an input diamond that contradicts the recomputation is rejected
    Scenario sc4 = builtin_scenario("m11");
    sc4.blocks[0].ambient.diamond->diamond.at(3, 1) = 36;
    sc4.blocks[0].ambient.diamond->diamond.at(1, 3) = 36;
    CHECK_THROWS_AS(run(sc4), InconsistencyError);
}

TEST_CASE("comparison bookkeeping") {
    Report r;
    CHECK(all_comparisons_pass(r)); // vacuous
    r.comparisons.push_back({"chi(M)", "1680", "1680", true});
    CHECK(all_comparisons_pass(r));
    r.comparisons.push_back({"tau(M)", "576", "575", false});
    CHECK_FALSE(all_comparisons_pass(r));
}

TEST_CASE("block count must match the pipeline kind") {
    Scenario sc = builtin_scenario("m12");
    sc.blocks.pop_back();
    CHECK_THROWS_AS(run(sc), ParseError);
}
