#include <doctest.h>

#include <touchard/report.hpp>
#include <touchard/version.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

using namespace touchard;
using nlohmann::json;
using nlohmann::ordered_json;

TEST_SUITE("report") {

TEST_CASE("config parsing accepts the full key set") {
    json j = json::parse(R"({
        "kinds": ["TOUCHARD", "COR1"],
        "p": [3, 5],
        "n": [0, 40],
        "m": [1, 2],
        "r": [-1, 1],
        "a": [1, 2],
        "N": [1, 4],
        "horizon": 500,
        "minimal_budget": 1000,
        "format": "csv",
        "record_all": true,
        "timing": true,
        "probe": true
    })");
    GridConfig cfg = GridConfig::from_json(j);
    REQUIRE(cfg.kinds.size() == 2);
    CHECK(cfg.kinds[0] == CheckKind::TOUCHARD);
    CHECK(cfg.kinds[1] == CheckKind::COR1);
    REQUIRE(cfg.ps.has_value());
    CHECK(*cfg.ps == std::vector<long>{3, 5});
    CHECK(cfg.n_range == std::pair<long, long>{0, 40});
    CHECK(cfg.r_range == std::pair<long, long>{-1, 1});
    CHECK(cfg.horizon == 500);
    CHECK(cfg.minimal_budget == 1000);
    CHECK(cfg.format == "csv");
    CHECK(cfg.record_all);
    CHECK(cfg.timing);
    CHECK(cfg.probe);
}

TEST_CASE("config defaults cover the whole catalogue") {
    GridConfig cfg = GridConfig::from_json(json::object());
    CHECK(cfg.kinds.size() == 15);
    CHECK_FALSE(cfg.ps.has_value());
    CHECK(cfg.format == "json");
    CHECK(cfg.minimal_budget == 300000);
    CHECK_FALSE(cfg.record_all);
}

TEST_CASE("malformed configs are rejected with config_error") {
    auto reject = [](const char* text) {
        CHECK_THROWS_AS(GridConfig::from_json(json::parse(text)), config_error);
    };
    reject(R"({"bogus_key": 1})");
    reject(R"({"kinds": []})");
    reject(R"({"kinds": ["NOT_A_KIND"]})");
    reject(R"({"kinds": [17]})");
    reject(R"({"p": [6]})");          // composite
    reject(R"({"p": []})");
    reject(R"({"p": 5})");            // must be an array
    reject(R"({"n": 5})");            // must be a pair
    reject(R"({"n": [3, 1]})");       // empty range
    reject(R"({"n": [0, 1, 2]})");
    reject(R"({"format": "xml"})");
    reject(R"({"horizon": 0})");
    reject(R"({"minimal_budget": -4})");
    reject(R"({"record_all": "yes"})");
    reject(R"([1, 2, 3])");           // root must be an object
}

TEST_CASE("file loading distinguishes missing files from bad JSON") {
    CHECK_THROWS_AS(GridConfig::from_file("/nonexistent/config.json"), config_error);
}

TEST_CASE("overrides replace only the configured dimensions") {
    json j = json::parse(R"({"n": [0, 5], "p": [3]})");
    GridConfig cfg = GridConfig::from_json(j);
    Grid g = cfg.grid_for(CheckKind::TOUCHARD);
    CHECK(g.ps == std::vector<long>{3});
    CHECK(g.n_lo == 0);
    CHECK(g.n_hi == 5);
    // m stays canonical
    Grid canon = canonical_grid(CheckKind::TOUCHARD);
    CHECK(g.m_lo == canon.m_lo);
    CHECK(g.m_hi == canon.m_hi);
}

TEST_CASE("the config echo is deterministic and complete") {
    GridConfig cfg;
    ordered_json echo = cfg.echo();
    CHECK(echo["kinds"].size() == 15);
    CHECK(echo["format"] == "json");
    CHECK(echo["minimal_budget"] == 300000);
    CHECK_FALSE(echo.contains("p"));
    CHECK_FALSE(echo.contains("n"));
    CHECK(echo.dump() == cfg.echo().dump());
}

TEST_CASE("point serialization keeps a fixed field order") {
    CheckPoint pt;
    pt.n = 2;
    pt.p = 5;
    CHECK(point_json(pt).dump() == R"({"p":5,"n":2})");
}

TEST_CASE("congruence fragments carry the full grid accounting") {
    Grid g;
    g.n_lo = 1;
    g.n_hi = 36;
    g.r_lo = 0;
    g.r_hi = 1;
    CongruenceReport report = run_check(CheckKind::COR1, g, true);
    ordered_json frag = to_fragment(report);
    CHECK(frag["kind"] == "COR1");
    CHECK(frag["tested"] == 72);
    CHECK(frag["skipped"] == 0);
    CHECK(frag["failures"].empty());
    CHECK(frag["status"] == "PASS");
    REQUIRE(frag.contains("points"));
    CHECK(frag["points"].size() == 72);
    const auto& first = frag["points"][0];
    CHECK(first["point"]["n"] == 1);
    CHECK(first["pass"] == true);
    // big values serialize as decimal strings, never numbers
    for (const auto& point : frag["points"]) {
        for (const auto& side : point["sides"]) {
            CHECK(side.is_string());
            CHECK(side.get<std::string>().find('e') == std::string::npos);
        }
    }
    // fragment construction is pure: same report, same bytes
    CHECK(to_fragment(report).dump() == frag.dump());
}

TEST_CASE("period fragments spell out UNKNOWN rather than guessing") {
    PeriodAnalysis a;
    a.p = 11;
    a.np = Integer("28531167061");
    a.divisors = {Integer(1), Integer(15797)};
    a.divisor_form_ok = true;
    a.lower_bound = 352727;
    a.bound_ok = false;
    a.horizon = 0;
    ordered_json frag = to_fragment(a);
    CHECK(frag["kind"] == "MINIMAL_PERIOD");
    CHECK(frag["np"] == "28531167061");
    CHECK(frag["minimal_period"] == "UNKNOWN");
    CHECK(frag["status"] == "PASS");  // property-based pass
    a.minimal_period = Integer(15797);
    ordered_json frag2 = to_fragment(a);
    CHECK(frag2["minimal_period"] == "15797");
    CHECK(frag2["status"] == "FAIL");  // a proper divisor is not np
}

TEST_CASE("falsifier fragments label sampling honestly") {
    DigitSumReport d;
    d.p = 7;
    d.exhaustive = false;
    d.candidates = 190;
    d.periods_found = 0;
    d.horizon = 117750;
    ordered_json frag = to_fragment(d);
    CHECK(frag["kind"] == "DIGIT_SUM_FALSIFIER");
    CHECK(frag["exhaustive"] == false);
    CHECK(frag["status"] == "PASS");
    d.periods_found = 1;
    d.survivors = {42};
    CHECK(to_fragment(d)["status"] == "FAIL");
}

TEST_CASE("run reports aggregate status across fragments") {
    GridConfig cfg;
    ordered_json pass_frag;
    pass_frag["kind"] = "X";
    pass_frag["status"] = "PASS";
    ordered_json fail_frag;
    fail_frag["kind"] = "Y";
    fail_frag["status"] = "FAIL";

    ordered_json all_pass = assemble_run_report(cfg.echo(), {pass_frag, pass_frag});
    CHECK(all_pass["version"] == kVersion);
    CHECK(all_pass["status"] == "PASS");
    CHECK(all_pass["checks"].size() == 2);
    CHECK_FALSE(all_pass.contains("timings"));

    ordered_json mixed = assemble_run_report(cfg.echo(), {pass_frag, fail_frag});
    CHECK(mixed["status"] == "FAIL");

    std::vector<std::pair<std::string, double>> timings = {{"X", 1.25}};
    ordered_json timed = assemble_run_report(cfg.echo(), {pass_frag}, &timings);
    REQUIRE(timed.contains("timings"));
    CHECK(timed["timings"][0]["check"] == "X");
}

TEST_CASE("verify CSV emits one row per tested point") {
    Grid g;
    g.n_lo = 1;
    g.n_hi = 5;
    g.r_lo = 0;
    g.r_hi = 0;
    CongruenceReport report = run_check(CheckKind::COR1, g, true);
    std::string csv = verify_csv({report});
    CHECK(csv.rfind("kind,p,a,m,n,r,N,pass,lhs,rhs,rhs2,rhs3\n", 0) == 0);
    long rows = 0;
    for (char ch : csv) rows += (ch == '\n');
    CHECK(rows == 1 + 5);
    CHECK(csv.find("COR1,,,,1,0,,PASS,1,1,,") != std::string::npos);
}

TEST_CASE("period CSV flattens both fragment shapes") {
    PeriodAnalysis a = minimal_period(PrimeModulus(5), 300000);
    DigitSumReport d = digit_sum_falsifier(PrimeModulus(3));
    std::string csv = period_csv({to_fragment(a), to_fragment(d)});
    CHECK(csv.rfind("kind,p,r,np,minimal_period,divisor_form_ok,lower_bound,bound_ok,"
                    "horizon,exhaustive,candidates,periods_found,status\n", 0) == 0);
    CHECK(csv.find("MINIMAL_PERIOD,5,,781,781,true,131,true,") != std::string::npos);
    CHECK(csv.find("DIGIT_SUM_FALSIFIER,3,,,,,,,") != std::string::npos);
}

}  // TEST_SUITE
