#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "riemsol/errors.hpp"
#include "riemsol/manifest.hpp"
#include "riemsol/suites.hpp"
#include "test_support.hpp"

using namespace riemsol;
using namespace riemsol::testing;

namespace {

const CheckEntry* find_entry(const ReportDocument& doc, const std::string& id) {
    for (const CheckEntry& e : doc.entries)
        if (e.id == id) return &e;
    return nullptr;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(RIEMSOL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("bundled manifests parse into exact structures") {
    Manifest hyp = parse_manifest(slurp(fixture_path("hyp3.json")));
    CHECK(hyp.dimension == 3);
    REQUIRE(hyp.brackets.size() == 2);
    CHECK(hyp.brackets[0].i == 1);
    CHECK(hyp.brackets[0].j == 3);
    CHECK(hyp.brackets[0].coeffs == vec(-1, 0, 0));
    REQUIRE(hyp.metric.has_value());
    CHECK(*hyp.metric == Mat3::identity());
    REQUIRE(hyp.acm.has_value());
    CHECK(hyp.acm->xi == vec(0, 0, 1));
    // phi rows in the file are columns of the endomorphism: phi(e1) = -e2
    CHECK(hyp.acm->phi.at(1, 0) == rat(-1));
    CHECK(hyp.acm->phi.at(0, 1) == rat(1));
    REQUIRE(hyp.solitons.size() == 1);
    CHECK(hyp.solitons[0].name == "zero");
    CHECK(hyp.solitons[0].lambda == rat(1));

    Manifest flat = parse_manifest(slurp(fixture_path("flat3.json")));
    CHECK_FALSE(flat.metric.has_value());
    CHECK(flat.brackets.empty());
    REQUIRE(flat.gradient_solitons.size() == 1);
    CHECK(flat.gradient_solitons[0].potential_gradient.is_zero());
    REQUIRE(flat.collinear_checks.size() == 1);
    CHECK(flat.collinear_checks[0].c == rat(1));

    Manifest su = parse_manifest(slurp(fixture_path("su2.json")));
    CHECK(su.brackets.size() == 3);
}

TEST_CASE("schema violations are rejected with informative messages") {
    CHECK_THROWS_WITH_AS(parse_manifest("{}"), doctest::Contains("brackets"), SchemaError);

    CHECK_THROWS_WITH_AS(parse_manifest(R"({"brackets": [], "mystery": 1})"),
                         doctest::Contains("mystery"), SchemaError);

    CHECK_THROWS_WITH_AS(
        parse_manifest(
            R"({"brackets": [], "solitons": [{"name": "a", "potential": ["0","0","0"], "lambda": 1}]})"),
        doctest::Contains("strings"), SchemaError);

    CHECK_THROWS_AS(
        parse_manifest(R"({"brackets": [{"i": 1, "j": 3, "coeffs": ["1/0", "0", "0"]}]})"),
        RationalFormatError);

    CHECK_THROWS_AS(parse_manifest(R"({"dimension": 4, "brackets": []})"), SchemaError);

    CHECK_THROWS_AS(parse_manifest(R"({"brackets": [{"i": 1, "j": 3}]})"), SchemaError);

    CHECK_THROWS_AS(
        parse_manifest(R"({"brackets": [], "metric": [["1","0"],["0","1"]]})"),
        SchemaError);

    CHECK_THROWS_WITH_AS(
        parse_manifest(
            R"({"brackets": [],
                "solitons": [{"name": "a", "potential": ["0","0","0"], "lambda": "0"},
                             {"name": "a", "potential": ["0","0","0"], "lambda": "1"}]})"),
        doctest::Contains("duplicate"), SchemaError);
}

TEST_CASE("malformed json reports line and column") {
    try {
        parse_manifest("{\n  \"brackets\": [,]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 0);
    }
}

TEST_CASE("construction failures become failed report entries") {
    // duplicate bracket pair: well-formed manifest, invalid geometry
    Manifest m = parse_manifest(
        R"({"brackets": [{"i": 1, "j": 3, "coeffs": ["1", "0", "0"]},
                         {"i": 3, "j": 1, "coeffs": ["0", "1", "0"]}]})");
    ReportDocument doc = run_suite(m, Suite::Validate);
    CHECK_FALSE(doc.passed());
    REQUIRE(doc.entries.size() == 1);
    CHECK(doc.entries[0].id == "build.construction");
    CHECK(doc.entries[0].status == CheckStatus::Fail);

    // jacobi violation reports the offending triple but still exits normally
    Manifest j = parse_manifest(
        R"({"brackets": [{"i": 1, "j": 2, "coeffs": ["1", "0", "0"]},
                         {"i": 1, "j": 3, "coeffs": ["0", "1", "0"]}]})");
    ReportDocument jd = run_suite(j, Suite::All);
    CHECK_FALSE(jd.passed());
    CHECK(jd.entries[0].id == "build.construction");
    CHECK(report_to_text(jd).find("FAIL") != std::string::npos);
}

TEST_CASE("suite selection and name filters") {
    CHECK(suite_from_name("report") == Suite::All);
    CHECK(suite_from_name("all") == Suite::All);
    CHECK(suite_from_name("identities") == Suite::Identities);
    CHECK_FALSE(suite_from_name("nonsense").has_value());

    Manifest hyp = parse_manifest(slurp(fixture_path("hyp3.json")));
    SuiteOptions opts;
    opts.name_filter = "zero";
    CHECK(run_suite(hyp, Suite::Soliton, opts).passed());

    opts.name_filter = "missing";
    CHECK_THROWS_AS(run_suite(hyp, Suite::Soliton, opts), SchemaError);
}

TEST_CASE("full suite entries on the hyperbolic fixture") {
    Manifest hyp = parse_manifest(slurp(fixture_path("hyp3.json")));
    ReportDocument doc = run_suite(hyp, Suite::All);
    CHECK(doc.passed());
    CHECK(doc.suite == "report");

    REQUIRE(!doc.entries.empty());
    CHECK(doc.entries[0].id == "build.jacobi");

    const CheckEntry* killing = find_entry(doc, "acm.xi_killing");
    REQUIRE(killing != nullptr);
    CHECK(killing->status == CheckStatus::Info);
    CHECK(killing->details.find("not a Killing field") != std::string::npos);

    for (const char* id :
         {"connection.torsion_free", "curvature.b8", "acm.b2", "classify.consistency",
          "identity.b9", "lemma5.g7", "soliton.zero.aa1", "soliton.zero.contraction",
          "soliton.zero.integrability", "theorem31.zero.scalar"}) {
        const CheckEntry* e = find_entry(doc, id);
        REQUIRE(e != nullptr);
    }

    // the identities suite carries the dimension-3 decomposition as well
    ReportDocument ids = run_suite(hyp, Suite::Identities);
    CHECK(ids.passed());
    CHECK(find_entry(ids, "curvature.b8") != nullptr);

    // ... which the full suite lists exactly once
    int b8_count = 0;
    for (const CheckEntry& e : doc.entries) b8_count += e.id == "curvature.b8";
    CHECK(b8_count == 1);
}

TEST_CASE("suites without structure data skip acm checks") {
    Manifest bare = parse_manifest(R"({"brackets": []})");
    ReportDocument doc = run_suite(bare, Suite::All);
    CHECK(doc.passed());
    const CheckEntry* skipped = find_entry(doc, "acm.structure");
    REQUIRE(skipped != nullptr);
    CHECK(skipped->status == CheckStatus::Skipped);
    CHECK(find_entry(doc, "identity.b1") == nullptr);
    CHECK(find_entry(doc, "curvature.scalar") != nullptr);
}

TEST_CASE("json reports are byte stable") {
    Manifest su = parse_manifest(slurp(fixture_path("su2.json")));
    SuiteOptions opts;
    opts.source = "su2.json";
    ReportDocument doc = run_suite(su, Suite::All, opts);
    std::string once = report_to_json(doc);
    std::string twice = report_to_json(run_suite(su, Suite::All, opts));
    CHECK(once == twice);
    CHECK(once.find("\"tool\": \"riemsol\"") != std::string::npos);
    CHECK(once.find("\"source\": \"su2.json\"") != std::string::npos);
    CHECK(once.back() == '\n');

    std::string text = report_to_text(doc);
    CHECK(text.find("overall: PASS") != std::string::npos);
}

TEST_CASE("vector formatting") {
    CHECK(format_vector(vec(0, 0, 0)) == "0");
    CHECK(format_vector(vec(1, 0, 0)) == "e1");
    CHECK(format_vector(vec(-1, 0, 0)) == "-e1");
    CHECK(format_vector(vec(rat(-1), rat(0), rat(1, 2))) == "-e1 + 1/2 e3");
    CHECK(format_vector(vec(0, -2, 0)) == "-2 e2");
}

TEST_CASE("command line entry points") {
    std::string hyp = fixture_path("hyp3.json");
    CHECK(run_cli("validate " + hyp) == 0);
    CHECK(run_cli("report " + hyp + " --quiet") == 0);
    CHECK(run_cli("report " + hyp + " --format json") == 0);
    CHECK(run_cli("soliton " + hyp + " --name zero") == 0);
    CHECK(run_cli("soliton " + hyp + " --name missing") == 2);
    CHECK(run_cli("validate /nonexistent.json") == 2);
    CHECK(run_cli("bogus-subcommand " + hyp) != 0);

    // a well-formed manifest whose checks fail exits 1
    std::string bad = (std::filesystem::temp_directory_path() / "riemsol_bad.json").string();
    {
        std::ofstream out(bad);
        out << R"({"brackets": [{"i": 1, "j": 3, "coeffs": ["-1", "0", "0"]},
                                {"i": 2, "j": 3, "coeffs": ["0", "-1", "0"]}],
                   "solitons": [{"name": "off", "potential": ["0","0","0"],
                                 "lambda": "2"}]})";
    }
    CHECK(run_cli("soliton " + bad) == 1);
    CHECK(run_cli("validate " + bad) == 0);
    std::filesystem::remove(bad);
}
