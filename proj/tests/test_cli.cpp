#include <doctest.h>

#include <strata/cli.hpp>
#include <strata/serialize.hpp>
#include <strata/verify.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace strata;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_json(const std::string& name, const std::string& body) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << body;
    return p;
}

} // namespace

TEST_CASE("ideal json output at n = 2") {
    CliRun r = cli({"ideal", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    OrderedJson j = OrderedJson::parse(r.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("n") == 2);
    CHECK(j.at("space_dimension") == 5);
    CHECK(j.at("count") == 22);
    REQUIRE(j.at("elements").size() == 22);
    CHECK(j.at("elements")[0].at("perm") == "1234");
    CHECK(j.at("elements")[21].at("perm") == "4312");
    std::vector<int> hist(6, 0);
    for (const auto& e : j.at("elements"))
        ++hist[e.at("dimension").get<int>()];
    CHECK(hist == std::vector<int>{2, 5, 6, 5, 3, 1});
    CHECK(!j.at("covers").empty());
}

TEST_CASE("ideal output is byte identical across runs") {
    for (const char* format : {"json", "dot", "text"}) {
        CliRun a = cli({"ideal", "--n", "2", "--format", format});
        CliRun b = cli({"ideal", "--n", "2", "--format", format});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("ideal text and dot formats") {
    CliRun t = cli({"ideal", "--n", "1"});
    CHECK(t.code == 0);
    CHECK(has(t.out, "2 strata"));
    CHECK(has(t.out, "21"));

    CliRun d = cli({"ideal", "--n", "2", "--format", "dot"});
    CHECK(d.code == 0);
    CHECK(has(d.out, "rankdir=BT"));
    CHECK(has(d.out, "rank=same"));
    CHECK(has(d.out, "\"3412\""));
    CHECK(has(d.out, "->"));
}

TEST_CASE("ideal guard at n = 5") {
    CliRun r = cli({"ideal", "--n", "5"});
    CHECK(r.code == 1);
    CHECK(has(r.err, "very large"));
    CHECK(r.out.empty());
}

TEST_CASE("stratum report for 1432") {
    CliRun r = cli({"stratum", "--n", "2", "--perm", "1432", "--format", "json"});
    REQUIRE(r.code == 0);
    OrderedJson j = OrderedJson::parse(r.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("perm") == "1432");
    CHECK(j.at("length") == 3);
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("g_invariant") == true);
    REQUIRE(j.at("rho").size() == 1);
    CHECK(j.at("rho")[0] == OrderedJson::array({1, 1}));
    REQUIRE(j.at("essential").size() == 2);
    CHECK(j.at("essential")[0].at("i") == 2);
    CHECK(j.at("essential")[0].at("j") == 3);
    CHECK(j.at("essential")[1].at("i") == 3);
    CHECK(j.at("essential")[1].at("j") == 2);
    CHECK(!j.at("max_bigrassmannians").empty());

    CliRun t = cli({"stratum", "--perm", "1432"});
    CHECK(t.code == 0);
    CHECK(has(t.out, "dimension 2"));
    CHECK(has(t.out, "G-invariant"));
    CHECK(has(t.out, "(1,1)"));
}

TEST_CASE("stratum rejections") {
    CliRun top = cli({"stratum", "--perm", "4321"});
    CHECK(top.code == 1);
    CHECK(has(top.err, "not in the stratification ideal"));

    CliRun odd = cli({"stratum", "--perm", "321"});
    CHECK(odd.code == 1);
    CHECK(has(odd.err, "S_2n"));

    CliRun mismatch = cli({"stratum", "--perm", "1234", "--n", "3"});
    CHECK(mismatch.code == 1);
    CHECK(has(mismatch.err, "disagrees"));

    CliRun junk = cli({"stratum", "--perm", "1x32"});
    CHECK(junk.code == 1);
}

TEST_CASE("eval at hand checked points") {
    auto zero = temp_json("strata_eval_zero.json",
                          R"({"n":2,"g":[[1,0],[0,1]],"X":[[0,0],[0,0]]})");
    CliRun r1 = cli({"eval", "--point", zero.string()});
    REQUIRE(r1.code == 0);
    CHECK(has(r1.out, "v = 3421"));
    CHECK(has(r1.out, "dimension 0"));
    CHECK(has(r1.out, "s1 s2 s3"));

    auto e12 = temp_json("strata_eval_e12.json",
                         R"({"n":2,"g":[[1,0],[0,1]],"X":[[0,1],[0,0]]})");
    CliRun r2 = cli({"eval", "--point", e12.string(), "--format", "json"});
    REQUIRE(r2.code == 0);
    OrderedJson j = OrderedJson::parse(r2.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("v") == "2431");
    CHECK(j.at("divisors") == OrderedJson::array({1, 2, 3}));
    CHECK(j.at("stratum").at("dimension") == 1);

    auto generic = temp_json("strata_eval_generic.json",
                             R"({"n":2,"g":[[1,0],[2,1]],"X":[["3/4",3],[5,7]]})");
    CliRun r3 = cli({"eval", "--point", generic.string()});
    REQUIRE(r3.code == 0);
    CHECK(has(r3.out, "v = 1234"));
    CHECK(has(r3.out, "divisors: none"));
}

TEST_CASE("eval rejects bad input") {
    auto bad = temp_json("strata_eval_bad.json", "{ not json");
    CliRun r = cli({"eval", "--point", bad.string()});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
    CHECK(r.out.empty());

    auto singular = temp_json("strata_eval_singular.json",
                              R"({"n":2,"g":[[1,1],[1,1]],"X":[[0,0],[0,0]]})");
    CliRun s = cli({"eval", "--point", singular.string()});
    CHECK(s.code == 1);
    CHECK(has(s.err, "singular"));

    CliRun missing = cli({"eval", "--point", "/nonexistent/nothing.json"});
    CHECK(missing.code != 0);
}

TEST_CASE("verify subcommand") {
    CliRun r = cli({"verify", "--suite", "fixture-n2"});
    REQUIRE(r.code == 0);
    OrderedJson j = OrderedJson::parse(r.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("passed") == true);
    REQUIRE(j.at("suites").size() == 1);
    CHECK(j.at("suites")[0].at("name") == "fixture-n2");
    CHECK(j.at("suites")[0].at("checks").get<long>() > 0);
    CHECK(j.at("suites")[0].at("failures").empty());

    CliRun t = cli({"verify", "--suite", "erratum", "--n", "2", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(has(t.out, "PASS erratum"));
    CHECK(has(t.out, "note:"));

    CliRun q = cli({"verify", "--suite", "quadrants", "--n", "2", "--seed", "5",
                    "--trials", "20", "--format", "text"});
    CHECK(q.code == 0);
    CHECK(has(q.out, "PASS quadrants"));
    CHECK(has(q.out, "all suites passed"));

    CliRun unknown = cli({"verify", "--suite", "nope"});
    CHECK(unknown.code != 0);

    CliRun large = cli({"verify", "--n", "5"});
    CHECK(large.code == 1);
    CHECK(has(large.err, "--allow-large"));
}

TEST_CASE("charts subcommand") {
    CliRun r = cli({"charts", "--check", "--n", "2", "--trials", "5"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "all charts pass"));
    CHECK(has(r.out, "21"));
    CHECK(has(r.out, "round-trip"));

    CliRun noCheck = cli({"charts"});
    CHECK(noCheck.code == 1);
    CHECK(has(noCheck.err, "--check"));
}

TEST_CASE("--out writes the payload to a file") {
    auto p = std::filesystem::temp_directory_path() / "strata_ideal_n1.json";
    std::filesystem::remove(p);
    CliRun r = cli({"ideal", "--n", "1", "--format", "json", "--out", p.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(p);
    OrderedJson j = OrderedJson::parse(f);
    CHECK(j.at("count") == 2);
}

TEST_CASE("help and missing subcommand") {
    CliRun help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(has(help.out, "ideal"));
    CHECK(has(help.out, "verify"));

    CliRun none = cli({});
    CHECK(none.code != 0);
}

TEST_CASE("run_verify_suite direct") {
    SuiteResult r = run_verify_suite("welldef", 2, 1, 10);
    CHECK(r.passed);
    CHECK(r.checks == 10);
    SuiteResult m = run_verify_suite("minors", 2, 3, 5);
    CHECK(m.passed);
    CHECK_THROWS_AS(run_verify_suite("nope", 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_verify_suite("welldef", 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_verify_suite("welldef", 2, 0, 0), std::invalid_argument);
    CHECK(verify_suite_names().size() == 9);
}

TEST_CASE("serialization round trips") {
    FlagPoint p{2, mat({{1, 0}, {2, 1}}), mat({{2, 3}, {5, 7}})};
    p.x.at(0, 0) = rat_from_string("3/4");
    OrderedJson j = point_json(p);
    CHECK(j.at("X")[0][0] == "3/4");
    FlagPoint q = point_from_json(j);
    CHECK(q.n == p.n);
    CHECK(q.g == p.g);
    CHECK(q.x == p.x);

    QMatrix m = matrix_from_json(OrderedJson::parse(R"([[1,2],[3,"7/2"]])"));
    CHECK(m.at(1, 1) == rat_from_string("7/2"));
    CHECK_THROWS_AS(matrix_from_json(OrderedJson::parse(R"([[1],[2,3]])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(point_from_json(OrderedJson::parse(R"({"n":2,"g":[[1,0],[0,1]]})")),
                    std::invalid_argument);
}
