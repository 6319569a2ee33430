#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "evaluate.hpp"

using nlohmann::json;

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = degen::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        if (!l.empty() && l.back() == '\r') {
            l.pop_back();
        }
        out.push_back(l);
    }
    return out;
}

} // namespace

TEST_CASE("eval prints exact rationals")
{
    CHECK(run({"eval", "riemann-deg", "--lambda", "1/2", "--s", "2"}).out == "47/36\n");
    CHECK(run({"eval", "bell", "--n", "0", "--lambda", "1/2", "--x", "1"}).out == "1\n");
    CHECK(run({"eval", "polyexp", "--lambda", "1", "--x", "2", "--delta", "1", "--s", "1"}).out == "2\n");
    CHECK(run({"eval", "riemann-deg", "--lambda", "1", "--s", "3"}).out == "9/8\n");
    CHECK(run({"eval", "ein", "--lambda", "1", "--x", "7/3"}).out == "7/3\n");
    CHECK(run({"eval", "stirling2", "--n", "5", "--k", "2"}).out == "15\n");
    // decimals are read as exact rationals
    CHECK(run({"eval", "degexp", "--lambda", "0.5", "--x", "1"}).out == "9/4\n");
    // negative values after a flag
    CHECK(run({"eval", "degexp", "--lambda", "-1/3", "--x", "1"}).out == "27/8\n");
}

TEST_CASE("eval prints symbolic results when a variable is left free")
{
    CHECK(run({"eval", "bernoulli-deg", "--n", "1"}).out == "1/2*lambda - 1/2\n");
    CHECK(run({"eval", "stirling2-deg", "--n", "2", "--k", "1"}).out == "-lambda + 1\n");
}

TEST_CASE("eval prints value and bound for numeric results")
{
    const Run r = run({"eval", "gamma-deg", "--lambda", "1/2", "--s", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find(" +/- ") != std::string::npos);
    CHECK(std::stod(r.out) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("eval exit codes")
{
    CHECK(run({"eval", "nosuch", "--x", "1"}).code == 1);
    const Run dom = run({"eval", "degexp", "--lambda", "-1", "--x", "1"});
    CHECK(dom.code == 2);
    CHECK(dom.out.empty());
    CHECK(dom.err.find("domain error") != std::string::npos);
    CHECK(run({"eval", "lerch-deg", "--lambda", "3/10", "--x", "1", "--s", "2", "--delta", "1"}).code == 2);
    CHECK(run({"eval", "bell", "--n", "2"}).code == 1);
    CHECK(run({"eval", "bell", "--n", "x", "--lambda", "1"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("table of Bel_{n,1}(1)")
{
    const Run r = run({"table", "bell", "--n", "0..4", "--lambda", "1", "--x", "1"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 6);
    CHECK(l[0] == "n,lambda,x,value,error_bound,status,note");
    CHECK(l[1] == "0,1,1,1,0,exact,");
    for (int i = 2; i <= 5; ++i) {
        CHECK(l[i].find(",1/2,0,exact,") != std::string::npos);
    }
}

TEST_CASE("table of degenerate Bernoulli polynomials in json")
{
    const Run r = run({"table", "bernoulli-deg", "--n", "0..2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["value"] == "1");
    CHECK(doc["rows"][1]["value"] == "1/2*lambda - 1/2");
    CHECK(doc["rows"][2]["value"] == "-1/6*lambda^2 + 1/6");
}

TEST_CASE("table marks out-of-domain cells and honours precision")
{
    const Run r = run({"table", "degexp", "--lambda", "-1,0", "--x", "1", "--precision", "6"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(l[1].rfind("-1,1,,,domain-error,", 0) == 0);
    CHECK(l[2] == "0,1,2.71828,0,converged,");
}

TEST_CASE("table grid syntax")
{
    const Run r = run({"table", "stirling2", "--n", "4", "--k", "1..2,4"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 4);
    const Run p = run({"table", "degexp", "--lambda", "1", "--x", "0:1:1/2"});
    REQUIRE(p.code == 0);
    const auto l = lines(p.out);
    REQUIRE(l.size() == 4);
    CHECK(l[2] == "1,1/2,3/2,0,exact,");
}

TEST_CASE("table rejects an empty grid and unknown functions")
{
    CHECK(run({"table", "bell", "--n", "3..1", "--lambda", "1", "--x", "1"}).code == 1);
    CHECK(run({"table", "bell", "--n", ",", "--lambda", "1"}).code == 1);
    CHECK(run({"table", "bell", "--lambda", "1"}).code == 1);
    CHECK(run({"table", "nosuch", "--n", "1"}).code == 1);
}

TEST_CASE("csv fields with commas are quoted")
{
    using degen::cli::csv_field;
    CHECK(csv_field("1/2") == "1/2");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("verify report schema")
{
    const Run r = run({"verify", "--only", "thm13", "--seed", "7"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["identityId"] == "thm13");
    CHECK(doc[0]["mode"] == "exact");
    CHECK(doc[0]["maxResidual"] == "0");
    CHECK(doc[0]["passed"] == true);
}

TEST_CASE("verify runs every identity and keeps the key set")
{
    const Run r = run({"verify"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.size() == 29);
    for (const auto& rep : doc) {
        for (const char* key : {"identityId", "mode", "samplePoints", "maxResidual", "passed"}) {
            CHECK(rep.contains(key));
        }
    }
}

TEST_CASE("verify with the excluded lambda reports domain markers")
{
    const Run r = run({"verify", "--only", "eq15", "--lambda", "-1"});
    CHECK(r.code == 1);
    const json doc = json::parse(r.out);
    for (const auto& p : doc[0]["samplePoints"]) {
        CHECK(p.contains("domainError"));
        CHECK(p["residual"].is_null());
    }
}

TEST_CASE("verify is byte-identical across runs and honours --out")
{
    const Run a = run({"verify", "--seed", "7"});
    const Run b = run({"verify", "--seed", "7"});
    CHECK(a.out == b.out);

    const auto path = std::filesystem::temp_directory_path() / "degen_verify_test.json";
    const Run c = run({"verify", "--seed", "7", "--out", path.string()});
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    std::ifstream f(path, std::ios::binary);
    const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(written == a.out);
    std::filesystem::remove(path);
}

TEST_CASE("verify failures and bad ids")
{
    CHECK(run({"verify", "--only", "thm99"}).code == 1);
    CHECK(run({"verify", "--only", "thm8", "--perturb", "1e-3"}).code == 1);
    CHECK(run({"verify", "--lambda", "abc"}).code == 1);
}
