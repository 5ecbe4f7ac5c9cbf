#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = modcf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0)
{
    args.insert(args.begin(), "--json");
    const auto r = run(args);
    REQUIRE(r.code == expected_code);
    auto doc = json::parse(r.out);
    // Canonical output survives a parse / re-serialize round trip byte for byte.
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK(doc["schema"] == "modcf/1");
    CHECK(doc.contains("tool_version"));
    return doc;
}

} // namespace

TEST_CASE("fn")
{
    const auto doc = run_json({"fn", "--f", "tau", "--range", "1", "5"});
    std::vector<std::string> values;
    for (const auto& row : doc["result"]["values"]) {
        values.push_back(row["value"]);
    }
    CHECK(values == std::vector<std::string>{"1", "-24", "252", "-1472", "4830"});

    CHECK(run({"fn", "--f", "nathanson_g", "--n", "4"}).out == "4  11\n");
    CHECK(run({"fn", "--f", "jordan", "--k", "3", "--n", "2"}).out == "2  7\n");
    CHECK(run({"fn", "--f", "phi", "--range", "1", "3", "--csv"}).out == "n,value\n1,1\n2,1\n3,2\n");
    CHECK(run({"fn", "--f", "nathanson_phi", "--range", "2", "4", "--m", "5"}).out == "2  2\n3  1\n4  2\n");

    CHECK(run({"fn", "--f", "jordan", "--k", "2", "--n", "2"}).code == 3);
    CHECK(run({"fn", "--f", "jordan", "--n", "2"}).code == 2);
    CHECK(run({"fn", "--f", "zeta", "--n", "2"}).code == 2);
    CHECK(run({"fn", "--f", "phi"}).code == 2);
    CHECK(run({"fn", "--f", "phi", "--range", "1", "100", "--max-span", "10"}).code == 4);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scan")
{
    auto doc = run_json({"scan", "--stream", "phi%3", "--len", "1000", "--nmax", "50", "--lmax", "100"});
    CHECK(doc["result"]["outcome"] == "no_period_up_to");
    CHECK(doc["result"]["prefix_len"] == 1000);

    doc = run_json({"scan", "--values", "3,3,3,3,3,3", "--nmax", "2", "--lmax", "2"}, 1);
    CHECK(doc["result"]["outcome"] == "periodic");
    CHECK(doc["result"]["N"] == 1);
    CHECK(doc["result"]["L"] == 1);

    CHECK(run({"scan", "--stream", "phi%3", "--len", "100", "--nmax", "50", "--lmax", "100"}).code == 2);
    CHECK(run({"scan", "--stream", "phi%6*2", "--len", "1000"}).code == 3);
    CHECK(run({"scan"}).code == 2);
    CHECK(run({"scan", "--values", "1,x"}).code == 2);
}

TEST_CASE("witness")
{
    auto doc = run_json({"witness", "--f", "phi", "--m", "3", "--L", "1", "--N", "1"});
    CHECK(doc["result"]["n1"] == "2");
    CHECK(doc["result"]["n2"] == "14");
    CHECK(doc["result"]["verified"] == true);

    doc = run_json({"witness", "--f", "nathanson_phi", "--m", "5", "--L", "1", "--N", "1"});
    CHECK(doc["result"]["K"] == 4);
    CHECK(doc["result"]["verified"] == true);

    doc = run_json({"witness", "--f", "sigma", "--m", "7", "--criterion", "multiplicative"});
    CHECK(doc["result"]["q"] == "29");

    CHECK(run({"witness", "--f", "tau", "--m", "11"}).code == 3);
    CHECK(run({"witness", "--f", "phi", "--m", "3", "--criterion", "nope"}).code == 2);
    CHECK(run({"witness", "--f", "phi", "--m", "3", "--prime-budget", "0"}).code == 4);

    doc = run_json({"witness", "--f", "phi", "--m", "3", "--prime-budget", "0"}, 4);
    CHECK(doc["error"]["kind"] == "resource");
}

TEST_CASE("budgets from the environment, overridden by flags")
{
    ::setenv("MODCF_PRIME_BUDGET", "0", 1);
    CHECK(run({"witness", "--f", "phi", "--m", "3"}).code == 4);
    CHECK(run({"witness", "--f", "phi", "--m", "3", "--prime-budget", "5"}).code == 0);
    ::setenv("MODCF_PRIME_BUDGET", "junk", 1);
    CHECK(run({"witness", "--f", "phi", "--m", "3"}).code == 2);
    ::unsetenv("MODCF_PRIME_BUDGET");

    ::setenv("MODCF_PRECISION_CEILING", "1", 1);
    CHECK(run({"alpha", "--stream", "tau%5", "--count", "50", "--digits", "5"}).code == 4);
    CHECK(run({"alpha", "--stream", "tau%5", "--count", "50", "--digits", "5", "--precision-ceiling", "100"}).code == 0);
    ::unsetenv("MODCF_PRECISION_CEILING");
}

TEST_CASE("alpha")
{
    const auto a = run_json({"alpha", "--stream", "tau%5", "--k", "2", "--count", "200", "--digits", "30"});
    const auto b = run_json({"alpha", "--stream", "tau%5", "--k", "2", "--count", "400", "--digits", "30"});
    CHECK(a["result"]["decimal"] == b["result"]["decimal"]);
    CHECK(a["result"]["decimal"].get<std::string>().size() == 32);
    CHECK(a["result"]["certificate"]["bound_exponent"].get<int>() >= 32);

    const auto h = run_json({"alpha", "--stream", "half_phi%7>dec", "--k", "3", "--count", "200", "--digits", "30"});
    CHECK(h["result"]["stream"] == "half_phi%7>dec");

    CHECK(run({"alpha", "--stream", "tau%5", "--k", "1"}).code == 2);
    CHECK(run({"alpha", "--stream", "tau%6", "--k", "2"}).code == 3);
    const auto few = run({"alpha", "--stream", "tau%5", "--count", "10", "--digits", "30"});
    CHECK(few.code == 2);
    CHECK(few.err.find("extend quotients") != std::string::npos);
}

TEST_CASE("congruence")
{
    auto doc = run_json({"congruence", "--N", "2"});
    CHECK(doc["result"]["ok"] == true);
    const auto& last = doc["result"]["lines"][4]["last"];
    CHECK(doc["result"]["lines"][4]["modulus"] == 691);
    CHECK(last["tau"] == 667);
    CHECK(last["formula"] == 667);

    doc = run_json({"congruence", "--N", "1"});
    CHECK(doc["result"]["ok"] == true);
    CHECK(run({"congruence", "--N", "0"}).code == 2);
}
