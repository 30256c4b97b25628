#include "hyperforman/pipeline.hpp"

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"

using cli_test::corpus;
using cli_test::run;

namespace {

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("validate")
{
    const auto ok = run("validate " + corpus("example.json"));
    CHECK(ok.status == 0);
    CHECK(ok.out == "3 nodes, 2 hypervertices, 1 hyperedge\n");
    CHECK(run("validate " + corpus("example.hnet")).out == ok.out);

    const auto loop = run("validate " + corpus("hyperloop.json"));
    CHECK(loop.status == 2);
    CHECK(contains(loop.out, "loop1"));

    const auto unknown = run("validate " + corpus("unknown_hypervertex.json"));
    CHECK(unknown.status == 2);
    CHECK(contains(unknown.out, "unknown hypervertex"));

    CHECK(run("validate " + corpus("missing.json")).status == 3);
    CHECK(run("validate " + corpus("cycle.hnet") + " --format json").status == 2);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run("").status == 2);
    CHECK(run("chi --bogus " + corpus("example.json")).status == 2);
    CHECK(run("chi --directed " + corpus("example.json")).status == 2);
    CHECK(run("chi --degree in " + corpus("directed_chain.hnet")).status == 2);
}

TEST_CASE("chi")
{
    const auto r = run("chi " + corpus("example.json"));
    CHECK(r.status == 0);
    CHECK(contains(r.out, "chi[delta] = 1"));
    CHECK(contains(r.out, "chi[rank] = 2"));
    CHECK(contains(r.out, "chi[geometric] = 1"));

    const auto b = run("chi --no-singletons --output json " + corpus("boolean.hnet"));
    REQUIRE(b.status == 0);
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j["chi"]["delta"]["value"] == 1);
    CHECK(j["chi"]["rank"]["value"] == 0);

    const auto e = nlohmann::json::parse(run("chi --output json " + corpus("empty.json")).out);
    CHECK(e["chi"]["delta"]["value"] == 0);
    CHECK(e["chi"]["rank"]["value"] == 0);
    CHECK(e["chi"]["geometric"]["value"] == 0);

    const auto rank_only = run("chi --chi-method rank --no-singletons " + corpus("rank_conflict.hnet"));
    CHECK(rank_only.status == 0);
    CHECK(contains(rank_only.out, "not ranked"));
}

TEST_CASE("chain cap exits 4 and names the cap")
{
    const auto flag = run("chi --chain-cap 3 " + corpus("example.json"));
    CHECK(flag.status == 4);
    CHECK(contains(flag.out, "3"));
    const auto env = run("chi " + corpus("example.json"), "HYPERFORMAN_CHAIN_CAP=5");
    CHECK(env.status == 4);
    CHECK(contains(env.out, "cap = 5"));
    CHECK(run("chi --chain-cap 100 " + corpus("example.json"), "HYPERFORMAN_CHAIN_CAP=5").status == 0);
}

TEST_CASE("curvature")
{
    const auto r = run("curvature --output csv " + corpus("example.json"));
    REQUIRE(r.status == 0);
    std::size_t rows = 0, agree = 0;
    for (std::size_t pos = r.out.find('\n'); pos != std::string::npos && pos + 1 < r.out.size();
         pos = r.out.find('\n', pos + 1)) {
        ++rows;
        const auto end = r.out.find('\n', pos + 1);
        agree += r.out.substr(pos + 1, end - pos - 1).ends_with(",true");
    }
    CHECK(rows == 9);
    CHECK(agree == 9);

    const auto star = nlohmann::json::parse(run("curvature --output json " + corpus("star.hnet")).out);
    REQUIRE(star["curvature"]["edges"].size() == 3);
    for (const auto& e : star["curvature"]["edges"])
        CHECK(e["ricci"] == 0);

    const auto d = nlohmann::json::parse(run("curvature --directed --output json " + corpus("directed_chain.hnet")).out);
    CHECK(d["directed"]["chi_directed_formula"] == "31/2");
    CHECK(d["directed"]["chi_directed_count"] == 1);

    const auto cyc = run("curvature --directed --triangles cyclic --output csv " + corpus("directed_cycle.hnet"));
    CHECK(cyc.status == 0);
    CHECK(contains(cyc.out, "chi_directed_count,1"));
}

TEST_CASE("gauss-bonnet")
{
    const auto tet = run("gauss-bonnet --no-singletons " + corpus("tetrahedron.hnet"));
    CHECK(tet.status == 0);
    CHECK(contains(tet.out, "-14 - 24 + 40 = 2 = chi"));
    const auto edge = run("gauss-bonnet --no-singletons " + corpus("single_edge.hnet"));
    CHECK(edge.status == 0);
    CHECK(contains(edge.out, "3 - 2 + 0 = 1 = chi"));

    for (const char* f : {"example.json", "example.hnet", "path.hnet", "cycle.hnet", "star.hnet",
                          "two_components.hnet", "torus.hnet", "shared_edge.hnet", "empty.json"}) {
        const auto r = run("gauss-bonnet " + corpus(f));
        INFO(f, ": ", r.out);
        CHECK(r.status == 0);
        CHECK(contains(r.out, "residual 0"));
    }
}

TEST_CASE("filtrate")
{
    CHECK(run("filtrate --no-singletons --output csv " + corpus("tetrahedron.hnet")).out ==
          "threshold,f0,f1,f2,chi\n4,4,6,4,2\n");
    CHECK(run("filtrate --output csv " + corpus("star.hnet")).out == "threshold,f0,f1,f2,chi\n0,4,3,0,1\n");
    const auto two = run("filtrate --output csv " + corpus("two_components.hnet"));
    CHECK(two.status == 0);
    CHECK(two.out.ends_with(",2\n"));
}

TEST_CASE("report is deterministic and complete")
{
    const std::string args = "report --output json " + corpus("torus.hnet") + " " + corpus("example.json");
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["chi"]["delta"]["value"] == 0);
    CHECK(j[1]["gauss_bonnet"]["residual"] == 0);

    const auto mixed = run("validate " + corpus("example.json") + " " + corpus("hyperloop.json"));
    CHECK(mixed.status == 2);
}

TEST_CASE("in-process pipeline matches the binary")
{
    using namespace hyperforman::cli;
    RunConfig cfg;
    cfg.output = OutputFormat::human;
    const auto r = run_on_text(Command::validate, cfg, "V1: a b\nV2: b c\nE: V1 V2\n", "inline", FormatChoice::text);
    CHECK(r.exit_code == kOk);
    CHECK(r.out == "3 nodes, 2 hypervertices, 1 hyperedge\n");
}
