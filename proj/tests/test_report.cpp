#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdlib.h>
#include <sys/wait.h>

#include "milnor/presets.hpp"
#include "milnor/report.hpp"

using namespace milnor;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    RunResult r;
    std::string cmd = std::string(MILNOR_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const std::string& name)
{
    return std::string(TEST_DATA_DIR) + "/" + name;
}

bool has_note(const Report& r, const std::string& prefix)
{
    for (const auto& n : r.notes)
        if (n.rfind(prefix, 0) == 0)
            return true;
    return false;
}

}  // namespace

TEST_CASE("triangle report")
{
    Report r = analyze(triangle());
    CHECK(r.h1 == AbelianGroup{2, {}});
    CHECK(r.all_passed());
    CHECK(r.census == std::map<int, int>{{2, 3}});
    CHECK(r.presentation.generators == 2);
    CHECK(r.presentation.relators == 1);
    CHECK(r.presentation.total_length == 4);
    CHECK(r.betti_mod.at(3) == 2);
    CHECK(has_note(r, "erratum: for the coordinate triangle"));
    REQUIRE(r.verdict("exact_prediction") != nullptr);
    CHECK(r.verdict("pipeline_equivalence")->passed);
}

TEST_CASE("near-pencil report")
{
    Report r = analyze(near_pencil(6));
    CHECK(r.h1 == AbelianGroup{5, {}});
    CHECK(r.all_passed());
    CHECK(r.verdict("exact_prediction")->passed);
    CHECK(r.bounds.applicable.front().criterion == "corollary");
}

TEST_CASE("affine input is coned")
{
    Report r = analyze(parse_arrangement("affine\n1 0 0\n0 1 0\n"));
    CHECK(r.mode == "affine");
    CHECK(r.cover_degree == 3);
    CHECK(r.h1 == AbelianGroup{2, {}});
}

TEST_CASE("report options")
{
    AnalyzeOptions o;
    o.infinity = 0;
    o.primes = {13};
    Report r = analyze(braid_a3(), o);
    CHECK(r.infinity == 0);
    CHECK(r.h1 == AbelianGroup{7, {}});
    CHECK(r.betti_mod.count(13) == 1);

    o.primes = {4};
    CHECK_THROWS_AS(analyze(braid_a3(), o), std::invalid_argument);
    o.primes.clear();
    o.infinity = 9;
    CHECK_THROWS_AS(analyze(braid_a3(), o), std::out_of_range);

    AnalyzeOptions m;
    m.modulus = 2;
    Report r2 = analyze(braid_a3(), m);
    CHECK(r2.cover_degree == 2);
    CHECK(r2.verdict("upper_bound") == nullptr);
    CHECK(has_note(r2, "cover degree 2"));
}

TEST_CASE("probe primes")
{
    CHECK(probe_primes(intersection_points(braid_a3()), {}) == std::vector<long>{2, 3, 5, 7, 11});
    CHECK(probe_primes(intersection_points(pencil(13)), {17}) == std::vector<long>{2, 3, 5, 7, 11, 13, 17});
}

TEST_CASE("JSON round trip and determinism")
{
    for (const auto& name : {"triangle", "pencil:4", "braid-a3", "parallel-family", "random:7:5"}) {
        Report r = analyze(preset(name));
        nlohmann::json j = to_json(r);
        CHECK(report_from_json(j) == r);
        CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
        CHECK(to_json(analyze(preset(name))).dump() == j.dump());
        CHECK(format_report(analyze(preset(name))) == format_report(r));
        for (const char* key : {"input", "incidence", "presentation", "h1", "betti", "bounds", "prediction",
                                "verdicts", "notes"})
            CHECK(j.contains(key));
        CHECK(j["h1"]["torsion"].is_array());
    }
}

TEST_CASE("large invariants survive JSON")
{
    Report r = analyze(triangle());
    r.h1.torsion = {BigInt("123456789012345678901234567890")};
    CHECK(report_from_json(to_json(r)) == r);
}

TEST_CASE("command line")
{
    SECTION("analyze")
    {
        RunResult r = run("analyze " + data("triangle.txt"));
        CHECK(r.status == 0);
        CHECK(r.out.find("H1(F;Z) = Z^2") != std::string::npos);
        RunResult j = run("analyze --json " + data("braid_a3.txt"));
        CHECK(j.status == 0);
        auto parsed = nlohmann::json::parse(j.out);
        CHECK(parsed["h1"]["rank"] == 7);
        CHECK(run("analyze --json " + data("braid_a3.txt")).out == j.out);
    }
    SECTION("input errors exit with status 2")
    {
        CHECK(run("analyze " + data("duplicate.txt")).status == 2);
        CHECK(run("analyze " + data("missing.txt")).status == 2);
        CHECK(run("analyze --infinity 7 " + data("triangle.txt")).status == 2);
        CHECK(run("preset hexagon").status == 2);
        CHECK(run("frobnicate").status == 2);
    }
    SECTION("presentation")
    {
        RunResult r = run("presentation " + data("triangle.txt"));
        CHECK(r.status == 0);
        CHECK(r.out == "gens: 2\ng1 g2 g1^-1 g2^-1\n");
        RunResult g = run("presentation " + data("generic3_affine.txt"));
        CHECK(g.out == "gens: 3\ng2 g1 g2^-1 g1^-1\ng2 g3 g2^-1 g3^-1\ng1 g3 g1^-1 g3^-1\n");
        CHECK(run("presentation --projective " + data("triangle.txt")).status == 0);
    }
    SECTION("bounds and presets")
    {
        RunResult b = run("bounds " + data("cdo12.txt"));
        CHECK(b.status == 0);
        CHECK(b.out.find("cdo total: 11") != std::string::npos);
        RunResult p = run("preset pencil:5");
        CHECK(p.out == "projective\n1 0 0\n1 -1 0\n2 -1 0\n3 -1 0\n4 -1 0\n");
        CHECK(run("preset triangle").out == "projective\n1 0 0\n0 1 0\n0 0 1\n");
        CHECK(run("preset generic:5 --seed 3").out == run("preset generic:5:3").out);
    }
    SECTION("cover matrices feed the quotient command")
    {
        char tmpl[] = "/tmp/milnorXXXXXX";
        REQUIRE(mkdtemp(tmpl) != nullptr);
        std::string prefix = std::string(tmpl) + "/braid";
        CHECK(run("cover --out " + prefix + " " + data("braid_a3.txt")).status == 0);
        RunResult q = run("quotient " + prefix + ".d1 " + prefix + ".d2");
        CHECK(q.status == 0);
        CHECK(q.out == "Z^7\n");
    }
}
