#include "ktdom/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = ktdom::cli::run(args, {in, out, err, false});
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text)
{
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            out.push_back(nlohmann::json::parse(line));
    return out;
}

std::size_t line_count(const std::string& text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

} // namespace

TEST_CASE("gen")
{
    auto hw = run({"gen", "--atlas", "heawood"});
    CHECK(hw.code == 0);
    CHECK(line_count(hw.out) == 1);
    auto rec = json_lines(run({"bounds", "--format", "json"}, hw.out).out).front();
    CHECK(rec["n"] == 14);
    CHECK(rec["r"] == 3);

    auto a = run({"gen", "--n", "20", "--r", "3", "--count", "5", "--seed", "7"});
    auto b = run({"gen", "--n", "20", "--r", "3", "--count", "5", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(line_count(a.out) == 5);
    CHECK(a.out == b.out);

    auto odd = run({"gen", "--n", "5", "--r", "3"});
    CHECK(odd.code != 0);
    CHECK(odd.err.find("even") != std::string::npos);

    CHECK(run({"gen", "--atlas", "pg2", "3"}).code == 0);
    CHECK(run({"gen", "--atlas", "moore", "57"}).code == 2);
}

TEST_CASE("gen writes files and a metadata sidecar")
{
    auto dir = std::filesystem::temp_directory_path() / "ktdom_cli_test";
    std::filesystem::create_directories(dir);
    auto out = (dir / "corpus.g6").string();
    auto meta = (dir / "corpus.meta").string();
    auto res = run({"gen", "--n", "12", "--r", "4", "--count", "3", "--out", out, "--meta", meta});
    REQUIRE(res.code == 0);
    std::ifstream corpus(out), sidecar(meta);
    std::stringstream cs, ms;
    cs << corpus.rdbuf();
    ms << sidecar.rdbuf();
    CHECK(line_count(cs.str()) == 3);
    CHECK(ms.str().find("generator=mt19937_64/rejection/pairing-v2") != std::string::npos);
    CHECK(ms.str().find("seed=1") != std::string::npos);

    auto dominated = json_lines(run({"dominate", "--variant", "closed", out}).out);
    CHECK(dominated.size() == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("dominate")
{
    auto hw = json_lines(run({"dominate", "--variant", "total"}, "MhEGHC@AI?_PC@_G_\n").out);
    REQUIRE(hw.size() == 1);
    CHECK(hw[0]["branch"] == "projective-plane-exact");
    CHECK(hw[0]["size"] == 12);
    CHECK(hw[0]["verified"] == true);
    CHECK(hw[0]["graph6"] == "MhEGHC@AI?_PC@_G_");

    auto pet = json_lines(run({"dominate", "--variant", "closed"}, "IheA@GUAo\n").out);
    CHECK(pet[0]["branch"] == "moore-exact");
    CHECK(pet[0]["size"] == 9);

    auto q3_g6 = run({"gen", "--atlas", "hypercube", "3"}).out;
    auto q3 = json_lines(run({"dominate", "--variant", "total"}, q3_g6).out);
    CHECK(q3[0]["size"].get<int>() <= 6);
    CHECK(q3[0]["verified"] == true);
}

TEST_CASE("dominate isolates bad graphs in a batch")
{
    // K4, a path (not regular), garbage, Petersen
    auto res = run({"dominate", "--variant", "closed"}, "C~\nCh\n!!\nIheA@GUAo\n");
    auto recs = json_lines(res.out);
    REQUIRE(recs.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(recs[i]["index"] == i);
    CHECK(recs[0]["verified"] == true);
    CHECK(recs[1]["error"].get<std::string>().find("not regular") != std::string::npos);
    CHECK(recs[2].contains("error"));
    CHECK(recs[3]["size"] == 9);
    CHECK(res.code == 2);

    CHECK(run({"dominate", "--variant", "closed"}, "C~\nCh\n").code == 1);
    CHECK(run({"dominate", "--variant", "sideways"}, "C~\n").code == 2);
}

TEST_CASE("exact")
{
    auto hw = json_lines(
        run({"exact", "--variant", "total", "--k", "2"}, "MhEGHC@AI?_PC@_G_\n").out);
    CHECK(hw[0]["status"] == "optimal");
    CHECK(hw[0]["size"] == 12);
    auto pet = json_lines(run({"exact", "--variant", "closed", "--k", "3"}, "IheA@GUAo\n").out);
    CHECK(pet[0]["size"] == 9);
    auto k4 = json_lines(run({"exact", "--variant", "total", "--k", "2"}, "C~\n").out);
    CHECK(k4[0]["size"] == 3);

    auto infeasible = run({"exact", "--variant", "total", "--k", "2"}, "Ch\n");
    CHECK(infeasible.code == 1);
    CHECK(json_lines(infeasible.out)[0]["status"] == "infeasible");

    auto budget = run({"exact", "--variant", "total", "--k", "2", "--budget", "3"},
                      "MhEGHC@AI?_PC@_G_\n");
    CHECK(json_lines(budget.out)[0]["status"] == "unknown (budget)");
}

TEST_CASE("bounds")
{
    auto recs = json_lines(
        run({"bounds", "--format", "json"}, "MhEGHC@AI?_PC@_G_\nIheA@GUAo\nCh\n").out);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0]["regular_total"].get<double>() == doctest::Approx(11.6667).epsilon(1e-4));
    CHECK(recs[0]["prob_total"].get<double>() == doctest::Approx(29.3806).epsilon(1e-4));
    CHECK(recs[1]["regular_closed"].get<double>() == doctest::Approx(8.8889).epsilon(1e-4));
    CHECK(recs[1]["prob_closed"].get<double>() == doctest::Approx(17.4245).epsilon(1e-4));
    CHECK(recs[2]["regular_total"].is_null());
    CHECK(recs[2]["inapplicable"].contains("regular_closed"));

    auto csv = run({"bounds", "--format", "csv"}, "C~\n").out;
    CHECK(csv.starts_with("index,graph6,n,r,regular_total"));
    CHECK(line_count(csv) == 2);
    auto text = run({"bounds", "--format", "text"}, "Ch\n").out;
    CHECK(text.find("n/a") != std::string::npos);
}

TEST_CASE("verify")
{
    auto pass = run({"verify", "--variant", "total", "--k", "2", "--set",
                     "0,1,2,3,4,5,6,7,8,9,10,11,12,13", "--format", "text"},
                    "MhEGHC@AI?_PC@_G_\n");
    CHECK(pass.code == 0);
    CHECK(pass.out == "pass\n");

    auto fail = run({"verify", "--variant", "closed", "--k", "2", "--set", "0,1,2", "--format",
                     "text"},
                    "Dhc\n");
    CHECK(fail.code == 1);
    CHECK(fail.out.find("vertex 3") != std::string::npos);

    auto out_of_range = run({"verify", "--variant", "closed", "--k", "2", "--set", "0,9"}, "Dhc\n");
    CHECK(out_of_range.code == 2);
    CHECK(out_of_range.err.find("out of range") != std::string::npos);
}

TEST_CASE("DIMACS input by extension and override")
{
    auto dir = std::filesystem::temp_directory_path() / "ktdom_cli_dimacs";
    std::filesystem::create_directories(dir);
    auto path = (dir / "k4.dimacs").string();
    {
        std::ofstream f(path);
        f << "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
    }
    auto recs = json_lines(run({"dominate", "--variant", "total", path}).out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["graph6"] == "C~");

    auto piped = run({"exact", "--variant", "total", "--k", "1", "--format-in", "dimacs"},
                     "p edge 2 1\ne 1 2\n");
    CHECK(json_lines(piped.out)[0]["size"] == 2);

    CHECK(run({"bounds", "--format-in", "dimacs"}, "e 1 1\n").code == 2);
    CHECK(run({"bounds", (dir / "missing.g6").string()}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"exact", "--variant", "total"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
