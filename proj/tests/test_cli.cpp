#include "fairsplit/cli.hpp"
#include "fairsplit/errors.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fairsplit;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json report(const Outcome& o) { return Json::parse(o.out); }

std::string without_timing(const std::string& doc) {
    Json j = Json::parse(doc);
    j.erase("timing");
    return j.dump(2);
}

} // namespace

TEST(CliSolve, CornerThirdsIsInfeasible) {
    const auto o = run({"solve", "--rect", "3x2", "--family", "corner"});
    EXPECT_EQ(o.code, cli::kExitNegative);
    const Json j = report(o);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["command"], "solve");
    EXPECT_EQ(j["feasibility"]["status"], "infeasible");
    EXPECT_EQ(j["feasibility"]["witness"]["message"], "required t = 2, maximum 3/2");
    EXPECT_EQ(j["feasibility"]["witness"]["required"], "2");
    EXPECT_EQ(j["feasibility"]["witness"]["bound"], "3/2");
    EXPECT_TRUE(j["timing"].contains("elapsed_ms"));
}

TEST(CliSolve, PerturbedThirdsIsAManifold) {
    const auto o = run({"solve", "--rect", "3x2", "--family", "perturbed", "--samples", "5", "--seed", "7"});
    EXPECT_EQ(o.code, cli::kExitOk);
    const Json j = report(o);
    EXPECT_EQ(j["feasibility"]["status"], "manifold");
    EXPECT_EQ(j["feasibility"]["manifold"]["relations"], Json::parse(R"(["a + c = 2", "b + d = 2"])"));
    ASSERT_EQ(j["samples"].size(), 5U);
    for (const auto& s : j["samples"])
        EXPECT_EQ(s["areas"], Json::parse(R"(["2", "2", "2"])"));
    EXPECT_EQ(j["generator"], "mt19937_64");
}

TEST(CliSolve, StripsThirds) {
    const auto o = run({"solve", "--rect", "3x2", "--family", "strips"});
    EXPECT_EQ(o.code, cli::kExitOk);
    const Json j = report(o);
    EXPECT_EQ(j["feasibility"]["status"], "unique");
    EXPECT_EQ(j["feasibility"]["solution"]["params"]["p"], Json::parse(R"(["1", "2"])"));
    EXPECT_EQ(j["feasibility"]["solution"]["cut"], "strips:p=1,2");
}

TEST(CliSolve, SubfamilyAndRelaxedDomain) {
    const auto sub = report(run({"solve", "--rect", "3x2", "--family", "perturbed", "--paper-subfamily"}));
    EXPECT_EQ(sub["paper_subfamily"]["status"], "manifold");
    const auto relaxed = run({"solve", "--rect", "3x2", "--family", "corner", "--fractions", "2/5,1/2,1/10",
                              "--relaxed-corner-domain"});
    EXPECT_EQ(relaxed.code, cli::kExitOk);
    EXPECT_EQ(run({"solve", "--rect", "3x2", "--family", "corner", "--fractions", "2/5,1/2,1/10"}).code,
              cli::kExitNegative);
}

TEST(CliSolve, UsageErrors) {
    EXPECT_EQ(run({"solve", "--rect", "3x2", "--family", "corner", "--fractions", "0.3,0.3,0.4"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"solve", "--rect", "3x2", "--family", "corner", "--fractions", "1/3,1/3,1/2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"solve", "--rect", "3", "--family", "corner"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"solve", "--rect", "3x0", "--family", "corner"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"solve", "--rect", "3x2", "--family", "wedge"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"solve", "--rect", "3x2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"solve", "--rect", "3x2", "--family", "corner", "--paper-subfamily"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"solve", "--rect", "3x2", "--family", "corner", "--format", "xml"}).code, cli::kExitUsage);
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
    const auto bad = run({"solve", "--rect", "3x2", "--family", "corner", "--fractions", "0.3,0.3,0.4"});
    EXPECT_NE(bad.err.find("error"), std::string::npos);
}

TEST(CliSolve, TextFormat) {
    const auto o = run({"solve", "--rect", "3x2", "--family", "corner", "--format", "text"});
    EXPECT_EQ(o.code, cli::kExitNegative);
    EXPECT_NE(o.out.find("witness: required t = 2, maximum 3/2"), std::string::npos);
}

TEST(CliVerify, ExitCodes) {
    const auto pass = run({"verify", "--rect", "3x2", "--cut", "perturbed:a=3/2,b=1,c=1/2,d=1"});
    EXPECT_EQ(pass.code, cli::kExitOk);
    EXPECT_EQ(report(pass)["verification"]["verdict"], "exact-pass");

    const auto fail = run({"verify", "--rect", "3x2", "--cut", "corner:t=1,s=1"});
    EXPECT_EQ(fail.code, cli::kExitNegative);
    EXPECT_EQ(report(fail)["verification"]["deviations"], Json::parse(R"(["-1", "2", "-1"])"));

    EXPECT_EQ(run({"verify", "--rect", "3x2", "--cut", "corner:t=2,s=1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify", "--rect", "3x2", "--cut", "corner:t=1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify", "--rect", "3x2", "--cut", "strips:p=1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify", "--rect", "3x2", "--cut", "strips:p=3/2", "--fractions", "1/2,1/2"}).code, cli::kExitOk);
}

TEST(CliSearch, ExitCodes) {
    const auto corner = run({"search", "--rect", "3x2", "--family", "corner", "--resolution", "200"});
    EXPECT_EQ(corner.code, cli::kExitNegative);
    const Json cj = report(corner);
    EXPECT_EQ(cj["search"]["hit_count"], 0);
    EXPECT_EQ(cj["search"]["min_piece_deviation"], "1/2");

    const auto perturbed = run({"search", "--rect", "3x2", "--family", "perturbed", "--resolution", "50",
                                "--tolerance", "1/20", "--max-hits", "3"});
    EXPECT_EQ(perturbed.code, cli::kExitOk);
    const Json pj = report(perturbed);
    EXPECT_GT(pj["search"]["hit_count"].get<std::size_t>(), 0U);
    EXPECT_EQ(pj["search"]["hits"].size(), 3U);

    const auto strips = run({"search", "--rect", "3x2", "--family", "strips", "--resolution", "301", "--tolerance", "0"});
    EXPECT_EQ(strips.code, cli::kExitOk);
    const Json sj = report(strips);
    ASSERT_EQ(sj["search"]["hits"].size(), 1U);
    EXPECT_EQ(sj["search"]["hits"][0]["cut"], "strips:p=1,2");
    EXPECT_EQ(sj["search"]["hits"][0]["max_deviation"], "0");

    EXPECT_EQ(run({"search", "--rect", "3x2", "--family", "corner", "--resolution", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"search", "--rect", "3x2", "--family", "corner", "--tolerance", "-1"}).code, cli::kExitUsage);
}

TEST(CliRender, WritesFilesAndStdout) {
    const auto dir = std::filesystem::temp_directory_path() / "fairsplit_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "fig.svg").string();
    EXPECT_EQ(run({"render", "--rect", "3x2", "--cut", "strips:p=1,2", "--out", path}).code, cli::kExitOk);
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_NE(content.str().find("<svg"), std::string::npos);

    const auto demo = run({"render", "--rect", "3x2", "--chord", "0,0:3,2", "--out", "-"});
    EXPECT_EQ(demo.code, cli::kExitOk);
    EXPECT_NE(demo.out.find("fs:exact=\"3\""), std::string::npos);

    EXPECT_EQ(run({"render", "--rect", "3x2", "--cut", "corner:t=1,s=1", "--out", "-", "--no-labels"}).code,
              cli::kExitOk);
    EXPECT_EQ(run({"render", "--rect", "3x2", "--cut", "strips:p=1,2", "--out", "/nonexistent-dir/fig.svg"}).code,
              cli::kExitUsage);
    EXPECT_EQ(run({"render", "--rect", "3x2", "--chord", "1,1:3,2", "--out", "-"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"render", "--rect", "3x2", "--out", "-"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"render", "--rect", "3x2", "--cut", "strips:p=1,2", "--chord", "0,0:3,2", "--out", "-"}).code,
              cli::kExitUsage);
    std::filesystem::remove_all(dir);
}

TEST(CliReport, ByteStableModuloTiming) {
    const std::vector<std::vector<std::string>> commands = {
        {"solve", "--rect", "3x2", "--family", "corner"},
        {"solve", "--rect", "3x2", "--family", "perturbed", "--samples", "20", "--seed", "11", "--paper-subfamily"},
        {"solve", "--rect", "3x2", "--family", "strips"},
        {"verify", "--rect", "3x2", "--cut", "corner:t=1,s=1"},
        {"search", "--rect", "3x2", "--family", "strips", "--resolution", "31"}};
    for (const auto& args : commands) {
        const auto a = run(args);
        const auto b = run(args);
        EXPECT_EQ(without_timing(a.out), without_timing(b.out));
        EXPECT_EQ(Json::parse(a.out).back().is_object(), true);
    }
}

TEST(CliReport, InputEchoRoundTrips) {
    const auto o = run({"solve", "--rect", "6/2x4/2", "--family", "perturbed", "--fractions", "2/6,1/3,1/3",
                        "--samples", "3", "--seed", "5"});
    const Json j = report(o);
    const Json& in = j["input"];
    EXPECT_EQ(in["rect"], "3x2");
    EXPECT_EQ(in["fractions"], "1/3,1/3,1/3");
    const auto again = run({"solve", "--rect", in["rect"].get<std::string>(), "--family",
                            in["family"].get<std::string>(), "--fractions", in["fractions"].get<std::string>(),
                            "--samples", std::to_string(in["samples"].get<std::size_t>()), "--seed",
                            std::to_string(in["seed"].get<std::uint64_t>())});
    EXPECT_EQ(without_timing(again.out), without_timing(o.out));
}

TEST(CliHelpers, ParseAndFormat) {
    EXPECT_EQ(cli::format_rect(cli::parse_rect("3/2x1/4")), "3/2x1/4");
    EXPECT_THROW(cli::parse_rect("3x2x1"), ParseError);
    EXPECT_THROW(cli::parse_rect("3x-2"), GeometryError);
    EXPECT_EQ(cli::format_scalar_list(cli::parse_scalar_list("1/2,2/4")), "1/2,1/2");
    EXPECT_THROW(cli::parse_chord(Rect(3, 2), "0,0;3,2"), ParseError);
    EXPECT_NO_THROW(cli::parse_chord(Rect(3, 2), "0,0:3,2"));
}

TEST(CliBinary, ExitCodeReachesTheShell) {
    const std::string tool = FAIRSPLIT_TOOL_PATH;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((tool + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    EXPECT_EQ(status("solve --rect 3x2 --family strips"), 0);
    EXPECT_EQ(status("solve --rect 3x2 --family corner"), 1);
    EXPECT_EQ(status("solve --rect 3x2 --family corner --fractions 0.5,0.25,0.25"), 2);
    FILE* pipe = popen((tool + " render --rect 3x2 --chord 0,0:3,2 --out -").c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string svg;
    char buf[4096];
    while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        svg.append(buf, n);
    EXPECT_EQ(pclose(pipe), 0);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0U);
}
