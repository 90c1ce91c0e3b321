#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lie4/io.hpp"

using namespace lie4;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(LIE4_CLI) + " " + args + " 2>/dev/null";
    Run r{-1, ""};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string write_doc(const std::string& name, const std::string& text) {
    auto dir = fs::temp_directory_path() / "lie4_cli_test";
    fs::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Cli, IdentifyG410Corrected) {
    auto doc = write_doc("g410.json", emit_algebra(make_external({Source::Mubarakzyanov, "g4,10", {}})));
    auto r = run("--json identify --input " + doc);
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["family"], "AffC");
    EXPECT_TRUE(j["verified"].get<bool>());
}

TEST(Cli, IdentifyNonSolvableExits2) {
    LieAlgebra sl2(3, brackets(3, {{0, 1, {{2, 1}}}, {2, 0, {{0, 2}}}, {2, 1, {{1, -2}}}}));
    auto doc = write_doc("sl2.json", emit_algebra(sl2));
    EXPECT_EQ(run("identify --input " + doc).code, 2);
}

TEST(Cli, SearchOnPrimedD4IsDecidedEmpty) {
    auto doc = write_doc("d4p1.json", emit_algebra(make(Family::D4p_lambda, {1})));
    auto r = run("--json search --paracomplex --input " + doc);
    EXPECT_EQ(r.code, 1);
    auto j = Json::parse(r.out);
    bool forced = false;
    for (auto& x : j["results"]) forced |= x["certificate"]["kind"] == "ForcedVector";
    EXPECT_TRUE(forced);
}

TEST(Cli, SearchFindsOnD4) {
    auto doc = write_doc("d4.json", emit_algebra(make(Family::D4, {})));
    EXPECT_EQ(run("search --paracomplex --type affr2 --input " + doc).code, 0);
}

TEST(Cli, VerifyTablePasses) { EXPECT_EQ(run("verify --table pc").code, 0); }

TEST(Cli, VerifyCpsReportsFailure) { EXPECT_EQ(run("verify --table cps").code, 1); }

TEST(Cli, VerifyAllIsDeterministicAcrossThreads) {
    auto a = run("--json verify --table all --threads 1");
    auto b = run("--json verify --table all --threads 8");
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}

TEST(Cli, UsageAndDataErrors) {
    EXPECT_EQ(run("verify --table nope").code, 64);
    EXPECT_EQ(run("").code, 64);
    auto bad = write_doc("bad.json", R"({"format_version": 1, "dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "2/4"}}]})");
    EXPECT_EQ(run("identify --input " + bad).code, 65);
    EXPECT_EQ(run("identify --input /nonexistent/file.json").code, 65);
}

TEST(Cli, Derivations) {
    auto doc = write_doc("h3.json", emit_algebra(make(Family::H3, {})));
    auto r = run("--json derivations --input " + doc);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["dim"], 6);
}

TEST(Cli, FromMatrices) {
    Json j = {{"format_version", 1}, {"matrices", Json::array()}};
    auto reals = matrix_realizations(Family::AffC, {});
    for (auto& m : reals[0]) j["matrices"].push_back(mat_to_json(m));
    auto doc = write_doc("affc_m.json", j.dump());
    auto r = run("--json from-matrices --input " + doc);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["identification"]["family"], "AffC");
}

TEST(Cli, CatalogList) {
    auto r = run("catalog --list --family H4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Mubarakzyanov g4,7"), std::string::npos);
    EXPECT_EQ(run("catalog --list --family Nope").code, 64);
}
