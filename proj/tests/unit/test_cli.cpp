#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

namespace mpeda::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, TraceCsv) {
    auto r = invoke({"trace", "--a", "8", "--b", "6", "--h", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("0,6,-332,1,6,-224,72,768,R1"), std::string::npos);
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, TraceExactWithFractionStep) {
    auto decimal = invoke({"trace", "--a", "8", "--b", "6", "--h", "0.1", "--mode", "exact"});
    auto fraction = invoke({"trace", "--a", "8", "--b", "6", "--h", "1/10", "--mode", "exact"});
    EXPECT_EQ(decimal.code, kExitOk);
    EXPECT_EQ(decimal.out, fraction.out);
    EXPECT_NE(decimal.out.find("0,6,-37.88,0.1,6,-36.8,7.2,768,R1"), std::string::npos);
}

TEST(Cli, CompareReportsEachStep) {
    auto r = invoke({"compare", "--a", "8", "--b", "6", "--h", "1,0.5,0.1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("\n1,float,10,"), std::string::npos);
    EXPECT_NE(r.out.find("\n0.5,float,20,"), std::string::npos);
    EXPECT_NE(r.out.find("\n0.1,float,100,"), std::string::npos);
    EXPECT_NE(r.out.find("# trade-off confirmed"), std::string::npos);
}

TEST(Cli, RenderWritesDeterministicFiles) {
    auto dir = std::filesystem::temp_directory_path() / "mpeda_cli_test";
    std::filesystem::create_directories(dir);
    for (std::string format : {"svg", "pgm"}) {
        auto one = (dir / ("one." + format)).string();
        auto two = (dir / ("two." + format)).string();
        EXPECT_EQ(invoke({"render", "--a", "8", "--b", "6", "--h", "0.5", "--format", format, "--out", one}).code,
                  kExitOk);
        EXPECT_EQ(invoke({"render", "--a", "8", "--b", "6", "--h", "0.5", "--format", format, "--out", two}).code,
                  kExitOk);
        EXPECT_FALSE(slurp(one).empty());
        EXPECT_EQ(slurp(one), slurp(two));
    }
    std::filesystem::remove_all(dir);
}

TEST(Cli, EachValidationFailureHasItsOwnDiagnostic) {
    struct Case {
        std::vector<std::string> args;
        std::string code;
    };
    const std::vector<Case> cases = {
        {{"--a", "0", "--b", "6", "--h", "1"}, "a-not-positive"},
        {{"--a", "8", "--b", "-1", "--h", "1"}, "b-not-positive"},
        {{"--a", "6", "--b", "8", "--h", "1"}, "a-not-greater-than-b"},
        {{"--a", "6", "--b", "6", "--h", "1"}, "a-not-greater-than-b"},
        {{"--a", "8", "--b", "6", "--h", "0"}, "h-not-positive"},
        {{"--a", "8", "--b", "6", "--h", "7"}, "h-exceeds-b"},
        {{"--a", "8", "--b", "6", "--h", "2/4", "--mode", "exact"}, "h-not-reduced"},
    };
    for (const auto& c : cases) {
        std::vector<std::string> args{"trace"};
        args.insert(args.end(), c.args.begin(), c.args.end());
        auto r = invoke(args);
        EXPECT_EQ(r.code, kExitUsage) << c.code;
        EXPECT_NE(r.err.find("[" + c.code + "]"), std::string::npos) << r.err;
        EXPECT_TRUE(r.out.empty());
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"trace", "--a", "8", "--b", "6"}).code, kExitUsage);
    EXPECT_EQ(invoke({"trace", "--a", "8", "--b", "6", "--h", "1", "--mode", "fast"}).code, kExitUsage);
    EXPECT_EQ(invoke({"trace", "--a", "8", "--b", "6", "--h", "1,0.5"}).code, kExitUsage);
    EXPECT_EQ(invoke({"trace", "--a", "eight", "--b", "6", "--h", "1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"render", "--a", "8", "--b", "6", "--h", "1"}).code, kExitUsage);
}

TEST(Cli, UnwritableOutputIsAFailure) {
    auto r = invoke({"render", "--a", "8", "--b", "6", "--h", "1", "--out", "/nonexistent-dir/x.svg"});
    EXPECT_EQ(r.code, kExitFailure);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsCleanly) {
    auto r = invoke({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("trace"), std::string::npos);
}

}  // namespace
}  // namespace mpeda::cli
