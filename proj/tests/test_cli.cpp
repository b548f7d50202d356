#include "liesym/acceptance.hpp"
#include "liesym_golden.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace liesym;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GoldenCases) {
    for (const auto& g : acceptance::parse_golden(golden::kCliCases)) {
        Result r = run(g.args);
        EXPECT_EQ(r.code, g.exit_code) << g.args[0];
        EXPECT_EQ(r.out, g.out) << g.args[0];
        EXPECT_NE(r.err.find(g.err_contains), std::string::npos) << r.err;
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"gen-coeffs", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"gen-coeffs"}).code, 2);
    EXPECT_EQ(run({"verify", "--family", "eq3", "--k", "4", "--field", "X4"}).code, 0);
    EXPECT_EQ(run({"verify", "--family", "eq3", "--k", "4", "--field", "X6"}).code, 1);
    EXPECT_EQ(run({"verify", "--family", "eq3", "--k", "4"}).code, 2);
    EXPECT_EQ(run({"verify", "--family", "eq3", "--k", "4", "--equation", "y''=0", "--field", "X1"}).code, 2);
    EXPECT_EQ(run({"solve", "--equation", "y'' = y'^2 +", "--degree", "1"}).code, 2);
    EXPECT_EQ(run({"selftest"}).code, 3);
}

TEST(Cli, JsonOutputsParse) {
    auto coeffs = nlohmann::json::parse(run({"gen-coeffs", "--k", "5", "--format", "json"}).out);
    EXPECT_EQ(coeffs["a"][2], "45/2");
    auto report = nlohmann::json::parse(run({"solve", "--family", "eq10", "--k", "4", "--format", "json"}).out);
    EXPECT_EQ(report["dimension"], 3);
    EXPECT_EQ(report["classification"], "SL2R");
    EXPECT_EQ(report["brackets"][1][2][2], "1");
    auto eq = nlohmann::json::parse(run({"gen-eq", "eq9", "--format", "json"}).out);
    EXPECT_EQ(eq["lhs"]["type"], "sum");
    auto verdict = nlohmann::json::parse(run({"verify", "--family", "eq9", "--field", "X6", "--format", "json"}).out);
    EXPECT_EQ(verdict["symmetry"], true);
}

TEST(Cli, EquationInputFromFile) {
    auto path = std::filesystem::temp_directory_path() / "liesym_cli_eq.json";
    std::ofstream(path) << R"({"equation": "3*y''^2 - 2*y'*y''' = 0", "id": "schwarzian"})";
    Result r = run({"solve", "--file", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("equation: schwarzian"), std::string::npos);
    EXPECT_NE(r.out.find("dimension: 6"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, OutputFileAndEnvironmentFormat) {
    auto path = std::filesystem::temp_directory_path() / "liesym_cli_out.txt";
    Result r = run({"gen-coeffs", "--k", "4", "--output", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "a = [6, -6]");
    std::filesystem::remove(path);

    setenv("LIESYM_FORMAT", "json", 1);
    EXPECT_EQ(run({"gen-coeffs", "--k", "4"}).out.front(), '{');
    EXPECT_EQ(run({"gen-coeffs", "--k", "4", "--format", "ascii"}).out, "a = [6, -6]\n");
    unsetenv("LIESYM_FORMAT");
}

TEST(Cli, CoefficientSourceChangesTheEquation) {
    Result rec = run({"verify", "--family", "eq3", "--k", "4", "--field", "X3"});
    Result closed = run({"verify", "--family", "eq3", "--k", "4", "--field", "X3", "--source", "closed_form"});
    EXPECT_EQ(rec.code, 0);
    EXPECT_EQ(closed.code, 1);
}
