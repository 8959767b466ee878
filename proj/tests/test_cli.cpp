#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qwalk/cli.hpp"

using namespace qwalk;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qwalk");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST(ParseSpinor, Forms) {
    const CoinSpinor a = cli::parse_spinor("0,0,1");
    EXPECT_EQ(a.right, Complex(1.0));
    const CoinSpinor b = cli::parse_spinor("0.6,0:0.8,+0");
    EXPECT_EQ(b.left, Complex(0.6));
    EXPECT_EQ(b.stay, Complex(0.0, 0.8));
    EXPECT_THROW(cli::parse_spinor("1,0"), std::invalid_argument);
    EXPECT_THROW(cli::parse_spinor("1,0,x"), std::invalid_argument);
    EXPECT_THROW(cli::parse_spinor("1,0,0,0"), std::invalid_argument);
}

TEST(Cli, SimulateZeroSteps) {
    const Result r = run_cli({"simulate", "--init", "0,0,1", "--left", "1", "--steps", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "absorbed_left", "absorbed_right", "remaining"}));
    EXPECT_EQ(rows[1], (std::vector<std::string>{"0", "0", "0", "1"}));
}

TEST(Cli, SimulateLeftBoundary) {
    const Result r = run_cli({"simulate", "--init", "0,0,1", "--left", "1", "--steps", "400"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 402u);
    EXPECT_NEAR(std::stod(rows.back()[1]), 0.6693, 5e-3);
    const Result m = run_cli({"simulate", "--init", "1,0,0", "--right", "1", "--steps", "400"});
    const auto mrows = csv_rows(m.out);
    EXPECT_EQ(mrows.back()[1], rows.back()[2]);
    EXPECT_EQ(mrows.back()[2], rows.back()[1]);
}

TEST(Cli, SimulateFreeSnapshots) {
    const Result r = run_cli({"simulate", "--init", "0,0,1", "--steps", "3", "--snapshots", "1,3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "m", "p"}));
    double total1 = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i][0] == "1") total1 += std::stod(rows[i][2]);
    EXPECT_NEAR(total1, 1.0, 1e-12);
}

TEST(Cli, AbsorbOneAndTwoBoundaries) {
    Result r = run_cli({"absorb", "--left", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    EXPECT_EQ(rows[0][0], "p_left");
    EXPECT_NEAR(std::stod(rows[1][0]), 0.6693, 5e-4);

    r = run_cli({"absorb", "--left", "1", "--right", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    rows = csv_rows(r.out);
    EXPECT_NEAR(std::stod(rows[1][0]), 2.0 / 3.0, 1e-11);
    EXPECT_NEAR(std::stod(rows[1][1]), 1.0 / 3.0, 1e-11);

    r = run_cli({"absorb", "--right", "1", "--spinor", "0,1,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(csv_rows(r.out)[1][1]), 0.5255, 5e-4);
}

TEST(Cli, Table1) {
    const Result r = run_cli({"table1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0][0], "n");
    EXPECT_NEAR(std::stod(rows[1][1]), 0.1529411765, 1e-10);
    EXPECT_EQ(rows[6][4], "");
}

TEST(Cli, Theorem4) {
    const Result r = run_cli({"theorem4", "--max-n", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(std::stod(rows[1][1]), 0.0);
    EXPECT_NEAR(std::stod(rows[2][1]), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(std::stod(rows[2][4]), 2.0 / 3.0, 1e-10);
}

TEST(Cli, MovingBoundaryDecreases) {
    const Result r = run_cli({"moving-boundary", "--max-m", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 5u);
    for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i][3]), std::stod(rows[i - 1][3]));
}

TEST(Cli, Localize) {
    const Result r = run_cli({"localize", "--steps", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 21u);
    EXPECT_NEAR(std::stod(rows[1][1]), 4.0 / 9.0, 1e-12);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run_cli({}).code, cli::kExitInputError);
    EXPECT_EQ(run_cli({"bogus"}).code, cli::kExitInputError);
    EXPECT_EQ(run_cli({"absorb", "--left", "0"}).code, cli::kExitInputError);
    EXPECT_EQ(run_cli({"absorb", "--left", "1", "--spinor", "1,1,0"}).code, cli::kExitInputError);
    EXPECT_EQ(run_cli({"absorb"}).code, cli::kExitInputError);
    EXPECT_EQ(run_cli({"simulate", "--init", "0,0,1", "--format", "xml"}).code, cli::kExitInputError);
    const Result r = run_cli({"absorb", "--left", "-3"});
    EXPECT_NE(r.err.find("error"), std::string::npos);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ToleranceFailure) {
    const Result r = run_cli({"absorb", "--left", "1", "--right", "3", "--tol", "1e-30"});
    EXPECT_EQ(r.code, cli::kExitToleranceFailure);
    EXPECT_FALSE(r.out.empty());
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, JsonOutput) {
    const Result r = run_cli({"absorb", "--left", "1", "--right", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "absorb");
    EXPECT_EQ(j["columns"][0], "p_left");
    EXPECT_NEAR(j["rows"][0][0].get<double>(), 2.0 / 3.0, 1e-11);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"table1", "--max-n", "3", "--format", "json"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, OutputDirectoryEnv) {
    const auto dir = std::filesystem::temp_directory_path() / "qwalk_cli_test";
    std::filesystem::create_directories(dir);
    ::setenv(cli::kOutputDirEnv, dir.c_str(), 1);
    const Result r = run_cli({"absorb", "--left", "1", "--right", "1", "--out", "a.csv"});
    ::unsetenv(cli::kOutputDirEnv);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(dir / "a.csv");
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(csv_rows(ss.str())[0][0], "p_left");
    std::filesystem::remove_all(dir);
}

TEST(Cli, LocalizeProfile) {
    const Result r = run_cli({"localize", "--steps", "100", "--profile"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"m", "p_average", "p_localized"}));
    EXPECT_EQ(rows.size(), 202u);
}

TEST(Cli, AbsorbDistanceTwo) {
    const Result r = run_cli({"absorb", "--left", "2", "--right", "1", "--spinor", "0,0,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    EXPECT_NEAR(std::stod(rows[1][0]), 0.1529411765, 1e-10);
    EXPECT_NEAR(std::stod(rows[1][1]), 0.4470588235, 1e-10);
}

TEST(Cli, MovingBoundaryWithSpinor) {
    const Result r = run_cli({"moving-boundary", "--max-m", "5", "--spinor", "0,0,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"M", "p"}));
    EXPECT_NEAR(std::stod(rows[1][1]), 0.6693, 5e-4);
    for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i][1]), std::stod(rows[i - 1][1]));
    EXPECT_LT(std::stod(rows[2][1]), 0.15 * std::stod(rows[1][1]));
}
