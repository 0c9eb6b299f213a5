#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpert_cli/cli.hpp"

namespace {

namespace fs = std::filesystem;
using qpert::cli::run;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("qpert_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::create_directories(dir);
  return dir;
}

TEST(ParseNumber, DecimalsAndFractions) {
  EXPECT_EQ(qpert::cli::parse_number("0.5"), 0.5);
  EXPECT_EQ(qpert::cli::parse_number("+2"), 2.0);
  EXPECT_EQ(qpert::cli::parse_number("-1e-3"), -1e-3);
  EXPECT_DOUBLE_EQ(*qpert::cli::parse_number("1/18"), 1.0 / 18.0);
  EXPECT_EQ(qpert::cli::parse_number("5/2"), 2.5);
  EXPECT_FALSE(qpert::cli::parse_number("1/0").has_value());
  EXPECT_FALSE(qpert::cli::parse_number("abc").has_value());
  EXPECT_FALSE(qpert::cli::parse_number("1.5x").has_value());
  EXPECT_FALSE(qpert::cli::parse_number("").has_value());
  EXPECT_FALSE(qpert::cli::parse_number("nan").has_value());
}

TEST(Cli, HydrogenTableCsv) {
  const auto r = invoke({"hydrogen-table", "--alphaw", "0.15", "--n-max", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "n,E_complex_eV,E_relativistic_eV,E_quaternionic_eV,alphaW_eV\n"
            "1,-13.60000,-13.60090,-13.60083,0.15000\n"
            "2,-3.40000,-3.40015,-3.40331,0.15000\n"
            "3,-1.51111,-1.51116,-1.51854,0.15000\n"
            "4,-0.85000,-0.85002,-0.86313,0.15000\n"
            "5,-0.54400,-0.54401,-0.56430,0.15000\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, HydrogenTableZeroPotentialAndRadius) {
  const auto zero = parse_csv(invoke({"hydrogen-table", "--alphaw", "0", "--n-max", "6"}).out);
  for (std::size_t i = 1; i < zero.size(); ++i) {
    EXPECT_EQ(zero[i][1], zero[i][3]);
  }
  const auto nine = invoke({"hydrogen-table", "--alphaw", "0.15", "--n-max", "9"});
  EXPECT_EQ(parse_csv(nine.out).back()[0], "9");
  EXPECT_TRUE(nine.err.empty());
  const auto ten = invoke({"hydrogen-table", "--alphaw", "0.15", "--n-max", "10"});
  EXPECT_EQ(ten.code, 0);
  EXPECT_EQ(parse_csv(ten.out).size(), 10u);
  EXPECT_NE(ten.err.find("n = 10"), std::string::npos);
}

TEST(Cli, SigmaAtZeroIsOne) {
  const auto r = invoke({"sigma", "--model", "hydrogen", "--n", "1", "--alpha", "0", "--max-order", "12"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 13u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"alpha", "order", "sigma"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][1], std::to_string(i));
    EXPECT_EQ(rows[i][2], "1.00000");
  }
}

TEST(Cli, SigmaListWithFractionsAndRejection) {
  const auto r =
      invoke({"sigma", "--model", "hydrogen", "--n", "1", "--alpha", "1/16,1/8,1/4", "--max-order", "3"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[1][0], "0.06250");
  EXPECT_EQ(rows[4][0], "0.12500");
  EXPECT_EQ(rows[4][2], "0.87500");
  EXPECT_NE(r.err.find("alpha = 0.25 excluded"), std::string::npos);
}

TEST(Cli, SigmaBoundaryWarning) {
  const auto r = invoke({"sigma", "--model", "oscillator", "--n", "2", "--alpha", "2.5", "--max-order", "20"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_csv(r.out).size(), 21u);
  EXPECT_NE(r.err.find("boundary"), std::string::npos);
}

TEST(Cli, SeriesColumns) {
  const auto r = invoke({"series", "--e0", "1", "--w", "1", "--alpha", "0.5", "--max-order", "200", "--precision", "12"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 201u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"s", "E_s", "term", "partial_sum", "normalized", "closed_form", "in_radius"}));
  const double expected[] = {1, -2, 6, -20, 70};
  for (int t = 1; t <= 5; ++t) {
    EXPECT_EQ(std::stod(rows[static_cast<std::size_t>(2 * t)][4]), expected[t - 1]);
  }
  for (std::size_t s = 1; s <= 200; s += 2) {
    EXPECT_EQ(std::stod(rows[s][2]), 0.0);
    EXPECT_EQ(std::stod(rows[s][1]), 0.0);
  }
  const double partial = std::stod(rows[200][3]);
  const double closed = std::stod(rows[200][5]);
  EXPECT_NEAR(partial, closed, 1e-10);
  EXPECT_NEAR(closed, std::sqrt(1.25), 1e-12);
  EXPECT_EQ(rows[200][6], "true");
}

TEST(Cli, SeriesOutsideRadius) {
  const auto r = invoke({"series", "--e0", "1", "--w", "1", "--alpha", "2", "--max-order", "4"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows[1][5], "nan");
  EXPECT_EQ(rows[1][6], "false");
  EXPECT_NE(r.err.find("diverges"), std::string::npos);
}

TEST(Cli, JsonOutputParses) {
  const auto r = invoke({"series", "--e0", "-2", "--w", "1", "--alpha", "1", "--max-order", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "series");
  ASSERT_EQ(doc["rows"].size(), 4u);
  EXPECT_EQ(doc["rows"][1]["s"], 2);
  EXPECT_EQ(doc["rows"][1]["in_radius"], true);
  EXPECT_DOUBLE_EQ(doc["rows"][1]["normalized"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(doc["rows"][3]["closed_form"].get<double>(), -2.23607);
}

TEST(Cli, OracleReportAndExitCodes) {
  const auto ok = invoke({"oracle", "--model", "well", "--n", "1", "--alpha", "0.25", "--grid", "300"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  const auto rows = parse_csv(ok.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][5], "unit");
  EXPECT_EQ(rows[1][5], "E_L");
  EXPECT_EQ(rows[1].back(), "PASS");

  const auto zero = parse_csv(invoke({"oracle", "--model", "oscillator", "--n", "0", "--alpha", "0", "--grid", "300"}).out);
  EXPECT_EQ(zero[1][8], zero[1][9]);
  EXPECT_EQ(zero[1][9], "0.50000");

  const auto strict =
      invoke({"oracle", "--model", "well", "--n", "1", "--alpha", "0.25", "--grid", "50", "--tolerance", "1e-12"});
  EXPECT_EQ(strict.code, 2);
  EXPECT_EQ(parse_csv(strict.out)[1].back(), "FAIL");

  EXPECT_EQ(invoke({"oracle", "--model", "hydrogen", "--n", "1", "--alpha", "0.1"}).code, 1);
  EXPECT_EQ(invoke({"oracle", "--model", "well", "--n", "1", "--alpha", "0.9", "--grid", "50"}).code, 1);
}

TEST(Cli, LevelsCurve) {
  const auto r = invoke({"levels", "--n", "1,2", "--samples", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n,alphaW_eV,energy_eV\n"
            "1,0.00000,-13.60000\n1,6.80000,-15.20526\n1,13.60000,-19.23330\n"
            "2,0.00000,-3.40000\n2,1.70000,-3.80132\n2,3.40000,-4.80833\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"bogus"}).code, 1);
  EXPECT_EQ(invoke({"sigma", "--model", "well"}).code, 1);
  EXPECT_EQ(invoke({"sigma", "--model", "helium", "--n", "1", "--alpha", "0"}).code, 1);
  EXPECT_EQ(invoke({"sigma", "--model", "well", "--n", "0", "--alpha", "0"}).code, 1);
  EXPECT_EQ(invoke({"sigma", "--model", "well", "--n", "1", "--alpha", "x"}).code, 1);
  EXPECT_EQ(invoke({"series", "--e0", "0", "--w", "1", "--alpha", "1"}).code, 1);
  EXPECT_EQ(invoke({"series", "--e0", "1", "--w", "1", "--alpha", "1", "--precision", "0"}).code, 1);
  EXPECT_EQ(invoke({"series", "--e0", "1", "--w", "1", "--alpha", "1", "--precision", "16"}).code, 1);
  EXPECT_EQ(invoke({"series", "--e0", "1", "--w", "1", "--alpha", "1", "--format", "xml"}).code, 1);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("hydrogen-table"), std::string::npos);
}

TEST(Cli, DeterministicBytes) {
  const std::vector<std::string> args{"sigma", "--model", "well", "--n", "2", "--alpha", "0.5,1,2", "--format", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, WritesFileAtomically) {
  const auto dir = scratch_dir();
  const auto target = dir / "table.csv";
  const auto r = invoke({"hydrogen-table", "--alphaw", "0.15", "--out", target.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(target);
  const std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, invoke({"hydrogen-table", "--alphaw", "0.15"}).out);
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1);
  fs::remove_all(dir);
}

TEST(Cli, UnwritableDestinationIsIoError) {
  const auto r = invoke({"hydrogen-table", "--alphaw", "0.15", "--out", "/nonexistent-dir/x/out.csv"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(fs::exists("/nonexistent-dir/x/out.csv"));
}

TEST(Cli, FailedCommandLeavesExistingFileUntouched) {
  const auto dir = scratch_dir();
  const auto target = dir / "keep.csv";
  { std::ofstream(target) << "previous\n"; }
  const auto r = invoke({"series", "--e0", "0", "--w", "1", "--alpha", "1", "--out", target.string()});
  EXPECT_EQ(r.code, 1);
  std::ifstream f(target);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "previous");
  fs::remove_all(dir);
}

}  // namespace
