#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "support/process.hpp"

namespace edm {
namespace {

using testing::quoted;
using testing::run_command;

const std::filesystem::path kData = EDM_TEST_DATA_DIR;

testing::ProcessResult cli(const std::string& args) {
  return run_command(quoted(EDM_CLI_PATH) + " " + args + " 2>/dev/null");
}

std::string data(const char* name) { return quoted((kData / name).string()); }

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(cli("validate " + data("example1_theta1_m1.json")).exit_code, 0);
  const auto invalid = cli("validate " + data("invalid_sum.json"));
  EXPECT_EQ(invalid.exit_code, 2);
  EXPECT_EQ(invalid.output, "SUM_NOT_ONE\tglobal\tmasses sum to 0.9+0i\n");
  EXPECT_EQ(cli("validate " + data("malformed.json")).exit_code, 3);
  EXPECT_EQ(cli("validate /nonexistent.json").exit_code, 3);
}

TEST(Cli, DistanceFormsAndErrors) {
  EXPECT_EQ(cli("distance " + data("example1_theta1_m1.json") + " " + data("example1_theta1_m2.json")).output,
            "0.591245622604\n");
  EXPECT_EQ(cli("distance " + data("example1_theta1_m1.json") + " " + data("example1_theta1_m2.json") + " --form bilinear")
                .output,
            "0.591245622604\n");
  EXPECT_EQ(cli("distance " + data("example1_theta1_m1.json") + " " + data("example1_theta1_m2.json") + " --form cosine")
                .exit_code,
            4);
  EXPECT_EQ(cli("distance " + data("example1_theta1_m1.json") + " " + data("invalid_sum.json")).exit_code, 2);
  EXPECT_EQ(cli("distance " + data("example1_theta1_m1.json") + " " + data("malformed.json")).exit_code, 3);
}

TEST(Cli, OracleMatchesDistance) {
  const std::string pair = data("example1_theta2_m1.json") + " " + data("example1_theta2_m2.json");
  EXPECT_EQ(cli("oracle " + pair).output, cli("distance " + pair).output);
}

TEST(Cli, MatrixWritesCsv) {
  const auto out = std::filesystem::temp_directory_path() / "edm_cli_matrix_test.csv";
  const auto result = cli("matrix " + data("example1_theta1_m1.json") + " " + data("example1_theta1_m2.json") + " " +
                          data("example1_theta1_m1.json") + " --out " + quoted(out.string()));
  ASSERT_EQ(result.exit_code, 0);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(),
            "example1_theta1_m1,example1_theta1_m2,example1_theta1_m1\n"
            "0,0.591245622604,0\n"
            "0.591245622604,0,0.591245622604\n"
            "0,0.591245622604,0\n");
  std::filesystem::remove(out);
}

TEST(Cli, SweepUsageErrors) {
  EXPECT_EQ(cli("sweep example2 --theta 1 --out -").exit_code, 4);
  EXPECT_EQ(cli("sweep example1 --theta 3 --out -").exit_code, 4);
  EXPECT_EQ(cli("sweep example1 --theta 1 --y 0.1 --jousselme --out -").exit_code, 4);
  EXPECT_EQ(cli("sweep example1 --theta 1").exit_code, 4);
  // x = 0 with y = 0.1 puts |1 − 0.1i| above 1.
  EXPECT_EQ(cli("sweep example1 --theta 1 --y 0.1 --out -").exit_code, 2);
}

TEST(Cli, NoSubcommandIsUsageError) {
  EXPECT_EQ(cli("").exit_code, 4);
  EXPECT_EQ(cli("frobnicate").exit_code, 4);
  EXPECT_EQ(cli("--help").exit_code, 0);
}

}  // namespace
}  // namespace edm
