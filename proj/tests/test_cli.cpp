// End-to-end tests driving the built CLI binary. The path is injected by
// CMake through ULRC_CLI_PATH.

#include "doctest.h"

#ifdef ULRC_CLI_PATH

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const auto out_path =
      (fs::temp_directory_path() / ("ulrc_cli_out_" + std::to_string(counter++) + ".txt"))
          .string();
  const std::string cmd =
      env_prefix + " " + std::string(ULRC_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  result.output = ss.str();
  std::remove(out_path.c_str());
  return result;
}

std::string temp_json(const char* stem) {
  return (fs::temp_directory_path() / (std::string("ulrc_cli_") + stem + ".json")).string();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("bound subcommands print the expected values") {
  auto info = run_cli("bound info -n 15 -k 11 --profile 0,4,3,4");
  CHECK(info.exit_code == 0);
  CHECK(info.output.find("bound: 2") != std::string::npos);

  auto all = run_cli("bound all-symbol -n 15 -k 11 --profile 0,6,4,5 --json");
  CHECK(all.exit_code == 0);
  const json aj = json::parse(all.output);
  CHECK(aj.at("bound") == 2);
  CHECK(aj.at("k_prime") == json::array({0, 4, 3, 4}));
  CHECK(aj.at("r_prime") == 3);
  CHECK(aj.at("r") == 4);

  auto gop = run_cli("bound gopalan -n 8 -k 4 -r 2");
  CHECK(gop.exit_code == 0);
  CHECK(gop.output.find("bound: 4") != std::string::npos);
}

TEST_CASE("undefined r exits 2 and prints the single-locality value alongside") {
  auto r = run_cli("bound all-symbol -n 6 -k 5 --profile 0,6");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("is empty") != std::string::npos);
  // gopalan(6, 5, 2) = 6 - 5 - 3 + 2 = 0
  CHECK(r.output.find("single-locality information bound for r = 2: 0") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  CHECK(run_cli("bound info -n 15 -k 11 --profile 0,4,x").exit_code == 2);
  CHECK(run_cli("bound info -n 15 -k 11").exit_code == 2);           // missing option
  CHECK(run_cli("bound info -n 15 -k 12 --profile 0,4,3,4").exit_code == 2);  // sum mismatch
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("construct, analyze round trip for a pyramid code") {
  const auto path = temp_json("pyr");
  auto built = run_cli("construct pyramid --profile 0,4,3,4 -d 2 -q 16 -o " + path);
  REQUIRE(built.exit_code == 0);
  CHECK(built.output.find("(15, 11)") != std::string::npos);

  auto analyzed = run_cli("analyze " + path + " --json");
  REQUIRE(analyzed.exit_code == 0);
  const json a = json::parse(analyzed.output);
  CHECK(a.at("min_distance") == 2);
  CHECK(a.at("info_profile") == json::array({0, 4, 3, 4}));
  CHECK(a.at("info_bound_gap") == 0);
  CHECK(a.at("all_symbol_bound_gap") == 0);
  CHECK(a.at("witness_size_at_most_n_minus_d") == true);
  CHECK(a.at("construction_check").at("info_profile_matches_design") == true);
  CHECK(a.at("construction_check").at("distance_matches_design") == true);
  std::remove(path.c_str());
}

TEST_CASE("construct, analyze round trip for a gabidulin code") {
  const auto path = temp_json("gab");
  auto built = run_cli("construct gabidulin --nprofile 0,6 -k 3 -q 4 -m 4 -o " + path);
  REQUIRE(built.exit_code == 0);

  auto analyzed = run_cli("analyze " + path + " --json");
  REQUIRE(analyzed.exit_code == 0);
  const json a = json::parse(analyzed.output);
  CHECK(a.at("min_distance") == 3);
  CHECK(a.at("all_symbol_profile") == json::array({0, 6}));
  CHECK(a.at("all_symbol_bound_gap") == 0);
  CHECK(a.at("construction_check").at("all_symbol_profile_matches_design") == true);
  CHECK(a.at("construction_check").at("distance_matches_design") == true);
  std::remove(path.c_str());
}

TEST_CASE("divisibility violations surface verbatim") {
  auto r = run_cli("construct gabidulin --nprofile 0,5 -k 3 -q 4 -m 4 -o /dev/null");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("(j+1) must divide n_j") != std::string::npos);
}

TEST_CASE("optimize-profile") {
  auto r = run_cli("optimize-profile --requirement 0,3,3 --certify --json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("optimal_profile") == json::array({1, 2, 3}));
  CHECK(j.at("objective") == 3);
  CHECK(j.at("certified") == true);
  CHECK(j.at("exhaustive_objective") == 3);
}

TEST_CASE("simulation is deterministic for a fixed seed") {
  const auto path = temp_json("sim");
  REQUIRE(run_cli("construct gabidulin --nprofile 0,6 -k 3 -q 4 -m 4 -o " + path).exit_code == 0);
  auto a = run_cli("simulate " + path + " --trials 200 --erasures 2 --seed 7 --json");
  auto b = run_cli("simulate " + path + " --trials 200 --erasures 2 --seed 7 --json");
  auto c = run_cli("simulate " + path + " --trials 200 --erasures 2 --seed 8 --json");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output != c.output);
  const json j = json::parse(a.output);
  CHECK(j.at("decode_successes") == 200);  // 2 = d - 1 erasures always decode
  std::remove(path.c_str());
}

TEST_CASE("budget environment variables are honored") {
  const auto path = temp_json("budget");
  REQUIRE(run_cli("construct pyramid --profile 0,4 -d 3 -q 16 -o " + path).exit_code == 0);
  auto r = run_cli("analyze " + path, "ULRC_RANK_BUDGET=1 ULRC_DUAL_BUDGET=1");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("omitted (budget)") != std::string::npos);
  std::remove(path.c_str());
}

TEST_SUITE_END();

#endif  // ULRC_CLI_PATH
