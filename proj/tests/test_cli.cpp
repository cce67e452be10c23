#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(SUBPOWER_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("table rendering") {
  SECTION("json matches the printed triangle") {
    const auto res = run_cli("table --max-m 5 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "{\"rows\":[[\"1\"],[\"0\",\"1\"],[\"0\",\"1\",\"2\"],"
          "[\"0\",\"1\",\"6\",\"6\"],[\"0\",\"1\",\"14\",\"36\",\"24\"],"
          "[\"0\",\"1\",\"30\",\"150\",\"240\",\"120\"]]}\n");
  }
  SECTION("markdown layout has one row per exponent and blank zero cells") {
    const auto res = run_cli("table --max-m 8 --format markdown");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 11);  // header + separator + 9 rows
    CHECK(lines[0] == "| m\\n | 0 | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 |");
    CHECK(lines[2] == "| 0 | 1 |  |  |  |  |  |  |  |  |");
    CHECK(lines[3] == "| 1 |  | 1 |  |  |  |  |  |  |  |");
    CHECK(lines[9] == "| 7 |  | 1 | 126 | 1806 | 8400 | 16800 | 15120 | 5040 |  |");
  }
  SECTION("degenerate table") {
    const auto res = run_cli("table --max-m 0");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "m,n,value\n0,0,1\n");
  }
  SECTION("missing required flag is a usage error") {
    CHECK(run_cli("table").exit_code == 2);
  }
}

TEST_CASE("check suites pass end to end") {
  const std::string data = std::string(" --data-dir ") + SUBPOWER_DATA_DIR;
  for (const std::string suite : {"core", "finitediff", "families", "analytic", "oeis"}) {
    const auto res = run_cli("check --suite " + suite + data);
    INFO(suite << ": " << res.output);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find(" 0 failures") != std::string::npos);
  }
  SECTION("relaxed tolerance") {
    CHECK(run_cli("check --suite analytic --tol 1e-6").exit_code == 0);
  }
  SECTION("the aggregate suite") {
    const auto res = run_cli("check --suite all" + data);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("suite all:") != std::string::npos);
    CHECK(res.output.find(" 0 failures") != std::string::npos);
  }
  SECTION("the documented deviation note is printed") {
    const auto res = run_cli("check --suite analytic");
    CHECK(res.output.find("575/216") != std::string::npos);
    CHECK(res.output.find("576/216") != std::string::npos);
    CHECK(res.output.find("not a failure") != std::string::npos);
  }
  SECTION("unknown suite is a usage error") {
    CHECK(run_cli("check --suite everything").exit_code == 2);
  }
}

TEST_CASE("fermat reports") {
  SECTION("solutions appear only at m = 2, 5, 7") {
    const auto res = run_cli("fermat --max-m 10");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("m=2: (1,1,2)") != std::string::npos);
    CHECK(res.output.find("m=5: (2,5,3) (5,2,3) (5,5,4)") != std::string::npos);
    CHECK(res.output.find("m=7: (4,4,5)") != std::string::npos);
    CHECK(res.output.find("solutions found for m in {2, 5, 7}") != std::string::npos);
  }
  SECTION("small bound") {
    const auto res = run_cli("fermat --max-m 2");
    CHECK(res.output.find("m=1: none") != std::string::npos);
    CHECK(res.output.find("m=2: (1,1,2)") != std::string::npos);
  }
  SECTION("zero bound is a usage error") {
    CHECK(run_cli("fermat --max-m 0").exit_code == 2);
  }
}

TEST_CASE("plot data stream") {
  const auto res = run_cli("plot-data --n-max 5 --z-min 0 --z-max 5 --step 0.1");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.output);
  REQUIRE(lines.size() == 52);  // header + 51 grid rows
  CHECK(lines[0] == "z,n1,n2,n3,n4,n5");
  CHECK(lines[1].rfind("0,1,", 0) == 0);
  CHECK(lines[51].rfind("5,", 0) == 0);
  CHECK(lines[51].substr(lines[51].rfind(',') + 1) == "120");
  // the base-1 column is constantly 1
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto first_field = lines[i].substr(lines[i].find(',') + 1);
    CHECK(first_field.substr(0, first_field.find(',')) == "1");
  }
  SECTION("usage errors") {
    CHECK(run_cli("plot-data --z-min 2 --z-max 1").exit_code == 2);
    CHECK(run_cli("plot-data --step -0.5").exit_code == 2);
  }
}

TEST_CASE("oeis comparisons") {
  const std::string data = std::string(" --data-dir ") + SUBPOWER_DATA_DIR;
  SECTION("triangle and fubini snapshots match") {
    auto res = run_cli("oeis A131689 --against triangle" + data);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("compared 91, matched 91") != std::string::npos);
    res = run_cli("oeis A000670 --against fubini" + data);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("matched 26") != std::string::npos);
  }
  SECTION("malformed a-number is a usage error") {
    CHECK(run_cli("oeis 670 --against fubini" + data).exit_code == 2);
  }
  SECTION("missing snapshot is an i/o error") {
    const auto tmp = std::filesystem::temp_directory_path() / "subpower-cli-empty";
    std::filesystem::create_directories(tmp);
    CHECK(run_cli("oeis A000045 --against fubini --data-dir " + tmp.string()).exit_code ==
          3);
  }
  SECTION("a corrupted reference is reported as a mismatch") {
    const auto tmp = std::filesystem::temp_directory_path() / "subpower-cli-corrupt";
    std::filesystem::create_directories(tmp);
    std::ofstream(tmp / "b000670.txt") << "0 1\n1 1\n2 3\n3 14\n";
    const auto res = run_cli("oeis A000670 --against fubini --data-dir " + tmp.string());
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("first mismatch at index 3") != std::string::npos);
  }
}

TEST_CASE("family subcommands") {
  CHECK(run_cli("sum-powers --m 5 --n 2").output == "33\n");
  CHECK(run_cli("sum-powers --m 1 --n 100 --method bernoulli").output == "5050\n");
  CHECK(run_cli("bernoulli --upto 2 --method explicit").output ==
        "k,value\n0,1\n1,1/2\n2,1/6\n");
  CHECK(run_cli("fubini --upto 3 --method recurrence").output ==
        "m,value\n0,1\n1,1\n2,3\n3,13\n");
  CHECK(run_cli("seq --family subfactorial --terms 5").output ==
        "index,value\n0,1\n1,0\n2,1\n3,2\n4,9\n");
  CHECK(run_cli("seq --family triangle --terms 10 --format json").output ==
        "{\"rows\":[[\"0\",\"1\"],[\"1\",\"0\"],[\"2\",\"1\"],[\"3\",\"0\"],"
        "[\"4\",\"1\"],[\"5\",\"2\"],[\"6\",\"0\"],[\"7\",\"1\"],[\"8\",\"6\"],"
        "[\"9\",\"6\"]]}\n");
}

TEST_CASE("identical invocations are byte-identical") {
  for (const std::string args :
       {std::string("table --max-m 8 --format csv"),
        std::string("plot-data --n-max 3 --z-min 0 --z-max 2 --step 0.25"),
        std::string("fermat --max-m 12")}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
  }
}
