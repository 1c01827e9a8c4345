#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "staircase/json_io.hpp"

using staircase::Json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
}

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  const std::string base = "/tmp/staircase_cli_test";
  spit(base + ".in", stdin_data);
  const std::string cmd = std::string(STAIRCASE_CLI_PATH) + " " + args + " <" +
                          base + ".in >" + base + ".out 2>" + base + ".err";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  return r;
}

const char* kP68 =
    "00011111\n00111111\n01111111\n11111110\n11111100\n11111000\n";

}  // namespace

TEST_CASE("construct emits the reference layouts") {
  const RunResult r = run_cli("construct P 6 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out == kP68);

  const RunResult q = run_cli("construct Q 6 19");
  CHECK(q.exit_code == 0);
  CHECK(q.out ==
        "1110000000000111111\n1100000000001111111\n1000000000011111111\n"
        "0000000011111111110\n0000000111111111100\n0000001111111111000\n");

  const RunResult j = run_cli("--format json construct P 1 1");
  CHECK(j.exit_code == 0);
  CHECK(j.out == "{\"n\":1,\"N\":1,\"rows\":[\"0\"]}\n");
}

TEST_CASE("construct rejects out-of-range parameters") {
  const RunResult r = run_cli("construct R 2 4");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("n < N < floor(5n/2) - 1") != std::string::npos);
}

TEST_CASE("compute profile") {
  spit("/tmp/p68.txt", kP68);
  const RunResult r = run_cli("compute /tmp/p68.txt");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("st0=3\n") != std::string::npos);
  CHECK(r.out.find("st1=7\n") != std::string::npos);
  CHECK(r.out.find("st=7\n") != std::string::npos);
  CHECK(r.out.find("sigma=10\n") != std::string::npos);
}

TEST_CASE("compute single value with budget") {
  const RunResult q = run_cli("construct Q 6 19");
  spit("/tmp/q619.txt", q.out);
  const RunResult r = run_cli("compute --value 1 --max-turns 1 /tmp/q619.txt");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "length=11\n");
}

TEST_CASE("compute witness") {
  spit("/tmp/ones1x5.txt", "11111\n");
  const RunResult r = run_cli("--format json compute --witness /tmp/ones1x5.txt");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("st").get<int>() == 5);
  CHECK(j.at("witness").at("cells").size() == 5);
  CHECK(j.at("witness").at("turns").get<int>() == 0);
}

TEST_CASE("compute reads stdin and json matrices") {
  const RunResult r = run_cli("compute -", "01\n10\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("st=1\n") != std::string::npos);

  const RunResult j =
      run_cli("compute -", "{\"n\":2,\"N\":2,\"rows\":[\"01\",\"10\"]}");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("st=1\n") != std::string::npos);
}

TEST_CASE("compute parse failure exits 2") {
  spit("/tmp/bad.txt", "01\n002\n");
  CHECK(run_cli("compute /tmp/bad.txt").exit_code == 2);
  CHECK(run_cli("compute /tmp/missing_file.txt").exit_code == 2);
}

TEST_CASE("search output and determinism") {
  const RunResult r = run_cli("search st 2 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("exact_value=2\n") != std::string::npos);

  const RunResult a = run_cli("--format json --threads 1 search st 3 4");
  const RunResult b = run_cli("--format json --threads 2 search st 3 4");
  const RunResult c = run_cli("--format json --threads 8 search st 3 4");
  CHECK(a.exit_code == 0);
  const auto result_bytes = [](const RunResult& r) {
    Json j = Json::parse(r.out);
    return j.at("exact_value").dump() + j.at("minimizers_sample").dump();
  };
  CHECK(result_bytes(a) == result_bytes(b));
  CHECK(result_bytes(a) == result_bytes(c));
  CHECK(Json::parse(a.out).at("exact_value").get<int>() == 3);

  // identical flags give identical bytes
  const RunResult a2 = run_cli("--format json --threads 1 search st 3 4");
  CHECK(a.out == a2.out);

  const RunResult sig = run_cli("search sigma 3 3");
  CHECK(sig.out.find("exact_value=4\n") != std::string::npos);
}

TEST_CASE("search budget exceeded exits 3") {
  CHECK(run_cli("search st 6 6").exit_code == 3);
  CHECK(run_cli("--budget-cells 8 search st 3 3").exit_code == 3);
  CHECK(run_cli("--budget-cells 9 search st 3 3").exit_code == 0);
}

TEST_CASE("verify targets pass") {
  CHECK(run_cli("verify obs2 --max-n 12").exit_code == 0);
  CHECK(run_cli("verify claim4 --max-cells 300").exit_code == 0);
  CHECK(run_cli("verify claim7 --n 3..8 --max-cells 300").exit_code == 0);
  CHECK(run_cli("verify thm3 --max-cells 12 --trials 20").exit_code == 0);
  CHECK(run_cli("verify thm5 --budget-cells 12").exit_code == 0);
  CHECK(run_cli("verify cor8 --budget-cells 15").exit_code == 0);
  CHECK(run_cli("verify conjecture --max-n 3").exit_code == 0);
  CHECK(run_cli("verify thm2 --n 5 --trials 40 --seed 1").exit_code == 0);
  CHECK(run_cli("verify obs10 --n 6 --trials 40 --seed 1").exit_code == 0);
}

TEST_CASE("verify emits csv rows") {
  const RunResult r = run_cli("verify conjecture --max-n 3");
  CHECK(r.out == "n,exact_st,expected,pass\n2,1,1,1\n3,2,2,1\n");

  const RunResult t = run_cli("verify thm2 --n 4 --trials 0");
  CHECK(t.exit_code == 0);  // exhaustive over all 4x4 matrices
  std::istringstream lines(t.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,trial,case,length,bound,turns,valid,pass");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 65536);
}

TEST_CASE("verify thm2 randomized run at n=6") {
  const RunResult r = run_cli("verify thm2 --n 6 --trials 1000 --seed 1");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0, min_len = 1 << 20;
  while (std::getline(lines, line)) {
    ++rows;
    // columns: n,trial,case,length,bound,turns,valid,pass
    std::istringstream cells(line);
    std::string cell;
    for (int c = 0; c < 4; ++c) std::getline(cells, cell, ',');
    min_len = std::min(min_len, std::stoi(cell));
  }
  CHECK(rows == 1000);
  CHECK(min_len >= 5);
}

TEST_CASE("verify thm2 json rows carry traces") {
  const RunResult r = run_cli("--format json verify thm2 --n 3 --trials 5");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j.contains("trace"));
    CHECK(j.at("pass").get<bool>());
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("sweep tables") {
  const RunResult r = run_cli("sweep st-upper --n 2..3 --N 2..8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("2,4,2,proved-exact,1\n") != std::string::npos);
  CHECK(r.out.find("3,6,4,proved-exact,1\n") != std::string::npos);
  CHECK(r.out.find("3,5,3,upper-bound-only,0\n") != std::string::npos);

  // the oriented formula table is symmetric in (n, N)
  const RunResult sym = run_cli("--format json sweep sigma-formula --n 1..8 --N 1..8");
  CHECK(sym.exit_code == 0);
  std::map<std::pair<int, int>, int> grid;
  {
    std::istringstream lines(sym.out);
    std::string line;
    while (std::getline(lines, line)) {
      const Json j = Json::parse(line);
      grid[{j.at("n").get<int>(), j.at("N").get<int>()}] =
          j.at("value").get<int>();
    }
  }
  CHECK(grid.size() == 64);
  for (const auto& [key, value] : grid) {
    CHECK(grid.at({key.second, key.first}) == value);
  }
  CHECK(grid.at({6, 8}) == 10);

  const RunResult empty = run_cli("sweep sigma-formula --n 3..2 --N 1..4");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "n,N,value\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("search st 2 4 --no-such-flag").exit_code == 2);
  CHECK(run_cli("verify nosuchtarget").exit_code == 2);
  CHECK(run_cli("sweep st-upper --n x..y").exit_code == 2);
  CHECK(run_cli("compute --max-turns 2 /tmp/p68.txt").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("stdout is stable across runs") {
  const RunResult a = run_cli("--format json compute --witness /tmp/p68.txt");
  const RunResult b = run_cli("--format json compute --witness /tmp/p68.txt");
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}
