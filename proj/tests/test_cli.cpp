#include "kohn/rational.hpp"
#include "kohn/rossi_operator.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace kohn;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path =
      "/tmp/kohn_cli_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
  const std::string cmd =
      std::string(KOHN_SPECTRA_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());

  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(out_path.c_str());
  return r;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("help and config validation exit codes") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("frobnicate").exit_code == 1);           // unknown subcommand
  CHECK(run_cli("matrix --t 1/2").exit_code == 1);       // missing --m
  CHECK(run_cli("matrix --m 3 --t 3/2").exit_code == 1); // |t| out of range
  CHECK(run_cli("matrix --m 3 --t 1/0").exit_code == 1);
  CHECK(run_cli("eigs --m 3 --k 2 --t 1/2").exit_code == 1);  // both selectors
  CHECK(run_cli("eigs --m 4 --t 1/2 --mode numeric").exit_code == 1);
  CHECK(run_cli("eigs --m 13 --t 1/2 --mode exact").exit_code == 1);  // k cap
  CHECK(run_cli("sweep --kmax 2 --t-grid 0.5 --parity odd").exit_code == 1);
  CHECK(run_cli("sweep --kmax 2 --t-grid 0.1:0.3:0.1 --parity sideways").exit_code == 1);
}

TEST_CASE("basis listing matches the canonical degree-3 ordering") {
  const RunResult r = run_cli("basis --m 3");
  REQUIRE(r.exit_code == 0);
  const auto lines = data_lines(r.output);
  REQUIRE(lines.size() == 16);
  CHECK(lines[0] == "-6 * zb2^3");
  CHECK(lines[4] == "-2 * z2 zb2^2 + 4 * z1 zb1 zb2");
  CHECK(lines[15] == "-6 * z1^3");

  const RunResult bidegree = run_cli("basis --p 0 --q 1");
  REQUIRE(bidegree.exit_code == 0);
  CHECK(data_lines(bidegree.output).size() == 2);

  const RunResult js = run_cli("basis --p 2 --q 1 --format json");
  REQUIRE(js.exit_code == 0);
  const auto doc = nlohmann::json::parse(js.output);
  CHECK(doc["dim"] == 4);
  CHECK(doc["elements"].size() == 4);
}

TEST_CASE("matrix header reports the factored normalization") {
  const RunResult r = run_cli("matrix --m 3 --t 1/2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("h factored out; h = 20/9") != std::string::npos);
  CHECK(data_lines(r.output).size() == 16);
}

TEST_CASE("identical configuration gives byte-identical output") {
  const std::string cmds[] = {
      "blocks --k 3 --t 1/2 --no-header",
      "matrix --m 2 --t 1/4 --format csv --no-header",
      "sweep --kmax 3 --t-grid 0.1:0.5:0.2 --no-header",
      "eigs --k 2 --t 1/2 --no-header",
  };
  for (const std::string& cmd : cmds) {
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("# generated") == std::string::npos);
  }
  // default mode stamps a timestamp comment
  CHECK(run_cli("blocks --k 2 --t 1/2").output.find("# generated") != std::string::npos);
}

TEST_CASE("JSON matrix output round-trips to the exact matrix") {
  const RunResult r = run_cli("matrix --m 3 --t 1/2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["h"] == "20/9");
  CHECK(doc["h_factored"] == true);
  REQUIRE(doc["dim"] == 16);

  const OperatorMatrix expected = assemble_full(3, RossiParam(Rational(1, 2)));
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const auto& cell = doc["entries"][i][j];
      const ComplexRational parsed{rational_from_string(cell[0].get<std::string>()),
                                   rational_from_string(cell[1].get<std::string>())};
      CHECK(parsed == expected.at(i, j));
    }
}

TEST_CASE("eigenvalue listing carries h and multiplicities") {
  const RunResult r = run_cli("eigs --k 2 --t 1/2 --no-header");
  REQUIRE(r.exit_code == 0);
  const auto lines = data_lines(r.output);
  REQUIRE(lines.size() == 5);  // schema line + four distinct eigenvalues
  CHECK(lines[0] == "value,multiplicity");

  const auto comma = lines[1].find(',');
  const double smallest = std::strtod(lines[1].substr(0, comma).c_str(), nullptr);
  CHECK(smallest == doctest::Approx(0.23166375318979835).epsilon(1e-10));
  CHECK(lines[1].substr(comma + 1) == "4");

  // the exact route must agree with the chain route
  const RunResult exact = run_cli("eigs --m 3 --t 1/2 --mode exact --no-header");
  REQUIRE(exact.exit_code == 0);
  const auto exact_lines = data_lines(exact.output);
  REQUIRE(exact_lines.size() == 5);
  for (int i = 1; i <= 4; ++i) {
    const double a = std::strtod(lines[i].c_str(), nullptr);
    const double b = std::strtod(exact_lines[i].c_str(), nullptr);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
  }
}

TEST_CASE("bound and sweep report a healthy chain") {
  const RunResult r = run_cli("bound --k 5 --t 1/2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["chain_ok"] == true);
  CHECK(doc["definite"] == true);
  CHECK(doc["lambda_min"].get<double>() <= doc["det_ratio"].get<double>() + 1e-12);

  const RunResult even = run_cli("sweep --kmax 1 --t-grid 0.5:0.5:0.1 --parity even");
  REQUIRE(even.exit_code == 0);
  CHECK(even.output.find("even") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "/tmp/kohn_cli_out_" + std::to_string(getpid()) + ".csv";
  const RunResult r = run_cli("sweep --kmax 2 --t-grid 0.2:0.4:0.2 --out " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  CHECK(std::getline(in, line));
  in.close();
  std::remove(path.c_str());
}
