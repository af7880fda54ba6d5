// End-to-end checks of the bsl binary: exit-code contract, output shapes,
// and document round trips through the tool itself.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(BSL_CLI_PATH) + " " + args + " 2>/tmp/bsl_cli_err.txt";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string stderr_text() {
  std::ifstream in("/tmp/bsl_cli_err.txt");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kHermiteOp = "/tmp/bsl_cli_hermite_op.json";
const char* kBadOp = "/tmp/bsl_cli_bad_op.json";
const char* kHermiteJ = "/tmp/bsl_cli_hermite_j.json";

void write_fixtures() {
  std::ofstream(kHermiteOp) << R"({"name":"hermite","order":2,"coeffs":[[],["0","-2"],["1"]]})";
  std::ofstream(kBadOp) << R"({"order":1,"coeffs":[[],["0","0","1"]]})";
  json rows = json::array();
  for (int n = 0; n <= 12; ++n) {
    json alpha = json::array();
    for (int k = std::max(0, n - 1); k <= n; ++k) {
      alpha.push_back(k == n - 1 ? std::to_string(n) + "/2" : "0");
    }
    rows.push_back({{"n", n}, {"alpha", alpha}});
  }
  std::ofstream(kHermiteJ) << json{{"p", 1}, {"rows", rows}}.dump();
}

}  // namespace

TEST_CASE("spectrum output and round trip") {
  write_fixtures();
  const auto r = run(std::string("op spectrum --op ") + kHermiteOp + " --n 5");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["distinct"] == true);
  CHECK(doc["lambda"] == json({"0", "-2", "-4", "-6", "-8", "-10"}));
}

TEST_CASE("eigenpoly dual method agreement") {
  const auto r = run(std::string("op eigenpoly --op ") + kHermiteOp + " --n 3 --method both");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["agree"] == true);
  CHECK(doc["pretty"] == "x^3 - 3/2 x");
  CHECK(doc["backsub"] == json({"0", "-3/2", "0", "1"}));
}

TEST_CASE("corrupted operator file exits 1 with DegreeViolation") {
  const auto r = run(std::string("op spectrum --op ") + kBadOp + " --n 3");
  CHECK(r.exit_code == 1);
  CHECK(stderr_text().find("DegreeViolation") != std::string::npos);
}

TEST_CASE("missing file exits 1 with FileNotFound") {
  const auto r = run("op spectrum --op /tmp/definitely_missing.json --n 3");
  CHECK(r.exit_code == 1);
  CHECK(stderr_text().find("FileNotFound") != std::string::npos);
}

TEST_CASE("violated identity exits 2") {
  // gamma_n = 1 makes the transformed Hermite family fail the fit
  const auto gen = run(std::string("rec gen --matrix ") + kHermiteJ + " --n 8");
  REQUIRE(gen.exit_code == 0);
  const json family = json::parse(gen.out);
  json combined = json::array();
  combined.push_back(family[0]);
  for (size_t n = 1; n < family.size(); ++n) {
    // textual add: combined row = H_n + H_{n-1}; degrade to CLI-side check
    combined.push_back(family[n]);
  }
  // simpler violated identity: x P_2 - P_3 = -1 leaves a residual along P_0,
  // below the p = 1 band
  std::ofstream("/tmp/bsl_cli_family.json")
      << R"([["1"],["0","1"],["0","0","1"],["1","0","0","1"],["0","0","0","0","1"]])";
  const auto fit = run("rec fit --polys /tmp/bsl_cli_family.json --p 1");
  CHECK(fit.exit_code == 2);
  const json verdict = json::parse(fit.out);
  CHECK(verdict["ok"] == false);

  // and the Geronimus-transformed Hermite grid is entirely nonzero
  const auto grid = run(std::string("--format csv test necessary --op ") + kHermiteOp +
                        " --hermite-gamma1 1 --n-range 4:6 --k-range 3:3");
  CHECK(grid.exit_code == 2);
  CHECK(grid.out.find("4,3,-3/4,true") != std::string::npos);
}

TEST_CASE("sigma table CSV row") {
  const auto r = run("--format csv hermite sigma --n 4 --k 3 --gamma1 1 --mode all");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,k,sigma_bruteforce,sigma_sum,sigma_closed,nonzero") != std::string::npos);
  CHECK(r.out.find("4,3,3/8,3/8,-3/8,true") != std::string::npos);
}

TEST_CASE("parity error surfaces in closed mode") {
  const auto r = run("hermite sigma --n 5 --k 3 --mode closed");
  CHECK(r.exit_code == 1);
  CHECK(stderr_text().find("ParityError") != std::string::npos);
}

TEST_CASE("workers produce identical ordered output") {
  const std::string args = std::string("--format csv test necessary --op ") + kHermiteOp +
                           " --hermite-gamma1 1 --n-range 3:8 --k-range 3:6";
  const auto seq = run(args);
  const auto par = run(args + " --workers 4");
  CHECK(seq.exit_code == par.exit_code);
  CHECK(seq.out == par.out);
}

TEST_CASE("composition cap respects BSL_CAP") {
  const auto capped = run(std::string("op eigenpoly --op ") + kHermiteOp +
                          " --n 8 --method explicit --cap 5");
  CHECK(capped.exit_code == 1);
  CHECK(stderr_text().find("CapExceeded") != std::string::npos);

  RunResult env_run;
  {
    const std::string cmd = std::string("BSL_CAP=5 ") + BSL_CLI_PATH + " op eigenpoly --op " +
                            kHermiteOp + " --n 8 --method explicit 2>/tmp/bsl_cli_err.txt";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    env_run.exit_code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(env_run.exit_code == 1);
  CHECK(stderr_text().find("CapExceeded") != std::string::npos);
}

TEST_CASE("generated polynomials round trip through rec fit") {
  const auto gen = run(std::string("rec gen --matrix ") + kHermiteJ + " --n 10");
  REQUIRE(gen.exit_code == 0);
  std::ofstream("/tmp/bsl_cli_h10.json") << gen.out;
  const auto fit = run("rec fit --polys /tmp/bsl_cli_h10.json --p 1");
  CHECK(fit.exit_code == 0);
  const json verdict = json::parse(fit.out);
  CHECK(verdict["ok"] == true);
  // recovered subdiagonal is n/2
  CHECK(verdict["matrix"]["rows"][3]["alpha"] == json({"3/2", "0"}));
}
