#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wzlab/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wzlab");
  std::ostringstream out, err;
  int status = wzlab::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "wzlab_cli_test";
  fs::create_directories(dir);
  return dir;
}

const std::string kCertDir = std::string(WZLAB_SOURCE_DIR) + "/docs/certificates/";

}  // namespace

TEST_CASE("verify-wz") {
  Run r = run({"verify-wz"});
  CHECK(r.status == 0);
  CHECK(r.out.find("symbolic: PASS") != std::string::npos);
  CHECK(r.out.find("0..50 x 0..50") != std::string::npos);
  CHECK(run({"verify-wz", "--grid", "10"}).status == 0);
  CHECK(run({"verify-wz", "--cert", kCertDir + "builtin.cert", "--grid", "10"}).status == 0);
  CHECK(run({"verify-wz", "--cert", kCertDir + "ratios_only.cert", "--grid", "10"}).status == 0);

  Run m = run({"verify-wz", "--mutants", "--grid", "5"});
  CHECK(m.status == 0);
  CHECK(m.out.find("ACCEPTED") == std::string::npos);

  fs::path mutated = scratch_dir() / "mutated.cert";
  std::string text = slurp(kCertDir + "builtin.cert");
  auto at = text.find("Q.num = 4*n^3");
  REQUIRE(at != std::string::npos);
  text.replace(at, 13, "Q.num = 5*n^3");
  std::ofstream(mutated) << text;
  Run bad = run({"verify-wz", "--cert", mutated.string(), "--grid", "10"});
  CHECK(bad.status == 1);
  CHECK(bad.out.find("residual") != std::string::npos);
  CHECK(bad.out.find("FAIL at (n, k) = (0, 0)") != std::string::npos);

  fs::path garbage = scratch_dir() / "garbage.cert";
  std::ofstream(garbage) << "P.num = 6*n^^2\n";
  CHECK(run({"verify-wz", "--cert", garbage.string()}).status == 2);
  CHECK(run({"verify-wz", "--cert", (scratch_dir() / "missing.cert").string()}).status == 2);
}

TEST_CASE("scan exit statuses") {
  CHECK(run({"scan", "--claims", "all", "--primes", "5..199"}).status == 0);
  CHECK(run({"scan", "--claims", "thm1", "--primes", "4..4"}).status == 2);
  CHECK(run({"scan", "--claims", "thm1", "--prime", "3"}).status == 2);
  CHECK(run({"scan", "--claims", "guo_schlosser", "--prime", "3"}).status == 0);
  CHECK(run({"scan", "--claims", "nope"}).status == 2);
  CHECK(run({"scan", "--primes", "9..5"}).status == 2);
  CHECK(run({"scan", "--primes", "5-9"}).status == 2);
  CHECK(run({"scan", "--prime", "5", "--primes", "5..7"}).status == 2);
  CHECK(run({"scan", "--format", "xml"}).status == 2);
  CHECK(run({"scan", "--exact-only", "--cross-check"}).status == 2);
  CHECK(run({"scan", "--workers", "0"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"--help"}).status == 0);

  Run over = run({"scan", "--claims", "thm1", "--primes", "5..97", "--exponent", "5", "--format", "csv"});
  CHECK(over.status == 1);
  CHECK(over.out.find(",false,") != std::string::npos);
}

TEST_CASE("scan writes reports") {
  fs::path out = scratch_dir() / "thm.json";
  Run r = run({"scan", "--claims", "thm1,thm2", "--primes", "5..499", "--format", "json", "-o", out.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["summary"]["verdicts"] == 2 * 93);
  CHECK(j["summary"]["failures"] == 0);
  CHECK(j["run"]["claims"].size() == 2);

  Run exact = run({"scan", "--claims", "sun11", "--primes", "5..50", "--exact-only", "--format", "json"});
  CHECK(exact.status == 0);
  CHECK(nlohmann::json::parse(exact.out)["run"]["path"] == "exact");
  Run cross = run({"scan", "--claims", "lemma25_e", "--primes", "5..50", "--cross-check", "--format", "csv"});
  CHECK(cross.status == 0);
  CHECK(cross.out.find("exact_lhs,paths_agree") != std::string::npos);
  Run human = run({"scan", "--claims", "morley", "--prime", "5", "-v"});
  CHECK(human.out.find("lhs=6 rhs=6") != std::string::npos);
}

TEST_CASE("scan output is identical across worker counts") {
  fs::path a = scratch_dir() / "w1.json", b = scratch_dir() / "w8.json";
  CHECK(run({"scan", "--primes", "5..199", "--format", "json", "--workers", "1", "-o", a.string()}).status == 0);
  CHECK(run({"scan", "--primes", "5..199", "--format", "json", "--workers", "8", "-o", b.string()}).status == 0);
  CHECK(slurp(a) == slurp(b));

  ::setenv("WZLAB_WORKERS", "6", 1);
  fs::path c = scratch_dir() / "env.json";
  CHECK(run({"scan", "--primes", "5..199", "--format", "json", "-o", c.string()}).status == 0);
  ::unsetenv("WZLAB_WORKERS");
  CHECK(slurp(a) == slurp(c));
}

TEST_CASE("proof-steps") {
  Run one = run({"proof-steps", "--prime", "5"});
  CHECK(one.status == 0);
  CHECK(one.out.find("F_full_column p=5 mod p^4: lhs=5 rhs=5") != std::string::npos);
  CHECK(run({"proof-steps", "--primes", "5..97", "--workers", "4"}).status == 0);
  CHECK(run({"proof-steps", "--prime", "2"}).status == 2);
  CHECK(run({"proof-steps", "--prime", "3"}).status == 2);
  CHECK(run({"proof-steps", "--prime", "9"}).status == 2);
  CHECK(run({"proof-steps"}).status == 2);
  CHECK(run({"proof-steps", "--primes", "4..4"}).status == 2);
  Run j = run({"proof-steps", "--prime", "7", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["run"]["command"] == "proof-steps");
}
