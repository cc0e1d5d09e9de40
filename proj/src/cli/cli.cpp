#include "wzlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "wzlab/errors.hpp"
#include "wzlab/number_theory.hpp"
#include "wzlab/report.hpp"
#include "wzlab/scan.hpp"
#include "wzlab/wz.hpp"

namespace wzlab::cli {
namespace {

enum class Format { Human, Json, Csv };

struct RunConfig {
  std::string claims = "all";
  std::string primes;
  std::optional<u64> prime;
  u64 lo = 5;
  u64 hi = 97;
  unsigned workers = 1;
  Format format = Format::Human;
  std::string output;
  std::string cert;
  unsigned grid = 50;
  bool exact_only = false;
  bool cross_check = false;
  bool timing = false;
  bool mutants = false;
  bool verbose = false;
  std::optional<unsigned> exponent;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_workers() {
  if (const char* env = std::getenv("WZLAB_WORKERS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

u64 parse_u64(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  }
  return std::stoull(s);
}

// Fills lo/hi from --prime or --primes lo..hi.
void resolve_range(RunConfig& cfg) {
  if (cfg.prime && !cfg.primes.empty()) throw UsageError("--prime and --primes are mutually exclusive");
  if (cfg.prime) {
    cfg.lo = cfg.hi = *cfg.prime;
  } else if (!cfg.primes.empty()) {
    auto dots = cfg.primes.find("..");
    if (dots == std::string::npos) throw UsageError("--primes expects <lo>..<hi>, got '" + cfg.primes + "'");
    cfg.lo = parse_u64(cfg.primes.substr(0, dots), "range start");
    cfg.hi = parse_u64(cfg.primes.substr(dots + 2), "range end");
  }
  if (cfg.lo > cfg.hi) throw UsageError("empty prime range " + std::to_string(cfg.lo) + ".." + std::to_string(cfg.hi));
  if (cfg.hi > 50000) throw UsageError("prime range limited to 50000 (moduli must fit in 63 bits)");
  if (cfg.workers < 1) throw UsageError("--workers must be >= 1");
}

void emit(const RunConfig& cfg, const Report& report, std::ostream& out) {
  ReportFormatOptions options{cfg.timing, cfg.verbose};
  std::string text;
  switch (cfg.format) {
    case Format::Json: text = report_json(report, options); break;
    case Format::Csv: text = report_csv(report, options); break;
    case Format::Human: text = report_human(report, options); break;
  }
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + cfg.output + "'");
  file << text;
}

int cmd_scan(RunConfig cfg, std::ostream& out, std::ostream& err) {
  resolve_range(cfg);
  if (cfg.exact_only && cfg.cross_check) throw UsageError("--exact-only and --cross-check are mutually exclusive");
  ScanConfig sc;
  try {
    sc.claim_ids = resolve_claim_ids(split_list(cfg.claims));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  sc.lo = cfg.lo;
  sc.hi = cfg.hi;
  sc.workers = cfg.workers;
  sc.exponent = cfg.exponent;
  sc.mode = cfg.cross_check ? PathMode::CrossCheck : cfg.exact_only ? PathMode::Exact : PathMode::Fast;
  if (sc.exponent && *sc.exponent < 1) throw UsageError("--exponent must be >= 1");
  Report report = scan(sc);
  if (report.verdicts.empty()) {
    throw UsageError("no admissible primes in " + std::to_string(cfg.lo) + ".." + std::to_string(cfg.hi) +
                     " for the selected claims (claims need p > 3)");
  }
  emit(cfg, report, out);
  if (!report.all_passed()) err << report.failures() << " verdict(s) failed\n";
  return report.all_passed() ? kAllPassed : kVerdictFailure;
}

int cmd_proof_steps(RunConfig cfg, std::ostream& out, std::ostream& err) {
  cfg.verbose = true;
  if (!cfg.prime && cfg.primes.empty()) throw UsageError("proof-steps needs --prime <p> or --primes <lo>..<hi>");
  resolve_range(cfg);
  if (cfg.prime && (*cfg.prime <= 3 || !is_prime(*cfg.prime))) {
    throw UsageError("proof-steps needs a prime p > 3, got " + std::to_string(*cfg.prime));
  }
  Report report = proof_step_report(cfg.lo, cfg.hi, cfg.workers);
  if (report.primes.empty()) {
    throw UsageError("no primes > 3 in " + std::to_string(cfg.lo) + ".." + std::to_string(cfg.hi));
  }
  emit(cfg, report, out);
  if (!report.all_passed()) err << report.failures() << " checkpoint(s) failed\n";
  return report.all_passed() ? kAllPassed : kVerdictFailure;
}

int cmd_verify_wz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.workers < 1) throw UsageError("--workers must be >= 1");
  Certificate cert = builtin_certificate();
  if (!cfg.cert.empty()) {
    try {
      cert = load_certificate(cfg.cert);
    } catch (const ParseError& e) {
      throw UsageError(std::string("malformed certificate: ") + e.what());
    } catch (const std::domain_error& e) {
      throw UsageError(std::string("malformed certificate: ") + e.what());
    }
  }
  using Clock = std::chrono::steady_clock;
  bool ok = true;

  auto t0 = Clock::now();
  try {
    SymbolicResult sym = verify_pair_symbolic(cert);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    if (sym.holds) {
      out << "symbolic: PASS (" << ms << " ms)\n";
    } else {
      ok = false;
      out << "symbolic: FAIL, residual numerator " << sym.residual.str() << "\n";
    }
  } catch (const ShiftRatioMismatch& e) {
    ok = false;
    out << "symbolic: FAIL, shift ratio mismatch: " << e.what() << "\n";
  }

  t0 = Clock::now();
  NumericResult num = verify_pair_numeric(cert, cfg.grid, cfg.grid, cfg.workers);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  if (num.holds) {
    out << "numeric: PASS on 0.." << cfg.grid << " x 0.." << cfg.grid << " (" << ms << " ms)\n";
  } else {
    ok = false;
    out << "numeric: FAIL at (n, k) = (" << num.witness->n << ", " << num.witness->k << "): " << num.witness->detail
        << "\n";
  }

  if (cfg.mutants) {
    unsigned caught = 0;
    auto mutants = coefficient_mutants(cert);
    for (const auto& m : mutants) {
      bool rejected = false;
      std::string why;
      try {
        SymbolicResult r = verify_pair_symbolic(m.cert);
        rejected = !r.holds;
        why = "residual " + r.residual.str();
      } catch (const ShiftRatioMismatch& e) {
        rejected = true;
        why = e.what();
      }
      caught += rejected ? 1 : 0;
      out << "mutant " << m.label << ": " << (rejected ? "rejected" : "ACCEPTED") << "\n";
    }
    out << "mutants: " << caught << "/" << mutants.size() << " rejected\n";
    if (caught != mutants.size()) ok = false;
  }
  if (!ok) err << "WZ verification failed\n";
  return ok ? kAllPassed : kVerdictFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of a WZ pair and the hypergeometric supercongruences it proves", "wzlab"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.workers = default_workers();

  const std::map<std::string, Format> formats{{"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads (default: $WZLAB_WORKERS or 1)");
    sub->add_option("--format", cfg.format, "Output format: human, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("-o,--output", cfg.output, "Write the report to this file");
    sub->add_flag("--timing", cfg.timing, "Include per-verdict microseconds in the report");
  };

  auto* scan_cmd = app.add_subcommand("scan", "Evaluate registered congruences over a prime range");
  add_common(scan_cmd);
  scan_cmd->add_option("--claims", cfg.claims, "Comma-separated claim ids, or 'all'");
  scan_cmd->add_option("--primes", cfg.primes, "Prime range <lo>..<hi>");
  scan_cmd->add_option("--prime", cfg.prime, "Single prime");
  scan_cmd->add_option("--exponent", cfg.exponent, "Check every claim modulo p^e instead of its stated modulus");
  scan_cmd->add_flag("--exact-only", cfg.exact_only, "Evaluate left sides with exact rationals only");
  scan_cmd->add_flag("--cross-check", cfg.cross_check, "Evaluate both paths and compare them");
  scan_cmd->add_flag("-v,--verbose", cfg.verbose, "Human format: list every verdict");

  auto* wz_cmd = app.add_subcommand("verify-wz", "Verify the WZ pair symbolically and on an integer grid");
  wz_cmd->add_option("--workers", cfg.workers, "Worker threads for the grid check");
  wz_cmd->add_option("--grid", cfg.grid, "Grid bound: checks 0..n x 0..n (default 50)");
  wz_cmd->add_option("--cert", cfg.cert, "Certificate file (default: built-in pair)");
  wz_cmd->add_flag("--mutants", cfg.mutants, "Also check that every single-coefficient mutant is rejected");

  auto* steps_cmd = app.add_subcommand("proof-steps", "Check the intermediate congruences of the proofs");
  add_common(steps_cmd);
  steps_cmd->add_option("--primes", cfg.primes, "Prime range <lo>..<hi>");
  steps_cmd->add_option("--prime", cfg.prime, "Single prime");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPassed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAllPassed;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (scan_cmd->parsed()) return cmd_scan(cfg, out, err);
    if (steps_cmd->parsed()) return cmd_proof_steps(cfg, out, err);
    return cmd_verify_wz(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace wzlab::cli
