#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wzlab/claims.hpp"

namespace wzlab {

struct ScanConfig {
  std::vector<std::string> claim_ids;  // empty selects every registered claim
  u64 lo = 5;
  u64 hi = 97;
  unsigned workers = 1;
  std::optional<unsigned> exponent;
  PathMode mode = PathMode::Fast;
};

struct ClaimSummary {
  std::string id;
  std::string statement;
  unsigned exponent = 0;
  unsigned passed = 0;
  unsigned failed = 0;
  unsigned skipped = 0;
};

/// Outcome of a batch run. Verdicts are ordered by (claim, prime) whatever
/// the execution schedule was.
struct Report {
  std::string command = "scan";
  std::vector<std::string> claim_ids;
  u64 lo = 0;
  u64 hi = 0;
  std::optional<unsigned> exponent;
  PathMode mode = PathMode::Fast;

  std::vector<u64> primes;
  std::vector<ClaimSummary> claims;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notices;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Resolves "all" and comma lists to registered ids; throws
/// std::invalid_argument naming the first unknown id.
std::vector<std::string> resolve_claim_ids(const std::vector<std::string>& requested);

/// Evaluates every selected claim at every admissible prime in [lo, hi].
/// Evaluator exceptions become failed verdicts carrying the message.
Report scan(const ScanConfig& config);

/// Proof-step checkpoints for every prime > 3 in [lo, hi].
Report proof_step_report(u64 lo, u64 hi, unsigned workers);

}  // namespace wzlab
