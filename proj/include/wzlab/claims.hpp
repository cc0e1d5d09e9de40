#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wzlab/residue.hpp"

namespace wzlab {

enum class Path { Fast, Exact };

enum class PathMode {
  Fast,        // modular recursion only
  Exact,       // exact rationals, reduced at the end
  CrossCheck,  // both; the verdict also records whether they agree
};

std::string_view to_string(PathMode mode);

/// A congruence lhs(p) == rhs(p) (mod p^exponent) for primes p >= min_prime.
struct Claim {
  std::string id;
  std::string statement;
  u64 min_prime = 5;
  unsigned exponent = 4;
  std::function<Residue(u64 p, unsigned e, Path path)> lhs;
  std::function<Residue(u64 p, unsigned e)> rhs;

  bool admits(u64 p) const;
};

struct Verdict {
  std::string claim_id;
  u64 prime = 0;
  unsigned exponent = 0;
  bool holds = false;
  std::optional<Residue> lhs;  // fast value in cross-check mode
  std::optional<Residue> rhs;
  std::chrono::microseconds elapsed{0};

  // Cross-check mode only.
  std::optional<Residue> exact_lhs;
  bool paths_agree = true;
  std::chrono::microseconds exact_elapsed{0};
  std::chrono::microseconds fast_elapsed{0};

  std::string note;   // extra context, e.g. the index range a checkpoint covered
  std::string error;  // evaluator failure; holds is false when set

  bool ok() const { return holds && paths_agree && error.empty(); }
};

struct EvalOptions {
  std::optional<unsigned> exponent;  // overrides the claim's stated exponent
  PathMode mode = PathMode::Fast;
};

/// Every registered claim, in a fixed order.
const std::vector<Claim>& claim_registry();
/// nullptr when the id is unknown.
const Claim* find_claim(std::string_view id);

/// Throws std::invalid_argument for unknown ids and PredicateViolation when
/// the prime is not admissible.
Verdict evaluate_claim(std::string_view id, u64 p, const EvalOptions& options = {});
Verdict evaluate_claim(const Claim& claim, u64 p, const EvalOptions& options = {});

/// The main sum up to (p+1)/2 is congruent to p mod p^3 also for p = 3.
Verdict guo_schlosser_p3_spot_check();

struct SigmaResult {
  bool holds = true;
  int failing_identity = 0;  // 1..3 for the three sums, 4 for the recurrence
  unsigned failing_n = 0;
};

/// Checks, for 1 <= n <= n_max, with c_k = (-n)_k (1+n)_k / k!^2 and
/// A_n = sum_{k<=n} (-1)^k / k^2:
///   sum c_k H_k^{(2)} = -2 (-1)^n A_n
///   sum c_k H_k^2     = 4 (-1)^n H_n^2 + 2 (-1)^n A_n
///   sum c_k H_k       = 2 (-1)^n H_n
/// and (1+n) S_n + (3+2n) S_{n+1} + (n+2) S_{n+2} = 0 for the last sum S.
SigmaResult evaluate_sigma_identities(unsigned n_max);

/// Intermediate congruences of the main proofs at one prime p > 3, each as
/// an exact left side reduced against its closed-form right side.
std::vector<Verdict> proof_step_checks(u64 p);

struct ProofStep {
  std::string id;
  std::string statement;
  unsigned exponent;
};

/// Checkpoints produced by proof_step_checks, in output order.
const std::vector<ProofStep>& proof_steps();

}  // namespace wzlab
