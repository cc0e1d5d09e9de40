#include "wzlab/scan.hpp"

#include <algorithm>
#include <stdexcept>

#include "wzlab/number_theory.hpp"
#include "wzlab/parallel.hpp"

namespace wzlab {

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.ok(); }));
}

std::vector<std::string> resolve_claim_ids(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  const bool all = requested.empty() || std::find(requested.begin(), requested.end(), "all") != requested.end();
  if (all) {
    for (const auto& c : claim_registry()) out.push_back(c.id);
    return out;
  }
  for (const auto& id : requested) {
    if (!find_claim(id)) throw std::invalid_argument("unknown claim '" + id + "'");
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

Report scan(const ScanConfig& config) {
  Report report;
  report.claim_ids = resolve_claim_ids(config.claim_ids);
  report.lo = config.lo;
  report.hi = config.hi;
  report.exponent = config.exponent;
  report.mode = config.mode;
  report.primes = primes_in_range(config.lo, config.hi);

  struct Task {
    const Claim* claim;
    u64 prime;
    bool spot_check;
  };
  std::vector<Task> tasks;
  for (const auto& id : report.claim_ids) {
    const Claim* claim = find_claim(id);
    ClaimSummary summary{claim->id, claim->statement, config.exponent.value_or(claim->exponent), 0, 0, 0};
    for (u64 p : report.primes) {
      if (claim->admits(p)) {
        tasks.push_back({claim, p, false});
      } else if (claim->id == "guo_schlosser" && p == 3 && !config.exponent) {
        tasks.push_back({claim, p, true});
      } else {
        ++summary.skipped;
      }
    }
    if (summary.skipped > 0) {
      report.notices.push_back(id + ": skipped " + std::to_string(summary.skipped) + " prime(s) below " +
                               std::to_string(claim->min_prime));
    }
    report.claims.push_back(std::move(summary));
  }

  report.verdicts.resize(tasks.size());
  const EvalOptions options{config.exponent, config.mode};
  parallel_for(tasks.size(), config.workers, [&](std::size_t i) {
    const Task& t = tasks[i];
    Verdict& out = report.verdicts[i];
    try {
      out = t.spot_check ? guo_schlosser_p3_spot_check() : evaluate_claim(*t.claim, t.prime, options);
    } catch (const std::exception& ex) {
      out = Verdict{};
      out.claim_id = t.claim->id;
      out.prime = t.prime;
      out.exponent = options.exponent.value_or(t.claim->exponent);
      out.error = ex.what();
    }
  });

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& summary = *std::find_if(report.claims.begin(), report.claims.end(),
                                  [&](const ClaimSummary& s) { return s.id == tasks[i].claim->id; });
    (report.verdicts[i].ok() ? summary.passed : summary.failed) += 1;
  }
  return report;
}

Report proof_step_report(u64 lo, u64 hi, unsigned workers) {
  Report report;
  report.command = "proof-steps";
  report.lo = lo;
  report.hi = hi;
  report.mode = PathMode::Exact;
  for (u64 p : primes_in_range(lo, hi)) {
    if (p > 3) report.primes.push_back(p);
  }
  for (const auto& step : proof_steps()) {
    report.claim_ids.push_back(step.id);
    report.claims.push_back({step.id, step.statement, step.exponent, 0, 0, 0});
  }

  std::vector<std::vector<Verdict>> per_prime(report.primes.size());
  parallel_for(report.primes.size(), workers, [&](std::size_t i) { per_prime[i] = proof_step_checks(report.primes[i]); });

  // Reorder from (prime, step) to (step, prime).
  for (std::size_t s = 0; s < report.claims.size(); ++s) {
    for (auto& rows : per_prime) {
      Verdict& v = rows.at(s);
      (v.ok() ? report.claims[s].passed : report.claims[s].failed) += 1;
      report.verdicts.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace wzlab
