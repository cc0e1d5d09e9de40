#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wzlab/rational.hpp"
#include "wzlab/residue.hpp"

namespace wzlab {

/// term(k+1) / term(k) written as a product of machine-integer factors.
struct RatioFactors {
  std::vector<i64> num;
  std::vector<i64> den;

  void clear() {
    num.clear();
    den.clear();
  }
};

/// A sum of terms generated by multiplicative recursion.
///
/// The hypergeometric part starts at `first` for index `start` and steps with
/// `ratio`. When `harmonic_order` is nonzero each term is additionally
/// weighted by H_k^{(harmonic_order)}. Specs are cheap to build and may
/// capture a prime when the summand depends on it.
struct SeriesSpec {
  std::string name;
  unsigned start = 0;
  Rat first = 1;
  std::function<void(i64 k, RatioFactors& out)> ratio;
  unsigned harmonic_order = 0;
};

Rat term_exact(const SeriesSpec& spec, unsigned k);

/// sum_{k=start}^{upper} term(k). With `integrality_prime` set every term is
/// checked to be p-integral (NonPIntegral otherwise).
Rat partial_sum_exact(const SeriesSpec& spec, unsigned upper, std::optional<u64> integrality_prime = std::nullopt);

/// Same sum reduced mod p^e in O(upper) modular operations.
Residue partial_sum_mod(const SeriesSpec& spec, unsigned upper, u64 p, unsigned e);

/// Single term mod p^e via the same recursion.
Residue term_mod(const SeriesSpec& spec, unsigned k, u64 p, unsigned e);

// Registered series ---------------------------------------------------------

/// (3k-1) (-1/2)_k^2 (1/2)_k 4^k / k!^3
SeriesSpec main_series();
Rat main_term(unsigned k);

/// (-1)^k (4k+1) (1/2)_k^3 / k!^3
SeriesSpec alternating_quartic_series();
/// (3k+1) (1/2)_k^3 4^k / k!^3
SeriesSpec cubic_four_series();
/// C(2k,k)^2 / 16^k
SeriesSpec central_binomial_squared_series();
/// C(2k,k) / k, from k = 1
SeriesSpec central_binomial_over_k_series();
/// C(2k,k) / k^2, from k = 1
SeriesSpec central_binomial_over_k2_series();
/// C(2k,k) H_k / k, from k = 1
SeriesSpec central_binomial_harmonic_series();
/// 1 / k^order, from k = 1 (partial sums are H_n^{(order)})
SeriesSpec inverse_power_series(unsigned order);
/// (-1)^k / k^2, from k = 1
SeriesSpec alternating_inverse_square_series();
/// Sequence C(n, j) in j, for fixed n. Its term at j = (p-1)/2 with n = p-1
/// is the middle binomial coefficient of Morley's congruence.
SeriesSpec binomial_row_series(i64 n);

/// True iff v_p(main_term(k)) >= 3 for (p+3)/2 <= k <= p-1.
bool tail_vanishing_check(u64 p);

struct TailComparison {
  bool tail_vanishes;
  bool agree_mod_p3;
  bool agree_mod_p4;
};

/// Compares the main partial sums to (p+1)/2 and to p-1.
TailComparison compare_main_partial_sums(u64 p);

}  // namespace wzlab
