#include "wzlab/claims.hpp"

#include <stdexcept>

#include "wzlab/errors.hpp"
#include "wzlab/number_theory.hpp"
#include "wzlab/sequences.hpp"
#include "wzlab/series.hpp"

namespace wzlab {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

// Constants of Z/p^e used to assemble right-hand sides.
struct Ring {
  u64 p;
  unsigned e;

  Residue c(i64 v) const { return Residue(p, e, v); }
  Residue c(const Int& v) const { return Residue(p, e, v); }
  Residue frac(i64 a, i64 b) const { return c(a) * c(b).inverse(); }
  Residue p_pow(unsigned k) const {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), p, k);
    return c(v);
  }
  // (-1/p) = (-1)^{(p-1)/2}
  Residue chi() const { return c(static_cast<i64>(legendre_symbol(-1L, p))); }
  // (p/3)
  Residue chi3() const { return c(static_cast<i64>(legendre_symbol(Int(p), 3))); }
  // E_{p-3}, known mod p; every occurrence carries enough powers of p.
  Residue euler() const { return c(static_cast<i64>(euler_mod(p, static_cast<unsigned>(p - 3)).value())); }
  Residue fermat_q() const { return c(fermat_quotient_2(p)); }
  // B_{p-2}(1/3), known mod p.
  Residue bernoulli_third() const {
    return c(static_cast<i64>(bernoulli_poly_mod(p, static_cast<unsigned>(p - 2), Rat(Int(1), Int(3))).value()));
  }
};

using LhsFn = std::function<Residue(u64, unsigned, Path)>;
using RhsFn = std::function<Residue(u64, unsigned)>;

LhsFn series_sum(SeriesSpec (*make)(), unsigned (*upper)(u64)) {
  return [make, upper](u64 p, unsigned e, Path path) {
    const SeriesSpec spec = make();
    const unsigned top = upper(p);
    if (path == Path::Fast) return partial_sum_mod(spec, top, p, e);
    return reduce_mod(partial_sum_exact(spec, top, p), p, e);
  };
}

template <unsigned Order>
SeriesSpec inverse_power() {
  return inverse_power_series(Order);
}

unsigned half_up(u64 p) { return static_cast<unsigned>((p + 1) / 2); }
unsigned half_down(u64 p) { return static_cast<unsigned>((p - 1) / 2); }
unsigned full(u64 p) { return static_cast<unsigned>(p - 1); }
unsigned quarter(u64 p) { return static_cast<unsigned>(p / 4); }

Residue morley_lhs(u64 p, unsigned e, Path path) {
  const unsigned m = half_down(p);
  if (path == Path::Fast) return term_mod(binomial_row_series(static_cast<i64>(p - 1)), m, p, e);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), p - 1, m);
  return Residue(p, e, b);
}

Residue zero_rhs(u64 p, unsigned e) { return Residue::zero(p, e); }

std::vector<Claim> build_registry() {
  std::vector<Claim> r;
  auto add = [&](std::string id, std::string statement, unsigned e, LhsFn lhs, RhsFn rhs) {
    r.push_back(Claim{std::move(id), std::move(statement), 5, e, std::move(lhs), std::move(rhs)});
  };

  add("thm1",
      "sum_{k=0}^{(p+1)/2} (3k-1)(-1/2)_k^2(1/2)_k 4^k/k!^3 == p - 6p^3(-1/p) + 2p^3(-1/p)E_{p-3} (mod p^4)", 4,
      series_sum(main_series, half_up), [](u64 p, unsigned e) {
        Ring R{p, e};
        Residue p3 = R.p_pow(3);
        return R.c(static_cast<i64>(p)) - R.c(6) * p3 * R.chi() + R.c(2) * p3 * R.chi() * R.euler();
      });
  add("thm2", "sum_{k=0}^{p-1} (3k-1)(-1/2)_k^2(1/2)_k 4^k/k!^3 == p - 2p^3 (mod p^4)", 4,
      series_sum(main_series, full), [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.c(static_cast<i64>(p)) - R.c(2) * R.p_pow(3);
      });
  add("guo_schlosser", "sum_{k=0}^{(p+1)/2} (3k-1)(-1/2)_k^2(1/2)_k 4^k/k!^3 == p (mod p^3)", 3,
      series_sum(main_series, half_up), [](u64 p, unsigned e) { return Residue(p, e, static_cast<i64>(p)); });
  add("van_hamme", "sum_{k=0}^{(p-1)/2} (-1)^k(4k+1)(1/2)_k^3/k!^3 == p(-1/p) (mod p^3)", 3,
      series_sum(alternating_quartic_series, half_down), [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.c(static_cast<i64>(p)) * R.chi();
      });
  add("sun_refine", "sum_{k=0}^{(p-1)/2} (-1)^k(4k+1)(1/2)_k^3/k!^3 == p(-1/p) + p^3 E_{p-3} (mod p^4)", 4,
      series_sum(alternating_quartic_series, half_down), [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.c(static_cast<i64>(p)) * R.chi() + R.p_pow(3) * R.euler();
      });
  add("sun11", "sum_{k=0}^{(p-1)/2} (3k+1)(1/2)_k^3 4^k/k!^3 == p + 2p^3(-1/p)E_{p-3} (mod p^4)", 4,
      series_sum(cubic_four_series, half_down), [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.c(static_cast<i64>(p)) + R.c(2) * R.p_pow(3) * R.chi() * R.euler();
      });
  add("morley", "C(p-1,(p-1)/2) == (-1)^{(p-1)/2} 4^{p-1} (mod p^3)", 3, morley_lhs, [](u64 p, unsigned e) {
    Ring R{p, e};
    return R.chi() * R.c(4).pow(p - 1);
  });
  add("lemma23_a", "H_{p-1} == 0 (mod p^2)", 2, series_sum(inverse_power<1>, full), zero_rhs);
  add("lemma23_b", "H_{(p-1)/2} == -2q_p(2) + p q_p(2)^2 (mod p^2)", 2, series_sum(inverse_power<1>, half_down),
      [](u64 p, unsigned e) {
        Ring R{p, e};
        Residue q = R.fermat_q();
        return R.c(-2) * q + R.c(static_cast<i64>(p)) * q * q;
      });
  add("lemma23_c", "H^{(2)}_{p-1} == 0 (mod p)", 1, series_sum(inverse_power<2>, full), zero_rhs);
  add("lemma23_c_half", "H^{(2)}_{(p-1)/2} == 0 (mod p)", 1, series_sum(inverse_power<2>, half_down), zero_rhs);
  add("lemma23_d", "H^{(2)}_{floor(p/4)} == 4(-1)^{(p-1)/2} E_{p-3} (mod p)", 1, series_sum(inverse_power<2>, quarter),
      [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.c(4) * R.chi() * R.euler();
      });
  add("lemma24", "sum_{k=1}^{(p-1)/2} (-1)^k/k^2 == 2(-1)^{(p-1)/2} E_{p-3} (mod p)", 1,
      series_sum(alternating_inverse_square_series, half_down), [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.c(2) * R.chi() * R.euler();
      });
  add("lemma25_a", "sum_{k=0}^{(p-1)/2} C(2k,k)^2/16^k == (-1)^{(p-1)/2} + p^2 E_{p-3} (mod p^3)", 3,
      series_sum(central_binomial_squared_series, half_down), [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.chi() + R.p_pow(2) * R.euler();
      });
  add("lemma25_b", "sum_{k=1}^{p-1} C(2k,k)/k == 0 (mod p^2)", 2, series_sum(central_binomial_over_k_series, full),
      zero_rhs);
  add("lemma25_c", "sum_{k=1}^{(p-1)/2} C(2k,k)/k == (-1)^{(p+1)/2} (8/3) p E_{p-3} (mod p^2)", 2,
      series_sum(central_binomial_over_k_series, half_down), [](u64 p, unsigned e) {
        Ring R{p, e};
        return -R.chi() * R.frac(8, 3) * R.c(static_cast<i64>(p)) * R.euler();
      });
  add("lemma25_d", "sum_{k=1}^{p-1} C(2k,k)/k^2 == (1/2)(p/3) B_{p-2}(1/3) (mod p)", 1,
      series_sum(central_binomial_over_k2_series, full), [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.frac(1, 2) * R.chi3() * R.bernoulli_third();
      });
  add("lemma25_e", "sum_{k=1}^{p-1} C(2k,k) H_k/k == (1/3)(p/3) B_{p-2}(1/3) (mod p)", 1,
      series_sum(central_binomial_harmonic_series, full), [](u64 p, unsigned e) {
        Ring R{p, e};
        return R.frac(1, 3) * R.chi3() * R.bernoulli_third();
      });
  return r;
}

}  // namespace

std::string_view to_string(PathMode mode) {
  switch (mode) {
    case PathMode::Fast: return "fast";
    case PathMode::Exact: return "exact";
    case PathMode::CrossCheck: return "cross-check";
  }
  return "?";
}

bool Claim::admits(u64 p) const { return p >= min_prime && p % 2 == 1 && is_prime(p); }

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

const Claim* find_claim(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

Verdict evaluate_claim(std::string_view id, u64 p, const EvalOptions& options) {
  const Claim* claim = find_claim(id);
  if (!claim) throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
  return evaluate_claim(*claim, p, options);
}

Verdict evaluate_claim(const Claim& claim, u64 p, const EvalOptions& options) {
  if (!claim.admits(p)) {
    throw PredicateViolation("claim '" + claim.id + "' needs a prime p >= " + std::to_string(claim.min_prime) +
                             ", got " + std::to_string(p));
  }
  Verdict v;
  v.claim_id = claim.id;
  v.prime = p;
  v.exponent = options.exponent.value_or(claim.exponent);
  if (v.exponent < 1) throw std::invalid_argument("exponent must be >= 1");
  const auto start = Clock::now();
  switch (options.mode) {
    case PathMode::Fast:
      v.lhs = claim.lhs(p, v.exponent, Path::Fast);
      break;
    case PathMode::Exact:
      v.lhs = claim.lhs(p, v.exponent, Path::Exact);
      break;
    case PathMode::CrossCheck: {
      auto t = Clock::now();
      v.lhs = claim.lhs(p, v.exponent, Path::Fast);
      v.fast_elapsed = since(t);
      t = Clock::now();
      v.exact_lhs = claim.lhs(p, v.exponent, Path::Exact);
      v.exact_elapsed = since(t);
      v.paths_agree = *v.lhs == *v.exact_lhs;
      break;
    }
  }
  v.rhs = claim.rhs(p, v.exponent);
  v.holds = *v.lhs == *v.rhs;
  v.elapsed = since(start);
  return v;
}

Verdict guo_schlosser_p3_spot_check() {
  const auto start = Clock::now();
  Verdict v;
  v.claim_id = "guo_schlosser";
  v.prime = 3;
  v.exponent = 3;
  v.lhs = reduce_mod(partial_sum_exact(main_series(), 2, 3), 3, 3);
  v.rhs = Residue(3, 3, i64{3});
  v.holds = *v.lhs == *v.rhs;
  v.note = "p = 3 spot check";
  v.elapsed = since(start);
  return v;
}

SigmaResult evaluate_sigma_identities(unsigned n_max) {
  if (n_max < 1) throw std::invalid_argument("evaluate_sigma_identities needs n_max >= 1");
  // Shared prefix tables H_k, H_k^{(2)}, A_k for k <= n_max + 2.
  const unsigned top = n_max + 2;
  std::vector<Rat> h1(top + 1), h2(top + 1), alt(top + 1);
  for (unsigned k = 1; k <= top; ++k) {
    Rat inv(Int(1), Int(k));
    Rat inv2 = inv * inv;
    h1[k] = h1[k - 1] + inv;
    h2[k] = h2[k - 1] + inv2;
    alt[k] = alt[k - 1] + (k % 2 == 0 ? inv2 : -inv2);
  }
  std::vector<Rat> third(top + 1);
  SigmaResult result;
  for (unsigned n = 1; n <= top; ++n) {
    Rat s1, s2, s3;
    Rat c = 1;  // (-n)_k (1+n)_k / (1)_k^2 at k = 0
    for (unsigned k = 1; k <= n; ++k) {
      long kk = k;
      c *= Rat(Int((kk - 1 - static_cast<long>(n)) * (kk + static_cast<long>(n))), Int(kk * kk));
      s1 += c * h2[k];
      s2 += c * h1[k] * h1[k];
      s3 += c * h1[k];
    }
    third[n] = s3;
    if (n > n_max) continue;
    Rat sign = n % 2 == 0 ? Rat(1) : Rat(-1);
    int failed = 0;
    if (s1 != Rat(-2) * sign * alt[n]) {
      failed = 1;
    } else if (s2 != Rat(4) * sign * h1[n] * h1[n] + Rat(2) * sign * alt[n]) {
      failed = 2;
    } else if (s3 != Rat(2) * sign * h1[n]) {
      failed = 3;
    }
    if (failed != 0 && result.holds) {
      result = {false, failed, n};
    }
  }
  if (!result.holds) return result;
  for (unsigned n = 1; n + 2 <= n_max; ++n) {
    long nn = n;
    Rat lhs = Rat(1 + nn) * third[n] + Rat(3 + 2 * nn) * third[n + 1] + Rat(nn + 2) * third[n + 2];
    if (!lhs.is_zero()) return {false, 4, n};
  }
  return result;
}

}  // namespace wzlab
