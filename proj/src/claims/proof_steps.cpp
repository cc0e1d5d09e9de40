#include <stdexcept>

#include "wzlab/claims.hpp"
#include "wzlab/errors.hpp"
#include "wzlab/number_theory.hpp"
#include "wzlab/sequences.hpp"
#include "wzlab/series.hpp"
#include "wzlab/wz.hpp"

namespace wzlab {
namespace {

using Clock = std::chrono::steady_clock;

Rat int_pow(long base, unsigned e) { return pow(Rat(base), e); }

Rat factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

class StepRecorder {
 public:
  explicit StepRecorder(u64 p) : p_(p) {}

  // Congruence between an exact left side and a residue right side.
  void congruence(const std::string& id, unsigned e, const std::function<Rat()>& lhs,
                  const std::function<Residue(unsigned)>& rhs, std::string note = {}) {
    const auto start = Clock::now();
    Verdict v = blank(id, e);
    try {
      v.lhs = reduce_mod(lhs(), p_, e);
      v.rhs = rhs(e);
      v.holds = *v.lhs == *v.rhs;
      v.note = std::move(note);
    } catch (const std::exception& ex) {
      v.error = ex.what();
    }
    finish(v, start);
  }

  // Exact identity between two rationals; residues are reported mod p^e.
  void identity(const std::string& id, unsigned e, const std::function<std::pair<Rat, Rat>()>& sides) {
    const auto start = Clock::now();
    Verdict v = blank(id, e);
    try {
      auto [a, b] = sides();
      v.lhs = reduce_mod(a, p_, e);
      v.rhs = reduce_mod(b, p_, e);
      v.holds = a == b;
      v.note = "exact identity";
    } catch (const std::exception& ex) {
      v.error = ex.what();
    }
    finish(v, start);
  }

  void push(Verdict v) { out_.push_back(std::move(v)); }
  std::vector<Verdict> take() { return std::move(out_); }

 private:
  Verdict blank(const std::string& id, unsigned e) const {
    Verdict v;
    v.claim_id = id;
    v.prime = p_;
    v.exponent = e;
    return v;
  }

  void finish(Verdict& v, Clock::time_point start) {
    v.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    out_.push_back(std::move(v));
  }

  u64 p_;
  std::vector<Verdict> out_;
};

}  // namespace

const std::vector<ProofStep>& proof_steps() {
  // m = (p-1)/2, L = (-1)^{(p-1)/2}, q = q_p(2), E = E_{p-3}
  static const std::vector<ProofStep> steps = {
      {"telescoping_half", "sum_{n=0}^{m+1} (3n-1)(-1/2)_n^2(1/2)_n 4^n/n!^3 = -F(m+1,0) + sum_{k<m} G(m+1,k) - sum_{n<=m} F(n,m)", 4},
      {"boundary_poly_ratio", "(6(m+1)^2 - 5(m+1) + 1)/(p+1)^3 == p/2 - 3p^3/2 (mod p^4)", 4},
      {"boundary_F_binomial", "F(m+1,0) == -(2p-6p^3) C(p-1,m)^3/4^{p-1} (mod p^3)", 3},
      {"boundary_F", "F(m+1,0) == -L(2p - 6p^3 + 8p^2 q + 12p^3 q^2) (mod p^4)", 4},
      {"G_half_prefactor", "(p-2)^2 (-1/2)_m^2 (-1/2)_{m+1} 4^{m+1}/m!^3 == -2L(1 + 4pq + 6p^2 q^2) (mod p^3)", 3},
      {"shifted_pochhammer", "(1-p/2)_k == k!(1 - pH_k/2 + p^2(H_k^2 - H_k^{(2)})/8) (mod p^3), 1 <= k <= m", 3},
      {"G_half_sum", "sum_{k<m} G(m+1,k) == 2p - 2Lp - 8Lp^2 q - 12Lp^3 q^2 + 4Lp^3 E (mod p^4)", 4},
      {"F_half_column", "sum_{n<=m} F(n,m) == p + 2Lp^3 E (mod p^4)", 4},
      {"telescoping_full", "sum_{n=0}^{p-1} (3n-1)(-1/2)_n^2(1/2)_n 4^n/n!^3 = sum_{k<m} G(p,k) - sum_{n<p} F(n,m)", 4},
      {"minus_half_pochhammer_p", "(-1/2)_p == -p (p-1)!/(2^{2p-1}(2p-1)) (mod p^4)", 4},
      {"G_full_head", "sum_{k<m-1} G(p,k) == -2p^3 (mod p^4)", 4},
      {"G_full_last", "G(p,m-1) == 2p (mod p^4)", 4},
      {"G_full_sum", "sum_{k<m} G(p,k) == 2p - 2p^3 (mod p^4)", 4},
      {"F_full_column", "sum_{n<p} F(n,m) == p (mod p^4)", 4},
  };
  return steps;
}

std::vector<Verdict> proof_step_checks(u64 p) {
  if (p <= 3 || !is_prime(p)) {
    throw PredicateViolation("proof-step checkpoints need a prime p > 3, got " + std::to_string(p));
  }
  const long pl = static_cast<long>(p);
  const unsigned m = static_cast<unsigned>((p - 1) / 2);
  const Rat half(Int(1), Int(2));
  const int chi = legendre_symbol(-1L, p);
  const Int q = fermat_quotient_2(p);
  const i64 euler = static_cast<i64>(euler_mod(p, static_cast<unsigned>(p - 3)).value());

  // Residue-side building blocks in Z/p^e.
  auto R = [p](unsigned e, const Int& v) { return Residue(p, e, v); };
  auto P = [p](unsigned e, unsigned k) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), p, k);
    return Residue(p, e, v);
  };

  const HalfRangeDecomposition half_range = telescoping_decomposition_1(p);
  const FullRangeDecomposition full_range = telescoping_decomposition_2(p);

  StepRecorder rec(p);

  rec.identity("telescoping_half", 4, [&] {
    return std::pair(partial_sum_exact(main_series(), m + 1), half_range.total());
  });

  rec.congruence(
      "boundary_poly_ratio", 4,
      [&] {
        long a = (pl + 1) / 2;
        return Rat(6 * a * a - 5 * a + 1) / int_pow(pl + 1, 3);
      },
      [&](unsigned e) { return R(e, Int(pl)) * R(e, 2).inverse() - R(e, 3) * P(e, 3) * R(e, 2).inverse(); });

  rec.congruence(
      "boundary_F_binomial", 3, [&] { return half_range.boundary_F; },
      [&](unsigned e) {
        Int c;
        mpz_bin_uiui(c.get_mpz_t(), p - 1, m);
        Rat v = Rat(Int(-(2 * pl - 6 * pl * pl * pl))) * pow(Rat(c), 3) / int_pow(4, static_cast<unsigned>(p - 1));
        return reduce_mod(v, p, e);
      });

  rec.congruence(
      "boundary_F", 4, [&] { return half_range.boundary_F; },
      [&](unsigned e) {
        Residue qq = R(e, q);
        Residue inner = R(e, 2 * pl) - R(e, 6) * P(e, 3) + R(e, 8) * P(e, 2) * qq + R(e, 12) * P(e, 3) * qq * qq;
        return R(e, -chi) * inner;
      });

  rec.congruence(
      "G_half_prefactor", 3,
      [&] {
        Rat a = pochhammer(-half, m);
        return Rat((pl - 2) * (pl - 2)) * a * a * pochhammer(-half, m + 1) * int_pow(4, m + 1) / pow(factorial(m), 3);
      },
      [&](unsigned e) {
        Residue qq = R(e, q);
        return R(e, -2 * chi) * (R(e, 1) + R(e, 4) * P(e, 1) * qq + R(e, 6) * P(e, 2) * qq * qq);
      });

  {
    // (1 - p/2)_k against its second-order expansion, for every k <= (p-1)/2.
    const auto start = Clock::now();
    Verdict v;
    v.claim_id = "shifted_pochhammer";
    v.prime = p;
    v.exponent = 3;
    v.holds = true;
    unsigned k = 1;
    for (; k <= m; ++k) {
      Rat h1 = harmonic(k, 1), h2 = harmonic(k, 2);
      Rat pr(pl);
      Rat lhs = pochhammer(Rat(1) - pr * half, k);
      Rat rhs = factorial(k) * (Rat(1) - pr * half * h1 + pr * pr / Rat(8) * (h1 * h1 - h2));
      v.lhs = reduce_mod(lhs, p, 3);
      v.rhs = reduce_mod(rhs, p, 3);
      if (!(*v.lhs == *v.rhs)) {
        v.holds = false;
        break;
      }
    }
    v.note = v.holds ? "k = 1.." + std::to_string(m) : "first failure at k = " + std::to_string(k);
    v.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    rec.push(std::move(v));
  }

  rec.congruence(
      "G_half_sum", 4, [&] { return half_range.g_sum; },
      [&](unsigned e) {
        Residue qq = R(e, q), E = R(e, Int(static_cast<long>(euler))), L = R(e, chi);
        return R(e, 2 * pl) - R(e, 2) * L * P(e, 1) - R(e, 8) * L * P(e, 2) * qq - R(e, 12) * L * P(e, 3) * qq * qq +
               R(e, 4) * L * P(e, 3) * E;
      });

  rec.congruence(
      "F_half_column", 4, [&] { return half_range.f_sum; },
      [&](unsigned e) {
        return R(e, pl) + R(e, 2 * chi) * P(e, 3) * R(e, Int(static_cast<long>(euler)));
      });

  rec.identity("telescoping_full", 4, [&] {
    return std::pair(partial_sum_exact(main_series(), static_cast<unsigned>(p - 1)), full_range.total());
  });

  rec.congruence(
      "minus_half_pochhammer_p", 4, [&] { return pochhammer(-half, static_cast<unsigned>(p)); },
      [&](unsigned e) {
        Rat v = Rat(-pl) * factorial(static_cast<unsigned>(p - 1)) /
                (int_pow(2, static_cast<unsigned>(2 * p - 1)) * Rat(2 * pl - 1));
        return reduce_mod(v, p, e);
      });

  rec.congruence(
      "G_full_head", 4,
      [&] {
        Rat s;
        for (unsigned k = 0; 2 * k + 5 <= p; ++k) s += eval_G(static_cast<unsigned>(p), k);
        return s;
      },
      [&](unsigned e) { return R(e, -2) * P(e, 3); });

  rec.congruence(
      "G_full_last", 4, [&] { return eval_G(static_cast<unsigned>(p), static_cast<unsigned>((p - 3) / 2)); },
      [&](unsigned e) { return R(e, 2 * pl); });

  rec.congruence(
      "G_full_sum", 4, [&] { return full_range.g_sum; },
      [&](unsigned e) { return R(e, 2 * pl) - R(e, 2) * P(e, 3); });

  rec.congruence(
      "F_full_column", 4, [&] { return full_range.f_sum; }, [&](unsigned e) { return R(e, pl); });

  return rec.take();
}

}  // namespace wzlab
