#include "wzlab/series.hpp"

#include <stdexcept>

#include "wzlab/errors.hpp"
#include "wzlab/sequences.hpp"

namespace wzlab {
namespace {

Rat ratio_value(const RatioFactors& f) {
  Int n = 1, d = 1;
  for (i64 x : f.num) n *= Int(static_cast<long>(x));
  for (i64 x : f.den) d *= Int(static_cast<long>(x));
  return Rat(n, d);
}

void check_spec(const SeriesSpec& spec) {
  if (!spec.ratio) throw std::invalid_argument("series '" + spec.name + "' has no term ratio");
}

void require_integral(const SeriesSpec& spec, const Rat& term, unsigned k, u64 p) {
  if (term.den_ref() % Int(p) == 0) {
    throw NonPIntegral("term " + std::to_string(k) + " of series '" + spec.name + "' (" + term.str() +
                       ") is not " + std::to_string(p) + "-integral");
  }
}

// Walks the hypergeometric part of the series, handing (k, term) to visit.
template <class Visit>
void walk_exact(const SeriesSpec& spec, unsigned upper, Visit&& visit) {
  check_spec(spec);
  RatioFactors f;
  Rat t = spec.first;
  for (unsigned k = spec.start; k <= upper; ++k) {
    visit(k, t);
    if (k == upper) break;
    f.clear();
    spec.ratio(static_cast<i64>(k), f);
    t *= ratio_value(f);
  }
}

// Term k of the modular walk: p^v * top / bottom with top and bottom units
// mod p^e, so the walk itself needs no inverses.
struct ModTerm {
  long v = 0;
  u64 top = 0;
  u64 bottom = 1;
  bool zero = false;
};

class ModWalk {
 public:
  ModWalk(u64 p, unsigned e) : p_(p), m_(prime_power(p, e)), p_inv_(inverse_mod_2_64(p)), p_limit_(~u64{0} / p) {
    powers_.push_back(1);
    for (unsigned i = 1; i < e; ++i) powers_.push_back(powers_.back() * p);
  }

  u64 modulus() const { return m_; }

  ModTerm first(const Rat& x, unsigned e) const {
    ModTerm t;
    if (x.is_zero()) {
      t.zero = true;
      return t;
    }
    ValuedResidue vr = ValuedResidue::from_rat(x, p_, e);
    t.v = vr.valuation();
    t.top = vr.unit();
    return t;
  }

  void scale(ModTerm& t, const RatioFactors& f) const {
    if (t.zero) return;
    for (i64 x : f.num) {
      if (x == 0) {
        t.zero = true;
        return;
      }
      t.top = mul_mod(t.top, split(x, t.v, +1), m_);
    }
    for (i64 x : f.den) {
      if (x == 0) throw std::domain_error("series term ratio has a zero denominator factor");
      t.bottom = mul_mod(t.bottom, split(x, t.v, -1), m_);
    }
  }

  // p^v * top reduced mod p^e; v must be nonnegative.
  u64 numerator(const ModTerm& t) const {
    if (t.zero || t.v >= static_cast<long>(powers_.size())) return 0;
    return mul_mod(t.top, powers_[static_cast<std::size_t>(t.v)], m_);
  }

  // Unit part of n, adding sign * v_p(n) to v.
  u64 split(i64 n, long& v, int sign) const {
    u64 mag = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    // For odd p, p | x iff x * p^{-1} mod 2^64 <= (2^64 - 1) / p, and the
    // product is then the exact quotient.
    for (u64 q = mag * p_inv_; q <= p_limit_; q = mag * p_inv_) {
      mag = q;
      v += sign;
    }
    u64 u = mag < m_ ? mag : mag % m_;
    return n < 0 ? m_ - u : u;
  }

 private:
  static u64 inverse_mod_2_64(u64 p) {
    u64 x = p;  // correct to 3 bits for odd p; each Newton step doubles that
    for (int i = 0; i < 5; ++i) x *= 2 - p * x;
    return x;
  }

  u64 p_;
  u64 m_;
  u64 p_inv_;
  u64 p_limit_;
  std::vector<u64> powers_;
};

template <class Visit>
void walk_mod(const SeriesSpec& spec, unsigned upper, const ModWalk& walk, unsigned e, Visit&& visit) {
  check_spec(spec);
  RatioFactors f;
  ModTerm t = walk.first(spec.first, e);
  for (unsigned k = spec.start; k <= upper; ++k) {
    visit(k, t);
    if (k == upper) break;
    f.clear();
    spec.ratio(static_cast<i64>(k), f);
    walk.scale(t, f);
  }
}

NonPIntegral non_integral_term(const SeriesSpec& spec, unsigned k, u64 p) {
  return NonPIntegral("term " + std::to_string(k) + " of series '" + spec.name + "' is not " + std::to_string(p) +
                      "-integral");
}

// Running H_k^{(order)} as a fraction num / den of units.
struct HarmonicFraction {
  u64 num = 0;
  u64 den = 1;

  void add_inverse_power(u64 k, unsigned order, u64 p, u64 m) {
    if (k % p == 0) {
      throw NonPIntegral("harmonic term 1/" + std::to_string(k) + " is not " + std::to_string(p) + "-integral");
    }
    u64 kp = pow_mod(k, order, m);
    num = (mul_mod(num, kp, m) + den) % m;
    den = mul_mod(den, kp, m);
  }
};

}  // namespace

Rat term_exact(const SeriesSpec& spec, unsigned k) {
  if (k < spec.start) throw std::out_of_range("term index below series start");
  Rat out;
  walk_exact(spec, k, [&](unsigned j, const Rat& t) {
    if (j == k) out = t;
  });
  if (spec.harmonic_order != 0) out *= harmonic(k, spec.harmonic_order);
  return out;
}

Rat partial_sum_exact(const SeriesSpec& spec, unsigned upper, std::optional<u64> integrality_prime) {
  Rat sum;
  if (upper < spec.start) return sum;
  Rat weight;
  if (spec.harmonic_order != 0) weight = harmonic(spec.start == 0 ? 0 : spec.start - 1, spec.harmonic_order);
  walk_exact(spec, upper, [&](unsigned k, const Rat& t) {
    Rat term = t;
    if (spec.harmonic_order != 0) {
      if (k > 0) {
        Int d;
        mpz_ui_pow_ui(d.get_mpz_t(), k, spec.harmonic_order);
        weight += Rat(Int(1), d);
      }
      term *= weight;
    }
    if (integrality_prime) require_integral(spec, term, k, *integrality_prime);
    sum += term;
  });
  return sum;
}

Residue partial_sum_mod(const SeriesSpec& spec, unsigned upper, u64 p, unsigned e) {
  Residue zero = Residue::zero(p, e);
  if (upper < spec.start) return zero;
  ModWalk walk(p, e);
  const u64 m = walk.modulus();
  HarmonicFraction weight;
  if (spec.harmonic_order != 0) {
    for (unsigned j = 1; j < spec.start; ++j) weight.add_inverse_power(j, spec.harmonic_order, p, m);
  }
  u64 sum_num = 0, sum_den = 1;
  walk_mod(spec, upper, walk, e, [&](unsigned k, const ModTerm& t) {
    if (!t.zero && t.v < 0) throw non_integral_term(spec, k, p);
    u64 num = walk.numerator(t);
    u64 den = t.bottom;
    if (spec.harmonic_order != 0) {
      if (k > 0) weight.add_inverse_power(k, spec.harmonic_order, p, m);
      num = mul_mod(num, weight.num, m);
      den = mul_mod(den, weight.den, m);
    }
    sum_num = (mul_mod(sum_num, den, m) + mul_mod(num, sum_den, m)) % m;
    sum_den = mul_mod(sum_den, den, m);
  });
  return Residue(p, e, static_cast<i64>(mul_mod(sum_num, mod_inverse(static_cast<i64>(sum_den), m), m)));
}

Residue term_mod(const SeriesSpec& spec, unsigned k, u64 p, unsigned e) {
  if (k < spec.start) throw std::out_of_range("term index below series start");
  ModWalk walk(p, e);
  const u64 m = walk.modulus();
  ModTerm out;
  walk_mod(spec, k, walk, e, [&](unsigned j, const ModTerm& t) {
    if (j == k) out = t;
  });
  if (!out.zero && out.v < 0) throw non_integral_term(spec, k, p);
  u64 num = walk.numerator(out);
  u64 den = out.bottom;
  if (spec.harmonic_order != 0) {
    HarmonicFraction h;
    for (unsigned j = 1; j <= k; ++j) h.add_inverse_power(j, spec.harmonic_order, p, m);
    num = mul_mod(num, h.num, m);
    den = mul_mod(den, h.den, m);
  }
  return Residue(p, e, static_cast<i64>(mul_mod(num, mod_inverse(static_cast<i64>(den), m), m)));
}

SeriesSpec main_series() {
  return {"main", 0, Rat(-1), [](i64 k, RatioFactors& f) {
            f.num = {3 * k + 2, 2 * k - 1, 2 * k - 1, 2 * k + 1};
            f.den = {3 * k - 1, 2, k + 1, k + 1, k + 1};
          }};
}

Rat main_term(unsigned k) { return term_exact(main_series(), k); }

SeriesSpec alternating_quartic_series() {
  return {"alternating_quartic", 0, Rat(1), [](i64 k, RatioFactors& f) {
            f.num = {-1, 4 * k + 5, 2 * k + 1, 2 * k + 1, 2 * k + 1};
            f.den = {4 * k + 1, 8, k + 1, k + 1, k + 1};
          }};
}

SeriesSpec cubic_four_series() {
  return {"cubic_four", 0, Rat(1), [](i64 k, RatioFactors& f) {
            f.num = {3 * k + 4, 2 * k + 1, 2 * k + 1, 2 * k + 1};
            f.den = {3 * k + 1, 2, k + 1, k + 1, k + 1};
          }};
}

SeriesSpec central_binomial_squared_series() {
  return {"central_binomial_squared", 0, Rat(1), [](i64 k, RatioFactors& f) {
            f.num = {2 * k + 1, 2 * k + 1};
            f.den = {4, k + 1, k + 1};
          }};
}

SeriesSpec central_binomial_over_k_series() {
  return {"central_binomial_over_k", 1, Rat(2), [](i64 k, RatioFactors& f) {
            f.num = {2, 2 * k + 1, k};
            f.den = {k + 1, k + 1};
          }};
}

SeriesSpec central_binomial_over_k2_series() {
  return {"central_binomial_over_k2", 1, Rat(2), [](i64 k, RatioFactors& f) {
            f.num = {2, 2 * k + 1, k, k};
            f.den = {k + 1, k + 1, k + 1};
          }};
}

SeriesSpec central_binomial_harmonic_series() {
  SeriesSpec s = central_binomial_over_k_series();
  s.name = "central_binomial_harmonic";
  s.harmonic_order = 1;
  return s;
}

SeriesSpec inverse_power_series(unsigned order) {
  return {"inverse_power_" + std::to_string(order), 1, Rat(1), [order](i64 k, RatioFactors& f) {
            f.num.assign(order, k);
            f.den.assign(order, k + 1);
          }};
}

SeriesSpec alternating_inverse_square_series() {
  return {"alternating_inverse_square", 1, Rat(-1), [](i64 k, RatioFactors& f) {
            f.num = {-1, k, k};
            f.den = {k + 1, k + 1};
          }};
}

SeriesSpec binomial_row_series(i64 n) {
  return {"binomial_row_" + std::to_string(n), 0, Rat(1), [n](i64 j, RatioFactors& f) {
            f.num = {n - j};
            f.den = {j + 1};
          }};
}

bool tail_vanishing_check(u64 p) {
  if (p <= 3) throw std::invalid_argument("tail_vanishing_check needs p > 3");
  const unsigned lo = static_cast<unsigned>((p + 3) / 2);
  const unsigned hi = static_cast<unsigned>(p - 1);
  bool ok = true;
  walk_exact(main_series(), hi, [&](unsigned k, const Rat& t) {
    if (k >= lo && padic_valuation(t, p) < 3) ok = false;
  });
  return ok;
}

TailComparison compare_main_partial_sums(u64 p) {
  const SeriesSpec spec = main_series();
  Rat short_sum = partial_sum_exact(spec, static_cast<unsigned>((p + 1) / 2), p);
  Rat long_sum = partial_sum_exact(spec, static_cast<unsigned>(p - 1), p);
  return {tail_vanishing_check(p), reduce_mod(short_sum, p, 3) == reduce_mod(long_sum, p, 3),
          reduce_mod(short_sum, p, 4) == reduce_mod(long_sum, p, 4)};
}

}  // namespace wzlab
