#include "wzlab/sequences.hpp"

#include <stdexcept>
#include <string>

#include "wzlab/detail/build_once_cache.hpp"
#include "wzlab/errors.hpp"

namespace wzlab {
namespace {

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Factorials and inverse factorials 0..n modulo a prime p > n.
struct FactorialTables {
  FactorialTables(u64 p, unsigned n) : p(p), fact(n + 1), inv_fact(n + 1) {
    fact[0] = 1;
    for (unsigned i = 1; i <= n; ++i) fact[i] = mul_mod(fact[i - 1], i, p);
    inv_fact[n] = mod_inverse(static_cast<i64>(fact[n]), p);
    for (unsigned i = n; i > 0; --i) inv_fact[i - 1] = mul_mod(inv_fact[i], i, p);
  }

  u64 binomial(unsigned n, unsigned k) const { return mul_mod(mul_mod(fact[n], inv_fact[k], p), inv_fact[n - k], p); }

  u64 p;
  std::vector<u64> fact;
  std::vector<u64> inv_fact;
};

std::vector<u64> build_euler_mod(u64 p) {
  const unsigned top = static_cast<unsigned>(p - 3);
  FactorialTables f(p, top);
  std::vector<u64> e(top + 1, 0);
  e[0] = 1;
  for (unsigned n = 1; 2 * n <= top; ++n) {
    u64 acc = 0;
    for (unsigned j = 0; j < n; ++j) acc = (acc + mul_mod(f.binomial(2 * n, 2 * j), e[2 * j], p)) % p;
    e[2 * n] = acc == 0 ? 0 : p - acc;
  }
  return e;
}

detail::BuildOnceCache<u64, std::vector<u64>>& euler_cache() {
  static detail::BuildOnceCache<u64, std::vector<u64>> cache;
  return cache;
}

detail::BuildOnceCache<u64, BernoulliModTable>& bernoulli_cache() {
  static detail::BuildOnceCache<u64, BernoulliModTable> cache;
  return cache;
}

}  // namespace

EulerTable euler_numbers(unsigned bound) {
  std::vector<Int> e(bound + 1, 0);
  e[0] = 1;
  for (unsigned n = 1; 2 * n <= bound; ++n) {
    Int acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += binomial(2 * n, 2 * j) * e[2 * j];
    e[2 * n] = -acc;
  }
  return EulerTable(std::move(e));
}

Residue euler_mod(u64 p, unsigned idx) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("euler_mod: p must be an odd prime");
  if (idx % 2 != 0 || idx + 3 > p) {
    throw std::out_of_range("euler_mod: index " + std::to_string(idx) + " must be even and <= p-3");
  }
  auto table = euler_cache().get(p, [p] { return build_euler_mod(p); });
  return Residue(p, 1, static_cast<i64>((*table)[idx]));
}

std::vector<Rat> bernoulli_numbers(unsigned bound) {
  std::vector<Rat> b(bound + 1);
  b[0] = 1;
  if (bound >= 1) b[1] = Rat(-1, 2);
  for (unsigned m = 2; m <= bound; ++m) {
    if (m % 2 == 1) continue;
    Rat acc;
    for (unsigned j = 0; j < m; ++j) {
      if (!b[j].is_zero()) acc += Rat(binomial(m + 1, j)) * b[j];
    }
    b[m] = -acc / Rat(static_cast<long>(m + 1));
  }
  return b;
}

BernoulliModTable::BernoulliModTable(u64 p) : p_(p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("BernoulliModTable: p must be an odd prime");
  const unsigned top = static_cast<unsigned>(p - 2);
  FactorialTables f(p, top + 1);
  entries_.assign(top + 1, 0);
  entries_[0] = 1;
  if (top >= 1) entries_[1] = p - mod_inverse(2, p);
  for (unsigned m = 2; m <= top; m += 2) {
    u64 acc = 0;
    for (unsigned j = 0; j < m; ++j) {
      if (entries_[j] != 0) acc = (acc + mul_mod(f.binomial(m + 1, j), entries_[j], p)) % p;
    }
    u64 b = mul_mod(acc, mod_inverse(static_cast<i64>(m + 1), p), p);
    entries_[m] = b == 0 ? 0 : p - b;
  }
}

Residue BernoulliModTable::at(unsigned n) const {
  if (n >= entries_.size()) {
    throw std::out_of_range("Bernoulli index " + std::to_string(n) + " exceeds p-2 for p = " + std::to_string(p_));
  }
  return Residue(p_, 1, static_cast<i64>(entries_[n]));
}

std::shared_ptr<const BernoulliModTable> bernoulli_mod_table(u64 p) {
  return bernoulli_cache().get(p, [p] { return BernoulliModTable(p); });
}

Residue bernoulli_poly_mod(u64 p, unsigned n, const Rat& x) {
  if (n + 2 > p) {
    throw std::out_of_range("bernoulli_poly_mod: index " + std::to_string(n) + " exceeds p-2 for p = " +
                            std::to_string(p));
  }
  Residue xr = reduce_mod(x, p, 1);
  auto table = bernoulli_mod_table(p);
  Residue acc = Residue::zero(p, 1);
  for (unsigned k = 0; k <= n; ++k) {
    Residue c(p, 1, binomial(n, k));
    acc += c * table->at(k) * xr.pow(n - k);
  }
  return acc;
}

Rat harmonic(unsigned n, unsigned order) {
  if (order == 0) throw std::invalid_argument("harmonic: order must be >= 1");
  Rat acc;
  for (unsigned k = 1; k <= n; ++k) {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), k, order);
    acc += Rat(Int(1), d);
  }
  return acc;
}

HarmonicStream::HarmonicStream(u64 p, unsigned e, unsigned order)
    : p_(p), e_(e), order_(order), value_(Residue::zero(p, e)) {
  if (order == 0) throw std::invalid_argument("HarmonicStream: order must be >= 1");
}

const Residue& HarmonicStream::advance() {
  ++n_;
  if (n_ % p_ == 0) {
    throw NonPIntegral("harmonic term 1/" + std::to_string(n_) + " is not " + std::to_string(p_) + "-integral");
  }
  value_ += Residue(p_, e_, static_cast<i64>(n_)).inverse().pow(order_);
  return value_;
}

Rat pochhammer(const Rat& x, unsigned k) {
  Rat acc = 1;
  Rat factor = x;
  for (unsigned i = 0; i < k; ++i) {
    acc *= factor;
    factor += 1;
  }
  return acc;
}

Int central_binomial(unsigned k) { return binomial(2 * k, k); }

}  // namespace wzlab
