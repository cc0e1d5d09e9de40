#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "wzlab/rational.hpp"

namespace wzlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Valuation of zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// p^e, rejecting moduli that do not fit in 63 bits (products are taken in 128 bits).
u64 prime_power(u64 p, unsigned e);

/// a*b mod m through a 128-bit product.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  if (a >= m) a %= m;
  if (b >= m) b %= m;
#if defined(__x86_64__) && defined(__GNUC__)
  // a, b < m keeps the quotient below 2^64, so one divq does the reduction.
  u64 hi, lo, q, r;
  __asm__("mulq %3" : "=a"(lo), "=d"(hi) : "a"(a), "rm"(b));
  __asm__("divq %4" : "=a"(q), "=d"(r) : "a"(lo), "d"(hi), "rm"(m));
  (void)q;
  return r;
#else
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
#endif
}
u64 pow_mod(u64 base, u64 exponent, u64 m);

/// Inverse of a modulo m = p^e, in (0, m). Throws NotInvertible when gcd(a, m) != 1.
u64 mod_inverse(const Int& a, u64 m);
u64 mod_inverse(i64 a, u64 m);

/// v_p(x); kInfiniteValuation for zero.
long padic_valuation(const Int& x, u64 p);
long padic_valuation(const Rat& x, u64 p);

/// Element of Z/p^e for an odd prime p and 1 <= e.
///
/// The pair (p, e) travels with the value; mixing residues of different
/// rings throws ModulusMismatch.
class Residue {
 public:
  Residue(u64 p, unsigned e, const Int& value);
  Residue(u64 p, unsigned e, i64 value);

  static Residue zero(u64 p, unsigned e) { return Residue(p, e, i64{0}); }
  static Residue one(u64 p, unsigned e) { return Residue(p, e, i64{1}); }

  u64 prime() const { return p_; }
  unsigned exponent() const { return e_; }
  u64 modulus() const { return m_; }
  u64 value() const { return v_; }

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  Residue operator-() const;

  Residue inverse() const;
  Residue pow(u64 exponent) const;

  /// Canonical representative in [0, p^e) read in Z/p^target.
  Residue lift(unsigned target) const;

  friend bool operator==(const Residue& a, const Residue& b);

  std::string str() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const Residue& r);

 private:
  Residue(u64 p, unsigned e, u64 m, u64 v) : p_(p), e_(e), m_(m), v_(v) {}
  void check_same_ring(const Residue& o) const;

  u64 p_;
  unsigned e_;
  u64 m_;
  u64 v_;
};

/// x.num * x.den^{-1} mod p^e. Throws NonPIntegral when p | x.den.
Residue reduce_mod(const Rat& x, u64 p, unsigned e);

/// p^v * u with u a unit known modulo p^e.
///
/// The valuation is tracked exactly through products and quotients, so a
/// factor of p gained in a numerator and later cancelled by a denominator is
/// never lost. Absolute precision is p^(v+e); the observable residue
/// (to_residue) collapses every valuation >= e to zero.
class ValuedResidue {
 public:
  static ValuedResidue from_int(i64 n, u64 p, unsigned e);
  static ValuedResidue from_int(const Int& n, u64 p, unsigned e);
  static ValuedResidue from_rat(const Rat& x, u64 p, unsigned e);
  static ValuedResidue zero(u64 p, unsigned e) { return ValuedResidue(p, e, prime_power(p, e), kInfiniteValuation, 0); }
  static ValuedResidue one(u64 p, unsigned e) { return ValuedResidue(p, e, prime_power(p, e), 0, 1); }

  u64 prime() const { return p_; }
  unsigned exponent() const { return e_; }
  long valuation() const { return v_; }
  u64 unit() const { return u_; }
  bool is_zero() const { return v_ == kInfiniteValuation; }

  ValuedResidue& operator*=(const ValuedResidue& o);
  ValuedResidue& operator/=(const ValuedResidue& o);
  ValuedResidue& operator+=(const ValuedResidue& o);
  friend ValuedResidue operator*(ValuedResidue a, const ValuedResidue& b) { return a *= b; }
  friend ValuedResidue operator/(ValuedResidue a, const ValuedResidue& b) { return a /= b; }
  friend ValuedResidue operator+(ValuedResidue a, const ValuedResidue& b) { return a += b; }

  /// Multiplies by a machine integer without building a temporary.
  void mul_int(i64 n);
  void div_int(i64 n);
  /// Multiplies by prod(num) / prod(den) with a single modular inverse.
  void scale(const i64* num, std::size_t num_count, const i64* den, std::size_t den_count);

  /// p^v * u mod p^e. Throws NonPIntegral for negative valuation.
  Residue to_residue() const;

 private:
  ValuedResidue(u64 p, unsigned e, u64 m, long v, u64 u) : p_(p), e_(e), m_(m), v_(v), u_(u) {}
  void check_same_ring(const ValuedResidue& o) const;
  void split(i64 n, long& v, u64& unit) const;

  u64 p_;
  unsigned e_;
  u64 m_;
  long v_;
  u64 u_;
};

}  // namespace wzlab
