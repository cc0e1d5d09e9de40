#include "wzlab/residue.hpp"

#include <stdexcept>

#include "wzlab/errors.hpp"

namespace wzlab {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u64 reduce_int(const Int& x, u64 m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Int(m).get_mpz_t());
  return r.get_ui();
}

// m < 2^63, so it fits in i64.
u64 reduce_i64(i64 x, u64 m) {
  i64 r = x % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

void check_ring(u64 p, unsigned e) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("residue ring needs an odd prime, got " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("residue ring needs exponent >= 1");
}

// Splits n = p^v * w with p not dividing w; n must be nonzero.
long strip_prime(u64& n, u64 p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

u64 prime_power(u64 p, unsigned e) {
  u128 m = 1;
  for (unsigned i = 0; i < e; ++i) {
    m *= p;
    if (m >= (u128{1} << 63)) {
      throw std::overflow_error(std::to_string(p) + "^" + std::to_string(e) + " exceeds the 63-bit modulus limit");
    }
  }
  return static_cast<u64>(m);
}

u64 pow_mod(u64 base, u64 exponent, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

u64 mod_inverse(i64 a, u64 m) {
  // |s| stays below m, so 64-bit signed arithmetic suffices.
  u64 r0 = m, r1 = reduce_i64(a, m);
  i64 s0 = 0, s1 = 1;
  while (r1 != 0) {
    u64 q = r0 / r1;
    u64 r = r0 - q * r1;
    r0 = r1;
    r1 = r;
    i64 t = s0 - static_cast<i64>(q) * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw NotInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  if (s0 < 0) s0 += static_cast<i64>(m);
  return static_cast<u64>(s0);
}

u64 mod_inverse(const Int& a, u64 m) {
  u64 r = reduce_int(a, m);
  if (r == 0 && m == 1) return 0;
  try {
    return mod_inverse(static_cast<i64>(r), m);
  } catch (const NotInvertible&) {
    throw NotInvertible(a.get_str() + " is not invertible modulo " + std::to_string(m));
  }
}

long padic_valuation(const Int& x, u64 p) {
  if (x == 0) return kInfiniteValuation;
  Int pp(p);
  Int rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

long padic_valuation(const Rat& x, u64 p) {
  if (x.is_zero()) return kInfiniteValuation;
  return padic_valuation(x.num_ref(), p) - padic_valuation(x.den_ref(), p);
}

// --- Residue -------------------------------------------------------------

Residue::Residue(u64 p, unsigned e, const Int& value) : p_(p), e_(e), m_(0), v_(0) {
  check_ring(p, e);
  m_ = prime_power(p, e);
  v_ = reduce_int(value, m_);
}

Residue::Residue(u64 p, unsigned e, i64 value) : p_(p), e_(e), m_(0), v_(0) {
  check_ring(p, e);
  m_ = prime_power(p, e);
  v_ = reduce_i64(value, m_);
}

void Residue::check_same_ring(const Residue& o) const {
  if (p_ != o.p_ || e_ != o.e_) {
    throw ModulusMismatch("residues in Z/" + std::to_string(p_) + "^" + std::to_string(e_) + " and Z/" +
                          std::to_string(o.p_) + "^" + std::to_string(o.e_));
  }
}

Residue& Residue::operator+=(const Residue& o) {
  check_same_ring(o);
  v_ += o.v_;
  if (v_ >= m_) v_ -= m_;
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  check_same_ring(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : m_ - (o.v_ - v_);
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  check_same_ring(o);
  v_ = mul_mod(v_, o.v_, m_);
  return *this;
}

Residue Residue::operator-() const { return Residue(p_, e_, m_, v_ == 0 ? 0 : m_ - v_); }

Residue Residue::inverse() const {
  if (v_ % p_ == 0) throw NotInvertible(std::to_string(v_) + " is not a unit modulo " + std::to_string(m_));
  return Residue(p_, e_, m_, mod_inverse(static_cast<i64>(v_), m_));
}

Residue Residue::pow(u64 exponent) const { return Residue(p_, e_, m_, pow_mod(v_, exponent, m_)); }

Residue Residue::lift(unsigned target) const { return Residue(p_, target, static_cast<i64>(v_)); }

bool operator==(const Residue& a, const Residue& b) {
  a.check_same_ring(b);
  return a.v_ == b.v_;
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.v_ << " (mod " << r.p_ << "^" << r.e_ << ")";
}

Residue reduce_mod(const Rat& x, u64 p, unsigned e) {
  if (x.den_ref() % Int(p) == 0) {
    throw NonPIntegral(x.str() + " is not " + std::to_string(p) + "-integral");
  }
  Residue num(p, e, x.num_ref());
  Residue den(p, e, x.den_ref());
  return num * den.inverse();
}

// --- ValuedResidue -------------------------------------------------------

ValuedResidue ValuedResidue::from_int(i64 n, u64 p, unsigned e) {
  check_ring(p, e);
  u64 m = prime_power(p, e);
  if (n == 0) return ValuedResidue(p, e, m, kInfiniteValuation, 0);
  u64 mag = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  long v = strip_prime(mag, p);
  u64 u = mag % m;
  if (n < 0) u = m - u;
  return ValuedResidue(p, e, m, v, u);
}

ValuedResidue ValuedResidue::from_int(const Int& n, u64 p, unsigned e) {
  check_ring(p, e);
  u64 m = prime_power(p, e);
  if (n == 0) return ValuedResidue(p, e, m, kInfiniteValuation, 0);
  Int rest;
  Int pp(p);
  long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
  return ValuedResidue(p, e, m, v, reduce_int(rest, m));
}

ValuedResidue ValuedResidue::from_rat(const Rat& x, u64 p, unsigned e) {
  ValuedResidue r = from_int(x.num_ref(), p, e);
  r /= from_int(x.den_ref(), p, e);
  return r;
}

void ValuedResidue::check_same_ring(const ValuedResidue& o) const {
  if (p_ != o.p_ || e_ != o.e_) throw ModulusMismatch("valued residues over different rings");
}

ValuedResidue& ValuedResidue::operator*=(const ValuedResidue& o) {
  check_same_ring(o);
  if (is_zero() || o.is_zero()) {
    v_ = kInfiniteValuation;
    u_ = 0;
    return *this;
  }
  v_ += o.v_;
  u_ = mul_mod(u_, o.u_, m_);
  return *this;
}

ValuedResidue& ValuedResidue::operator/=(const ValuedResidue& o) {
  check_same_ring(o);
  if (o.is_zero()) throw std::domain_error("valued residue division by zero");
  if (is_zero()) return *this;
  v_ -= o.v_;
  u_ = mul_mod(u_, mod_inverse(static_cast<i64>(o.u_), m_), m_);
  return *this;
}

// Splits a nonzero machine integer into p^v times a unit mod m.
void ValuedResidue::split(i64 n, long& v, u64& unit) const {
  u64 mag = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  v = strip_prime(mag, p_);
  unit = mag % m_;
  if (n < 0) unit = m_ - unit;
}

void ValuedResidue::mul_int(i64 n) { scale(&n, 1, nullptr, 0); }

void ValuedResidue::div_int(i64 n) { scale(nullptr, 0, &n, 1); }

void ValuedResidue::scale(const i64* num, std::size_t num_count, const i64* den, std::size_t den_count) {
  long v = 0;
  u64 top = 1 % m_, bottom = 1 % m_;
  bool zero = false;
  for (std::size_t i = 0; i < num_count; ++i) {
    if (num[i] == 0) {
      zero = true;
      continue;
    }
    long w;
    u64 u;
    split(num[i], w, u);
    v += w;
    top = mul_mod(top, u, m_);
  }
  for (std::size_t i = 0; i < den_count; ++i) {
    if (den[i] == 0) throw std::domain_error("valued residue division by zero");
    long w;
    u64 u;
    split(den[i], w, u);
    v -= w;
    bottom = mul_mod(bottom, u, m_);
  }
  if (zero || is_zero()) {
    v_ = kInfiniteValuation;
    u_ = 0;
    return;
  }
  v_ += v;
  u_ = mul_mod(mul_mod(u_, top, m_), mod_inverse(static_cast<i64>(bottom), m_), m_);
}

ValuedResidue& ValuedResidue::operator+=(const ValuedResidue& o) {
  check_same_ring(o);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  const ValuedResidue& low = v_ <= o.v_ ? *this : o;
  const ValuedResidue& high = v_ <= o.v_ ? o : *this;
  long gap = high.v_ - low.v_;
  u64 shifted = gap >= static_cast<long>(e_) ? 0 : mul_mod(high.u_, prime_power(p_, static_cast<unsigned>(gap)), m_);
  u64 sum = low.u_ + shifted;  // both below m < 2^63
  if (sum >= m_) sum -= m_;
  long base = low.v_;
  if (sum == 0) {
    v_ = kInfiniteValuation;
    u_ = 0;
    return *this;
  }
  long extra = strip_prime(sum, p_);
  v_ = base + extra;
  u_ = sum;
  return *this;
}

Residue ValuedResidue::to_residue() const {
  if (is_zero() || v_ >= static_cast<long>(e_)) return Residue::zero(p_, e_);
  if (v_ < 0) {
    throw NonPIntegral("value with " + std::to_string(p_) + "-adic valuation " + std::to_string(v_) +
                       " has no residue");
  }
  u64 scale = prime_power(p_, static_cast<unsigned>(v_));
  return Residue(p_, e_, static_cast<i64>(mul_mod(u_, scale, m_)));
}

}  // namespace wzlab
