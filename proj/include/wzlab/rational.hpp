#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace wzlab {

using Int = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
///
/// Canonical form is restored after every construction, so equality is
/// structural on (num, den).
class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  /// Parses "a", "-a" or "a/b" (whitespace not allowed inside the number).
  static Rat parse(std::string_view text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpz_class& num_ref() const { return q_.get_num(); }
  const mpz_class& den_ref() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  std::string str() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

Rat pow(const Rat& base, unsigned exponent);

}  // namespace wzlab
