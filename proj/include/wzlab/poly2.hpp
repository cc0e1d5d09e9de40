#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "wzlab/rational.hpp"

namespace wzlab {

/// Polynomial in the two symbols n and k with exact rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class Poly2 {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (deg_n, deg_k)
  using Terms = std::map<Exponents, Rat>;

  Poly2() = default;
  Poly2(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly2(long c) : Poly2(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly2 monomial(const Rat& c, unsigned deg_n, unsigned deg_k);
  static Poly2 n() { return monomial(1, 1, 0); }
  static Poly2 k() { return monomial(1, 0, 1); }

  /// Sum of monomials such as "6*n^2 - 5*n + 1 - 4*n*k + 2*k" or "-1/2*k^2".
  static Poly2 parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(unsigned deg_n, unsigned deg_k) const;
  void set_coefficient(unsigned deg_n, unsigned deg_k, const Rat& c);

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 operator-() const;
  Poly2 pow(unsigned e) const;

  /// p(n + dn, k + dk).
  Poly2 shift(long dn, long dk) const;
  Rat eval(const Rat& n, const Rat& k) const;

  /// Multiplied by the lcm of the coefficient denominators.
  Poly2 with_integer_coefficients() const;

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add_term(const Exponents& ex, const Rat& c);
  Terms terms_;
};

/// Quotient of two Poly2. Never reduced: equality is decided by
/// cross-multiplication.
class RatFun2 {
 public:
  RatFun2() : num_(0), den_(1) {}
  RatFun2(Poly2 num, Poly2 den = Poly2(1));  // NOLINT(google-explicit-constructor)

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }

  friend RatFun2 operator+(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator-(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator*(const RatFun2& a, const RatFun2& b);
  friend RatFun2 operator/(const RatFun2& a, const RatFun2& b);

  RatFun2 shift(long dn, long dk) const { return {num_.shift(dn, dk), den_.shift(dn, dk)}; }

  /// Throws std::domain_error where the denominator vanishes.
  Rat eval(const Rat& n, const Rat& k) const;

  /// a.num * b.den - b.num * a.den; zero iff a == b as rational functions.
  static Poly2 cross_difference(const RatFun2& a, const RatFun2& b);
  bool equivalent(const RatFun2& o) const { return cross_difference(*this, o).is_zero(); }

  std::string str() const;

 private:
  Poly2 num_;
  Poly2 den_;
};

}  // namespace wzlab
