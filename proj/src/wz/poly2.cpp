#include "wzlab/poly2.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wzlab/errors.hpp"

namespace wzlab {
namespace {

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// (x + shift)^deg as a coefficient vector in x.
std::vector<Rat> shifted_power(unsigned deg, long shift) {
  std::vector<Rat> out(deg + 1);
  Rat s(shift);
  for (unsigned i = 0; i <= deg; ++i) out[i] = Rat(binomial(deg, i)) * pow(s, deg - i);
  return out;
}

unsigned parse_exponent(std::string_view text, std::string_view whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad exponent in '" + std::string(whole) + "'");
  }
  return static_cast<unsigned>(std::stoul(std::string(text)));
}

Poly2 parse_term(std::string_view term, std::string_view whole) {
  if (term.empty()) throw ParseError("empty term in '" + std::string(whole) + "'");
  Rat coef = 1;
  unsigned dn = 0, dk = 0;
  std::size_t pos = 0;
  while (pos <= term.size()) {
    std::size_t star = term.find('*', pos);
    std::string_view factor = term.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (factor.empty()) throw ParseError("empty factor in '" + std::string(whole) + "'");
    char head = factor[0];
    if (head == 'n' || head == 'k') {
      unsigned d = 1;
      if (factor.size() > 1) {
        if (factor[1] != '^') throw ParseError("bad factor '" + std::string(factor) + "'");
        d = parse_exponent(factor.substr(2), whole);
      }
      (head == 'n' ? dn : dk) += d;
    } else {
      try {
        coef *= Rat::parse(factor);
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + std::string(factor) + "' in '" + std::string(whole) + "'");
      }
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Poly2::monomial(coef, dn, dk);
}

}  // namespace

Poly2::Poly2(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, c);
}

Poly2 Poly2::monomial(const Rat& c, unsigned deg_n, unsigned deg_k) {
  Poly2 p;
  p.add_term({deg_n, deg_k}, c);
  return p;
}

Poly2 Poly2::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  Poly2 out;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    Poly2 term = parse_term(std::string_view(s).substr(i, j - i), text);
    out += negative ? -term : term;
    i = j;
  }
  return out;
}

Rat Poly2::coefficient(unsigned deg_n, unsigned deg_k) const {
  auto it = terms_.find({deg_n, deg_k});
  return it == terms_.end() ? Rat() : it->second;
}

void Poly2::set_coefficient(unsigned deg_n, unsigned deg_k, const Rat& c) {
  if (c.is_zero()) {
    terms_.erase({deg_n, deg_k});
  } else {
    terms_[{deg_n, deg_k}] = c;
  }
}

void Poly2::add_term(const Exponents& ex, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(ex, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [ex, c] : o.terms_) add_term(ex, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [ex, c] : o.terms_) add_term(ex, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 out;
  for (const auto& [ex, c] : terms_) out.terms_.emplace(ex, -c);
  return out;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 out(1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

Poly2 Poly2::shift(long dn, long dk) const {
  Poly2 out;
  for (const auto& [ex, c] : terms_) {
    auto pn = shifted_power(ex.first, dn);
    auto pk = shifted_power(ex.second, dk);
    for (unsigned i = 0; i < pn.size(); ++i) {
      if (pn[i].is_zero()) continue;
      for (unsigned j = 0; j < pk.size(); ++j) out.add_term({i, j}, c * pn[i] * pk[j]);
    }
  }
  return out;
}

Rat Poly2::eval(const Rat& n, const Rat& k) const {
  Rat acc;
  for (const auto& [ex, c] : terms_) acc += c * wzlab::pow(n, ex.first) * wzlab::pow(k, ex.second);
  return acc;
}

Poly2 Poly2::with_integer_coefficients() const {
  Int scale = 1;
  for (const auto& [ex, c] : terms_) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.den_ref().get_mpz_t());
  Poly2 out;
  for (const auto& [ex, c] : terms_) out.terms_.emplace(ex, c * Rat(scale));
  return out;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [ex, c] = *it;
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool has_symbol = ex.first > 0 || ex.second > 0;
    bool wrote = false;
    if (!(has_symbol && mag == Rat(1))) {
      os << mag;
      wrote = true;
    }
    auto symbol = [&](char name, unsigned deg) {
      if (deg == 0) return;
      if (wrote) os << '*';
      os << name;
      if (deg > 1) os << '^' << deg;
      wrote = true;
    };
    symbol('n', ex.first);
    symbol('k', ex.second);
  }
  return os.str();
}

RatFun2::RatFun2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RatFun2 operator+(const RatFun2& a, const RatFun2& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFun2 operator-(const RatFun2& a, const RatFun2& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RatFun2 operator*(const RatFun2& a, const RatFun2& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RatFun2 operator/(const RatFun2& a, const RatFun2& b) {
  if (b.num_.is_zero()) throw std::domain_error("rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rat RatFun2::eval(const Rat& n, const Rat& k) const {
  Rat d = den_.eval(n, k);
  if (d.is_zero()) throw std::domain_error("denominator " + den_.str() + " vanishes at (" + n.str() + ", " + k.str() + ")");
  return num_.eval(n, k) / d;
}

Poly2 RatFun2::cross_difference(const RatFun2& a, const RatFun2& b) {
  return (a.num_ * b.den_ - b.num_ * a.den_).with_integer_coefficients();
}

std::string RatFun2::str() const {
  if (den_ == Poly2(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace wzlab
