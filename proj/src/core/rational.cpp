#include "wzlab/rational.hpp"

#include <stdexcept>

namespace wzlab {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    Int v;
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() == start) throw std::invalid_argument("malformed integer: '" + part + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed integer: '" + part + "'");
    }
    v.set_str(part[0] == '+' ? part.substr(1) : part, 10);
    return v;
  };
  if (slash == std::string::npos) return Rat(parse_int(s));
  return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-q_)); }

Rat pow(const Rat& base, unsigned exponent) {
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num_ref().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den_ref().get_mpz_t(), exponent);
  return Rat(n, d);
}

}  // namespace wzlab
