#include "wzlab/number_theory.hpp"

#include <stdexcept>

namespace wzlab {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (u64 i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
    if (!composite[n]) out.push_back(n);
  }
  return out;
}

int legendre_symbol(const Int& a, u64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("legendre_symbol: modulus must be an odd prime, got " + std::to_string(p));
  }
  Int r = a % Int(p);
  if (r < 0) r += Int(p);
  u64 base = r.get_ui();
  if (base == 0) return 0;
  u64 c = pow_mod(base, (p - 1) / 2, p);
  return c == 1 ? 1 : -1;
}

Int fermat_quotient_2(u64 p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("fermat_quotient_2: p must be an odd prime");
  Int two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, p - 1);
  Int num = two_pow - 1;
  Int q;
  if (!mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    throw std::invalid_argument("fermat_quotient_2: " + std::to_string(p) + " is not prime");
  }
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), p);
  return q;
}

}  // namespace wzlab
