#pragma once

#include <vector>

#include "wzlab/rational.hpp"
#include "wzlab/residue.hpp"

namespace wzlab {

bool is_prime(u64 n);

/// Primes in [lo, hi] by a plain sieve of Eratosthenes.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// (a/p) in {-1, 0, +1} by Euler's criterion. p must be an odd prime.
int legendre_symbol(const Int& a, u64 p);
inline int legendre_symbol(long a, u64 p) { return legendre_symbol(Int(a), p); }

/// q_p(2) = (2^{p-1} - 1) / p, exactly.
Int fermat_quotient_2(u64 p);

}  // namespace wzlab
