#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wzlab/poly2.hpp"
#include "wzlab/rational.hpp"
#include "wzlab/residue.hpp"

namespace wzlab {

// The hypergeometric kernel H(n,k) = (-1/2-k)_n^2 (-1/2)_n 4^n / n!^3 and the
// pair F = P*H, G = Q*H with
//   P(n,k) = 6n^2 - 5n + 1 - 4nk + 2k,
//   Q(n,k) = 4(1-2n)n^3 / (3+2k-2n)^2,
// satisfying F(n,k+1) - F(n,k) = G(n+1,k) - G(n,k).

/// H(n,k) evaluated from its Pochhammer definition.
Rat kernel(unsigned n, unsigned k);
Rat eval_F(unsigned n, unsigned k);
Rat eval_G(unsigned n, unsigned k);

enum class KernelKind {
  Builtin,     // the kernel above; shift ratios are cross-checked against kernel()
  RatiosOnly,  // H is known only through its shift ratios, normalised by H(0,0) = 1
};

struct Certificate {
  KernelKind kernel = KernelKind::Builtin;
  RatFun2 shift_ratio_n;  // H(n+1,k) / H(n,k)
  RatFun2 shift_ratio_k;  // H(n,k+1) / H(n,k)
  RatFun2 P;
  RatFun2 Q;
};

Certificate builtin_certificate();

/// Declarative text format, one `key = polynomial` per line:
///   kernel = builtin | ratios
///   P.num, P.den, Q.num, Q.den, shift_n.num, shift_n.den, shift_k.num, shift_k.den
/// Missing `.den` entries default to 1; `#` starts a comment.
Certificate parse_certificate(std::istream& in);
Certificate load_certificate(const std::string& path);
std::string format_certificate(const Certificate& cert);

struct GridWitness {
  unsigned n = 0;
  unsigned k = 0;
  std::string detail;
};

struct NumericResult {
  bool holds = true;
  std::optional<GridWitness> witness;  // smallest failing (n,k) in row-major order
};

/// Checks F(n,k+1) - F(n,k) = G(n+1,k) - G(n,k) exactly on 0..n_max x 0..k_max.
NumericResult verify_pair_numeric(unsigned n_max, unsigned k_max, unsigned workers = 1);
NumericResult verify_pair_numeric(const Certificate& cert, unsigned n_max, unsigned k_max, unsigned workers = 1);

struct SymbolicResult {
  bool holds = false;
  Poly2 residual;  // integer-coefficient numerator of lhs - rhs; zero iff holds
};

/// Reduces the pair identity to
///   P(n,k+1) R_k(n,k) - P(n,k) = Q(n+1,k) R_n(n,k) - Q(n,k)
/// and tests it as a polynomial identity after clearing denominators.
/// Throws ShiftRatioMismatch when the shift ratios are inconsistent with each
/// other or (for the builtin kernel) with kernel() on a 10 x 10 grid.
SymbolicResult verify_pair_symbolic(const Certificate& cert);

/// Certificates differing from `cert` in exactly one coefficient of P or Q.
struct Mutant {
  std::string label;
  Certificate cert;
};
std::vector<Mutant> coefficient_mutants(const Certificate& cert);

/// Boundary terms of the telescoped sum up to (p+1)/2:
/// sum_{n=0}^{(p+1)/2} main_term(n) = -boundary_F + g_sum - f_sum.
struct HalfRangeDecomposition {
  Rat boundary_F;  // F((p+1)/2, 0)
  Rat g_sum;       // sum_{k=0}^{(p-3)/2} G((p+1)/2, k)
  Rat f_sum;       // sum_{n=0}^{(p-1)/2} F(n, (p-1)/2)
  Rat total() const { return -boundary_F + g_sum - f_sum; }
};
HalfRangeDecomposition telescoping_decomposition_1(u64 p);

/// sum_{n=0}^{p-1} main_term(n) = g_sum - f_sum.
struct FullRangeDecomposition {
  Rat g_sum;  // sum_{k=0}^{(p-3)/2} G(p, k)
  Rat f_sum;  // sum_{n=0}^{p-1} F(n, (p-1)/2)
  Rat total() const { return g_sum - f_sum; }
};
FullRangeDecomposition telescoping_decomposition_2(u64 p);

}  // namespace wzlab
