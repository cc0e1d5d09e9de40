#pragma once

#include <memory>
#include <vector>

#include "wzlab/rational.hpp"
#include "wzlab/residue.hpp"

namespace wzlab {

/// Exact Euler numbers E_0..E_N (odd entries are zero).
class EulerTable {
 public:
  explicit EulerTable(std::vector<Int> entries) : entries_(std::move(entries)) {}
  const Int& operator[](std::size_t n) const { return entries_.at(n); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Int> entries_;
};

/// E_0..E_N from sum_{j=0}^{n} C(2n,2j) E_{2j} = 0 (n >= 1), E_0 = 1.
EulerTable euler_numbers(unsigned bound);

/// E_idx mod p for even idx <= p-3, by the same recurrence carried out in Z/p.
/// Tables are built once per prime and shared.
Residue euler_mod(u64 p, unsigned idx);

/// Exact Bernoulli numbers B_0..B_N with B_1 = -1/2.
std::vector<Rat> bernoulli_numbers(unsigned bound);

/// B_0..B_{p-2} modulo p. Index p-1 is excluded (its denominator contains p).
class BernoulliModTable {
 public:
  explicit BernoulliModTable(u64 p);

  u64 prime() const { return p_; }
  std::size_t size() const { return entries_.size(); }
  /// Throws std::out_of_range for n > p-2.
  Residue at(unsigned n) const;

 private:
  u64 p_;
  std::vector<u64> entries_;
};

/// Shared, build-once table for p.
std::shared_ptr<const BernoulliModTable> bernoulli_mod_table(u64 p);

/// B_n(x) mod p for n <= p-2. Throws NonPIntegral if p divides den(x).
Residue bernoulli_poly_mod(u64 p, unsigned n, const Rat& x);

/// H_n^{(m)} = sum_{k=1}^{n} 1/k^m.
Rat harmonic(unsigned n, unsigned order);

/// Running H_n^{(m)} reduced mod p^e; terms with p | k are rejected.
class HarmonicStream {
 public:
  HarmonicStream(u64 p, unsigned e, unsigned order);

  unsigned index() const { return n_; }
  const Residue& value() const { return value_; }
  /// Adds 1/(n+1)^m and returns the new value.
  const Residue& advance();

 private:
  u64 p_;
  unsigned e_;
  unsigned order_;
  unsigned n_ = 0;
  Residue value_;
};

/// Rising factorial (x)_k = x(x+1)...(x+k-1).
Rat pochhammer(const Rat& x, unsigned k);

/// C(2k, k).
Int central_binomial(unsigned k);

}  // namespace wzlab
