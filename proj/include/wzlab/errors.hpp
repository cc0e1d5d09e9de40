#pragma once

#include <stdexcept>

namespace wzlab {

// A rational with p in its denominator was asked for a residue mod p^e.
struct NonPIntegral : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

// Arithmetic between residues living in different rings Z/p^e.
struct ModulusMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// A claim was evaluated at a prime outside its admissible set.
struct PredicateViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ShiftRatioMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wzlab
