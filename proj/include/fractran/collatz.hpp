#pragma once

#include <vector>

#include "fractran/bigint.hpp"
#include "fractran/program.hpp"

namespace fractran {

/// n -> slope * n + intercept on one residue class.
struct CollatzBranch {
  Rational slope;
  Rational intercept;

  friend bool operator==(const CollatzBranch&, const CollatzBranch&) = default;
};

/// A program read as a Collatz function modulo d = lcm of the denominators.
/// Classes where no fraction applies map to the constant 1, so apply() is
/// total; the interpreter itself never uses that convention.
class CollatzForm {
 public:
  explicit CollatzForm(FractranProgram program);

  const BigInt& modulus() const { return program_.modulus(); }

  /// Branch for residue j, 0 <= j < modulus().
  CollatzBranch branch(const BigInt& j) const;

  /// All branches in residue order. Throws TooLarge for huge moduli.
  std::vector<CollatzBranch> branches() const;

  /// Requires n >= 1.
  BigInt apply(const BigInt& n) const;

 private:
  FractranProgram program_;
};

CollatzForm derive_collatz_form(const FractranProgram& program);

}  // namespace fractran
