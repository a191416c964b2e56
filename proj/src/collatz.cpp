#include "fractran/collatz.hpp"

#include <stdexcept>

#include "fractran/error.hpp"

namespace fractran {

CollatzForm::CollatzForm(FractranProgram program) : program_(std::move(program)) {}

CollatzBranch CollatzForm::branch(const BigInt& j) const {
  if (sgn(j) < 0 || j >= modulus()) throw std::out_of_range("residue outside 0..p-1");
  // Residue 0 is represented by the class d itself.
  BigInt cls = j == 0 ? modulus() : j;
  auto entry = program_.residue_entry(cls);
  if (!entry) return {Rational(0), Rational(1)};
  const Fraction& f = program_.fractions()[entry->rule];
  Rational slope(f.num, f.den);
  slope.canonicalize();
  return {slope, Rational(0)};
}

std::vector<CollatzBranch> CollatzForm::branches() const {
  auto p = to_u64(modulus());
  if (!p || *p > kMaxMaterializedModulus) throw Error(ErrorCode::TooLarge, "too many branches to list");
  std::vector<CollatzBranch> out;
  out.reserve(*p);
  for (std::uint64_t j = 0; j < *p; ++j) out.push_back(branch(from_u64(j)));
  return out;
}

BigInt CollatzForm::apply(const BigInt& n) const {
  if (sgn(n) <= 0) throw Error(ErrorCode::ZeroInput, "Collatz form is defined on n >= 1");
  BigInt j;
  mpz_fdiv_r(j.get_mpz_t(), n.get_mpz_t(), modulus().get_mpz_t());
  CollatzBranch b = branch(j);
  Rational value = b.slope * Rational(n) + b.intercept;
  value.canonicalize();
  if (value.get_den() != 1) throw Error(ErrorCode::Malformed, "Collatz branch produced a non-integer");
  return value.get_num();
}

CollatzForm derive_collatz_form(const FractranProgram& program) { return CollatzForm(program); }

}  // namespace fractran
