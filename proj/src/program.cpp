#include "fractran/program.hpp"

#include <cctype>
#include <stdexcept>

#include "fractran/error.hpp"

namespace fractran {

FractranProgram::FractranProgram(std::vector<Fraction> fractions)
    : fractions_(std::move(fractions)), modulus_(1) {
  if (fractions_.empty()) throw Error(ErrorCode::EmptyProgram, "a program needs at least one fraction");
  num_factors_.reserve(fractions_.size());
  den_factors_.reserve(fractions_.size());
  for (const auto& f : fractions_) {
    if (sgn(f.num) <= 0 || sgn(f.den) <= 0) {
      throw Error(ErrorCode::ZeroPart, fractran::to_string(f.num) + "/" + fractran::to_string(f.den));
    }
    modulus_ = lcm(modulus_, f.den);
    num_factors_.push_back(factorize(f.num));
    den_factors_.push_back(factorize(f.den));
  }
}

std::optional<ResidueEntry> FractranProgram::residue_entry(const BigInt& n) const {
  if (n < 1 || n > modulus_) throw std::out_of_range("residue class outside 1..d");
  BigInt product;
  for (std::size_t i = 0; i < fractions_.size(); ++i) {
    const auto& f = fractions_[i];
    product = n * f.num;
    if (mpz_divisible_p(product.get_mpz_t(), f.den.get_mpz_t())) {
      ResidueEntry e;
      mpz_divexact(e.offset.get_mpz_t(), product.get_mpz_t(), f.den.get_mpz_t());
      BigInt scale;
      mpz_divexact(scale.get_mpz_t(), modulus_.get_mpz_t(), f.den.get_mpz_t());
      e.multiplier = f.num * scale;
      e.rule = i;
      return e;
    }
  }
  return std::nullopt;
}

std::vector<std::optional<ResidueEntry>> FractranProgram::residue_table() const {
  auto d = to_u64(modulus_);
  if (!d || *d > kMaxMaterializedModulus) {
    throw Error(ErrorCode::TooLarge, "modulus " + fractran::to_string(modulus_) + " too large to tabulate");
  }
  std::vector<std::optional<ResidueEntry>> table;
  table.reserve(*d);
  for (std::uint64_t n = 1; n <= *d; ++n) table.push_back(residue_entry(from_u64(n)));
  return table;
}

bool FractranProgram::is_trivially_immortal() const {
  for (const auto& f : fractions_) {
    if (mpz_divisible_p(f.num.get_mpz_t(), f.den.get_mpz_t())) return true;
  }
  return false;
}

std::string FractranProgram::to_string() const {
  std::string out;
  for (const auto& f : fractions_) {
    if (!out.empty()) out += ' ';
    out += fractran::to_string(f.num) + "/" + fractran::to_string(f.den);
  }
  return out;
}

namespace {

Fraction parse_fraction(std::string_view token) {
  auto slash = token.find('/');
  std::string_view num_text = token.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : token.substr(slash + 1);
  auto num = parse_natural(num_text);
  auto den = parse_natural(den_text);
  if (!num || !den) throw Error(ErrorCode::Malformed, "bad fraction token '" + std::string(token) + "'");
  if (*num == 0 || *den == 0) throw Error(ErrorCode::ZeroPart, "zero in '" + std::string(token) + "'");
  return {*num, *den};
}

}  // namespace

FractranProgram parse_program(std::string_view text) {
  std::vector<Fraction> fractions;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
      fractions.push_back(parse_fraction(text.substr(start, i - start)));
    }
  }
  if (fractions.empty()) throw Error(ErrorCode::EmptyProgram, "no fractions in program text");
  return FractranProgram(std::move(fractions));
}

const FractranProgram& primegame() {
  static const FractranProgram program = parse_program(kPrimegameText);
  return program;
}

}  // namespace fractran
