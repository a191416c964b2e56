#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fractran/bigint.hpp"

namespace fractran::lsf {

enum class Kind { Bullet, Cons, Head, Tail, Mod, Zip, Root, Var };

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// The d original arguments of a zip. Induced specifications have d up to
/// the lcm of the denominators, so arguments are produced on request.
class ZipSource {
 public:
  virtual ~ZipSource() = default;
  virtual const BigInt& arity() const = 0;
  /// Original argument j, 0 <= j < arity().
  virtual TermPtr argument(const BigInt& j) const = 0;
};

using ZipSourcePtr = std::shared_ptr<const ZipSource>;

ZipSourcePtr explicit_zip_source(std::vector<TermPtr> arguments);

/// Immutable term node. Tail carries a repeat count (tail^k, k >= 1) and a
/// zip carries a rotation offset r: its argument j is
/// tail^((r+j) div d)(original argument (r+j) mod d), which is what r
/// applications of the zip rule produce.
class Term {
 public:
  Kind kind() const { return kind_; }

  /// Cons: data, stream. Head, Tail, Mod: the single argument.
  const TermPtr& child(std::size_t i) const { return children_.at(i); }

  /// Tail count, Mod k or Zip offset.
  const BigInt& number() const { return number_; }

  /// Root or Var name.
  const std::string& name() const { return name_; }

  const ZipSourcePtr& zip_source() const { return zip_; }
  const BigInt& zip_arity() const { return zip_->arity(); }
  TermPtr zip_argument(const BigInt& j) const;

  friend bool operator==(const Term& a, const Term& b);

  // Construction goes through the helpers below.
  Term(Kind kind, std::vector<TermPtr> children, BigInt number, std::string name, ZipSourcePtr zip)
      : kind_(kind), children_(std::move(children)), number_(std::move(number)), name_(std::move(name)),
        zip_(std::move(zip)) {}

 private:
  Kind kind_;
  std::vector<TermPtr> children_;
  BigInt number_;
  std::string name_;
  ZipSourcePtr zip_;
};

TermPtr bullet();
TermPtr cons(TermPtr data, TermPtr stream);
TermPtr head(TermPtr stream);
/// tail^k(s); k = 0 returns s and nested tails merge.
TermPtr tail(TermPtr stream, const BigInt& k = 1);
TermPtr mod(const BigInt& k, TermPtr stream);
TermPtr zip(ZipSourcePtr source, const BigInt& offset = 0);
TermPtr zip(std::vector<TermPtr> arguments);
TermPtr root(std::string name);
TermPtr var(std::string name);

/// Old TPDB rendering: bullet, cons(..), head(..), tail(..) nested k times,
/// modK(..), zipD(..). Throws TooLarge when a tail count or zip arity is too
/// big to spell out.
std::string to_tpdb(const Term& t);

/// Short human rendering with tail^k(..) and zipD@r for rotated zips;
/// zip arguments are not listed.
std::string to_compact(const Term& t);

/// Largest tail count or zip arity to_tpdb spells out.
inline constexpr unsigned long kMaxSpelledOut = 4096;

}  // namespace fractran::lsf
