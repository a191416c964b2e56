#include "fractran/term.hpp"

#include "fractran/error.hpp"

namespace fractran::lsf {

namespace {

class ExplicitZipSource : public ZipSource {
 public:
  explicit ExplicitZipSource(std::vector<TermPtr> args) : args_(std::move(args)), arity_(args_.size()) {}

  const BigInt& arity() const override { return arity_; }
  TermPtr argument(const BigInt& j) const override { return args_.at(j.get_ui()); }

 private:
  std::vector<TermPtr> args_;
  BigInt arity_;
};

TermPtr make(Kind kind, std::vector<TermPtr> children = {}, BigInt number = 0, std::string name = {},
             ZipSourcePtr zip = nullptr) {
  return std::make_shared<const Term>(kind, std::move(children), std::move(number), std::move(name),
                                      std::move(zip));
}

unsigned long spelled_out(const BigInt& n, const char* what) {
  if (n > kMaxSpelledOut) throw Error(ErrorCode::TooLarge, std::string(what) + " too large to print");
  return n.get_ui();
}

}  // namespace

ZipSourcePtr explicit_zip_source(std::vector<TermPtr> arguments) {
  if (arguments.empty()) throw Error(ErrorCode::Malformed, "zip needs at least one argument");
  return std::make_shared<const ExplicitZipSource>(std::move(arguments));
}

TermPtr Term::zip_argument(const BigInt& j) const {
  const BigInt& d = zip_arity();
  BigInt k = number_ + j;
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
  return tail(zip_->argument(r), q);
}

bool operator==(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.number_ != b.number_ || a.name_ != b.name_) return false;
  if (a.kind_ == Kind::Zip) {
    if (a.zip_ == b.zip_) return true;
    const BigInt& d = a.zip_arity();
    if (d != b.zip_arity() || d > kMaxSpelledOut) return false;
    for (BigInt j = 0; j < d; ++j) {
      if (!(*a.zip_argument(j) == *b.zip_argument(j))) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < a.children_.size(); ++i) {
    if (!(*a.children_[i] == *b.children_[i])) return false;
  }
  return true;
}

TermPtr bullet() {
  static const TermPtr b = make(Kind::Bullet);
  return b;
}

TermPtr cons(TermPtr data, TermPtr stream) { return make(Kind::Cons, {std::move(data), std::move(stream)}); }

TermPtr head(TermPtr stream) { return make(Kind::Head, {std::move(stream)}); }

TermPtr tail(TermPtr stream, const BigInt& k) {
  if (sgn(k) < 0) throw Error(ErrorCode::Malformed, "negative tail count");
  if (k == 0) return stream;
  if (stream->kind() == Kind::Tail) return make(Kind::Tail, {stream->child(0)}, stream->number() + k);
  return make(Kind::Tail, {std::move(stream)}, k);
}

TermPtr mod(const BigInt& k, TermPtr stream) {
  if (sgn(k) <= 0) throw Error(ErrorCode::Malformed, "mod needs k >= 1");
  return make(Kind::Mod, {std::move(stream)}, k);
}

TermPtr zip(ZipSourcePtr source, const BigInt& offset) {
  return make(Kind::Zip, {}, offset, {}, std::move(source));
}

TermPtr zip(std::vector<TermPtr> arguments) { return zip(explicit_zip_source(std::move(arguments))); }

TermPtr root(std::string name) { return make(Kind::Root, {}, 0, std::move(name)); }

TermPtr var(std::string name) { return make(Kind::Var, {}, 0, std::move(name)); }

std::string to_tpdb(const Term& t) {
  switch (t.kind()) {
    case Kind::Bullet: return "bullet";
    case Kind::Cons: return "cons(" + to_tpdb(*t.child(0)) + "," + to_tpdb(*t.child(1)) + ")";
    case Kind::Head: return "head(" + to_tpdb(*t.child(0)) + ")";
    case Kind::Tail: {
      unsigned long k = spelled_out(t.number(), "tail count");
      std::string out;
      for (unsigned long i = 0; i < k; ++i) out += "tail(";
      out += to_tpdb(*t.child(0));
      out.append(k, ')');
      return out;
    }
    case Kind::Mod: return "mod" + to_string(t.number()) + "(" + to_tpdb(*t.child(0)) + ")";
    case Kind::Zip: {
      unsigned long d = spelled_out(t.zip_arity(), "zip arity");
      std::string out = "zip" + std::to_string(d) + "(";
      for (unsigned long j = 0; j < d; ++j) {
        if (j > 0) out += ",";
        out += to_tpdb(*t.zip_argument(from_u64(j)));
      }
      return out + ")";
    }
    case Kind::Root:
    case Kind::Var: return t.name();
  }
  return "?";
}

std::string to_compact(const Term& t) {
  switch (t.kind()) {
    case Kind::Bullet: return "bullet";
    case Kind::Cons: return "cons(" + to_compact(*t.child(0)) + "," + to_compact(*t.child(1)) + ")";
    case Kind::Head: return "head(" + to_compact(*t.child(0)) + ")";
    case Kind::Tail: {
      std::string inner = to_compact(*t.child(0));
      if (t.number() == 1) return "tail(" + inner + ")";
      return "tail^" + to_string(t.number()) + "(" + inner + ")";
    }
    case Kind::Mod: return "mod" + to_string(t.number()) + "(" + to_compact(*t.child(0)) + ")";
    case Kind::Zip: {
      std::string out = "zip" + to_string(t.zip_arity());
      if (t.number() != 0) out += "@" + to_string(t.number());
      return out;
    }
    case Kind::Root:
    case Kind::Var: return t.name();
  }
  return "?";
}

}  // namespace fractran::lsf
