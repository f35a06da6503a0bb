#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cylmhd/scalar.hpp"

namespace cylmhd {

// Dependent fields of the cylindrical MHD systems plus the Lagrangian
// potentials.  S is the entropy function p/rho^gamma treated as a field.
enum class Field : uint8_t {
  U, V, W, Rho, P, S, Htheta, Hz, Etheta, Ez, R, Theta, Z, Phi, Psi, Chi
};
inline constexpr int kNumFields = 16;

const char* field_name(Field f);
std::optional<Field> field_from_name(const std::string& name);

// Independent directions of the base space: T is time, X is the spatial
// coordinate (the mass coordinate s for Lagrangian systems, the radius r
// for the Eulerian ones).
enum class Dir : uint8_t { T, X };

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct JetOrderError : ExprError {
  using ExprError::ExprError;
};

// Total derivative order cap for intermediates; nothing in the checks needs
// mixed derivatives beyond this.
inline constexpr int kMaxJetOrder = 4;

struct JetVar {
  Field field;
  uint8_t dt = 0;
  uint8_t dx = 0;
  auto operator<=>(const JetVar&) const = default;
};

class Expr;

struct FnApp {
  std::string name;
  std::vector<Expr> args;
  std::vector<int> orders;  // partial-derivative order per argument
};

struct Atom {
  enum class Kind : uint8_t { IndepT, IndepX, Jet, Const, Fn };
  Kind kind = Kind::IndepT;
  JetVar jet{};
  Sym cst{};
  std::shared_ptr<const FnApp> fn;

  static int compare(const Atom& a, const Atom& b);
  bool operator==(const Atom& o) const { return compare(*this, o) == 0; }
  bool operator<(const Atom& o) const { return compare(*this, o) < 0; }
  std::size_t hash() const;
};

struct Factor {
  Atom atom;
  Scalar exp;
  bool operator==(const Factor& o) const {
    return atom == o.atom && exp == o.exp;
  }
};

struct Term {
  Scalar coef;
  std::vector<Factor> mono;  // sorted by atom, exponents nonzero
  bool operator==(const Term& o) const {
    return coef == o.coef && mono == o.mono;
  }
};

// Immutable symbolic expression in canonical form: a quotient of two
// term-sums.  The denominator is {1} except when division by a multi-term
// sum occurred; single-term denominators are always folded into the
// numerator as negative exponents.
class Expr {
 public:
  Expr() : Expr(zero()) {}

  static Expr zero();
  static Expr one();
  static Expr num(long long v);
  static Expr rational(const Rat& v);
  static Expr scalar(const Scalar& s);
  static Expr constant(Sym s);
  static Expr indep(Dir d);
  static Expr jet(Field f, int dt = 0, int dx = 0);
  static Expr jet(const JetVar& v);
  static Expr fn(const std::string& name, std::vector<Expr> args);
  static Expr fn_partial(const std::string& name, std::vector<Expr> args,
                         std::vector<int> orders);
  static Expr atom_expr(const Atom& a);

  bool is_zero() const;
  bool is_one() const;
  // True when the expression is a bare scalar (no atoms).
  bool is_scalar() const;
  Scalar scalar_value() const;

  const std::vector<Term>& num_terms() const;
  const std::vector<Term>& den_terms() const;
  bool has_multiterm_den() const { return den_terms().size() > 1; }

  Expr operator+(const Expr& o) const;
  Expr operator-(const Expr& o) const;
  Expr operator*(const Expr& o) const;
  Expr operator/(const Expr& o) const;
  Expr operator-() const;

  // base^e with e a constant scalar.  Non-integer exponents require a
  // monomial base with unit coefficient (all bases here are positive).
  Expr pow(const Scalar& e) const;
  Expr pow(long long n) const { return pow(Scalar(Rat(n))); }

  bool operator==(const Expr& o) const;
  bool operator!=(const Expr& o) const { return !(*this == o); }
  static int compare(const Expr& a, const Expr& b);
  std::size_t hash() const;

  void collect_atoms(std::set<Atom>& out) const;
  std::set<Atom> atoms() const;
  bool depends_on_sym(Sym s) const;

  static Expr from_terms(std::vector<Term> num, std::vector<Term> den);
  static Expr from_terms(std::vector<Term> num);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit Expr(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

inline Expr operator+(long long a, const Expr& b) { return Expr::num(a) + b; }
inline Expr operator-(long long a, const Expr& b) { return Expr::num(a) - b; }
inline Expr operator*(long long a, const Expr& b) { return Expr::num(a) * b; }
inline Expr operator/(long long a, const Expr& b) { return Expr::num(a) / b; }
inline Expr operator+(const Expr& a, long long b) { return a + Expr::num(b); }
inline Expr operator-(const Expr& a, long long b) { return a - Expr::num(b); }
inline Expr operator*(const Expr& a, long long b) { return a * Expr::num(b); }
inline Expr operator/(const Expr& a, long long b) { return a / Expr::num(b); }
inline Expr operator*(const Scalar& a, const Expr& b) {
  return Expr::scalar(a) * b;
}

}  // namespace cylmhd
