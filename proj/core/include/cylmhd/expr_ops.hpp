#pragma once

#include "cylmhd/expr.hpp"

namespace cylmhd {

struct CyclicRules : ExprError {
  using ExprError::ExprError;
};

// Total differentiation D_t / D_x on the jet space: jet orders of affected
// variables are incremented, chain/product/power rules applied, the result
// canonicalized.
Expr total_derivative(const Expr& e, Dir d);
Expr total_derivative(const Expr& e, Dir d, int times);

// Partial derivative with respect to one atom.  When `chain` is set,
// opaque applications are differentiated through their arguments
// (producing higher partial orders of the same function); otherwise every
// structurally distinct atom is treated as an independent symbol.
Expr partial_derivative(const Expr& e, const Atom& a, bool chain = true);

inline Atom jet_atom(Field f, int dt = 0, int dx = 0) {
  Atom a;
  a.kind = Atom::Kind::Jet;
  a.jet = JetVar{f, uint8_t(dt), uint8_t(dx)};
  return a;
}
inline Atom indep_atom(Dir d) {
  Atom a;
  a.kind = d == Dir::T ? Atom::Kind::IndepT : Atom::Kind::IndepX;
  return a;
}
inline Atom const_atom(Sym s) {
  Atom a;
  a.kind = Atom::Kind::Const;
  a.cst = s;
  return a;
}

using JetRules = std::vector<std::pair<JetVar, Expr>>;

// Simultaneous substitution of jet variables followed by canonicalization.
// A variable matches a rule key when its derivative orders dominate the
// key's; the replacement is then the correspondingly differentiated
// right-hand side (so {u_t -> v} sends u_ts to v_s).  Rule sets whose
// dependency graph has a cycle are rejected.
Expr substitute(const Expr& e, const JetRules& rules);

// Same, without the cycle check (used by the manifold reduction loop,
// which iterates on purpose).
Expr substitute_unchecked(const Expr& e, const JetRules& rules);

// Replaces zero-order applications of the named opaque functions by closed
// expressions (the application arguments are discarded).
Expr substitute_fn(const Expr& e, const std::map<std::string, Expr>& map);

// Binds symbolic constants to exact rationals and re-canonicalizes.
Expr substitute_syms(const Expr& e, const std::map<Sym, Rat>& vals);

// Derivative of an expression with respect to a symbolic constant.  Rejects
// expressions carrying the constant inside an exponent.
Expr sym_derivative(const Expr& e, Sym s);

// Replaces derivative applications of a single-argument opaque function by
// factor^n times the zero-order application (closure for exponential
// profile factors, D^n exp(qs) = q^n exp(qs)).
Expr close_fn_derivatives(const Expr& e, const std::string& name,
                          const Expr& factor);

// Simultaneous exact-match atom substitution (no derivative extension);
// used for point transformations and coordinate renamings.
Expr substitute_atoms(const Expr& e,
                      const std::vector<std::pair<Atom, Expr>>& rules);

}  // namespace cylmhd
