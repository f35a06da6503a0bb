#pragma once

#include "cylmhd/manifold.hpp"

namespace cylmhd {

struct UnsupportedOrder : ExprError {
  using ExprError::ExprError;
};

// Lie point generator.  Coefficients are expressions in the independent and
// dependent variables (jet order 0 only).  The optional maps carry
// equivalence-group directions: transformations of arbitrary elements
// (opaque functions of their stated arguments) and of model constants.
struct Generator {
  std::string name;
  Expr xi_t = Expr::zero();
  Expr xi_x = Expr::zero();
  std::map<Field, Expr> eta;
  std::map<std::string, Expr> eta_fn;
  std::map<Sym, Expr> eta_sym;

  Expr eta_of(Field f) const {
    auto it = eta.find(f);
    return it == eta.end() ? Expr::zero() : it->second;
  }
  Generator scaled(const Expr& c) const;
  // linear combination helper
  static Generator combine(std::string name,
                           const std::vector<std::pair<Expr, Generator>>& parts);
};

// Prolongs a generator and applies it to expressions.  Jet coefficients are
// produced by the standard recursion
//   eta^{J,d} = D_d(eta^J) - f_{J+t} D_d(xi^t) - f_{J+x} D_d(xi^x)
// and cached.  Opaque applications transform by the chain rule through
// their arguments, unless the function is an equivalence direction, in
// which case its coefficient is prolonged over the argument space.
class GeneratorAction {
 public:
  GeneratorAction(Generator g, int max_order = 2);

  Expr apply(const Expr& F);

  // First-prolongation coefficient for a jet variable (exposed for the
  // cross-check tests).
  Expr jet_coefficient(const JetVar& v);

 private:
  Generator g_;
  int max_order_;
  std::map<JetVar, Expr> jet_coeff_;
  std::map<std::pair<std::string, std::vector<int>>, Expr> fn_coeff_;

  Expr fn_coefficient(const FnApp& app);
  Expr arg_space_derivative(const Expr& e, const FnApp& app, size_t k);
};

inline Expr apply_generator(const Generator& g, const Expr& F,
                            int max_order = 2) {
  GeneratorAction act(g, max_order);
  return act.apply(F);
}

}  // namespace cylmhd
