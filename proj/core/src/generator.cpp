#include "cylmhd/generator.hpp"

namespace cylmhd {

Generator Generator::scaled(const Expr& c) const {
  Generator r = *this;
  r.xi_t = c * xi_t;
  r.xi_x = c * xi_x;
  for (auto& [f, e] : r.eta) e = c * e;
  for (auto& [n, e] : r.eta_fn) e = c * e;
  for (auto& [s, e] : r.eta_sym) e = c * e;
  return r;
}

Generator Generator::combine(
    std::string name, const std::vector<std::pair<Expr, Generator>>& parts) {
  Generator r;
  r.name = std::move(name);
  for (auto& [c, g] : parts) {
    Generator s = g.scaled(c);
    r.xi_t = r.xi_t + s.xi_t;
    r.xi_x = r.xi_x + s.xi_x;
    for (auto& [f, e] : s.eta) {
      auto it = r.eta.find(f);
      if (it == r.eta.end())
        r.eta[f] = e;
      else
        it->second = it->second + e;
    }
    for (auto& [n, e] : s.eta_fn) {
      auto it = r.eta_fn.find(n);
      if (it == r.eta_fn.end())
        r.eta_fn[n] = e;
      else
        it->second = it->second + e;
    }
    for (auto& [c2, e] : s.eta_sym) {
      auto it = r.eta_sym.find(c2);
      if (it == r.eta_sym.end())
        r.eta_sym[c2] = e;
      else
        it->second = it->second + e;
    }
  }
  return r;
}

GeneratorAction::GeneratorAction(Generator g, int max_order)
    : g_(std::move(g)), max_order_(max_order) {
  if (max_order_ < 1 || max_order_ > 2)
    throw UnsupportedOrder("prolongation order must be 1 or 2");
}

Expr GeneratorAction::jet_coefficient(const JetVar& v) {
  if (v.dt + v.dx > max_order_)
    throw UnsupportedOrder("jet variable beyond requested prolongation order");
  auto it = jet_coeff_.find(v);
  if (it != jet_coeff_.end()) return it->second;
  Expr res;
  if (v.dt == 0 && v.dx == 0) {
    res = g_.eta_of(v.field);
  } else {
    // peel one derivative off, t first
    Dir d = v.dt > 0 ? Dir::T : Dir::X;
    JetVar base{v.field, uint8_t(v.dt - (d == Dir::T)),
                uint8_t(v.dx - (d == Dir::X))};
    Expr prev = jet_coefficient(base);
    Expr ft = Expr::jet(v.field, base.dt + 1, base.dx);
    Expr fx = Expr::jet(v.field, base.dt, base.dx + 1);
    res = total_derivative(prev, d) - ft * total_derivative(g_.xi_t, d) -
          fx * total_derivative(g_.xi_x, d);
  }
  jet_coeff_.emplace(v, res);
  return res;
}

// Derivative in the argument space of an opaque element: treats the k-th
// argument as the base variable and the element (all orders) as dependent.
Expr GeneratorAction::arg_space_derivative(const Expr& e, const FnApp& app,
                                           size_t k) {
  const Expr& arg = app.args[k];
  auto aset = arg.atoms();
  if (aset.size() != 1)
    throw ExprError("equivalence element arguments must be single variables");
  Atom base = *aset.begin();
  Expr res = partial_derivative(e, base, /*chain=*/false);
  // chain through occurrences of the element itself
  for (const Atom& a : e.atoms()) {
    if (a.kind != Atom::Kind::Fn || a.fn->name != app.name) continue;
    std::vector<int> up = a.fn->orders;
    up[k] += 1;
    res = res + Expr::fn_partial(app.name, a.fn->args, up) *
                    partial_derivative(e, a, /*chain=*/false);
  }
  return res;
}

Expr GeneratorAction::fn_coefficient(const FnApp& app) {
  auto key = std::make_pair(app.name, app.orders);
  auto it = fn_coeff_.find(key);
  if (it != fn_coeff_.end()) return it->second;

  Expr res;
  bool zero_orders = true;
  for (int o : app.orders) zero_orders = zero_orders && o == 0;
  if (zero_orders) {
    res = g_.eta_fn.at(app.name);
  } else {
    // peel one argument-derivative off
    size_t k = 0;
    while (app.orders[k] == 0) ++k;
    FnApp base = app;
    base.orders[k] -= 1;
    Expr prev = fn_coefficient(base);
    res = arg_space_derivative(prev, app, k);
    for (size_t j = 0; j < app.args.size(); ++j) {
      std::vector<int> up = base.orders;
      up[j] += 1;
      Expr xi_j = apply(app.args[j]);  // generator action on the argument
      if (xi_j.is_zero()) continue;
      res = res - Expr::fn_partial(app.name, app.args, up) *
                      arg_space_derivative(xi_j, app, k);
    }
  }
  fn_coeff_.emplace(key, res);
  return res;
}

Expr GeneratorAction::apply(const Expr& F) {
  // top-level atoms only: variation of arguments of ordinary opaque
  // applications is handled recursively in the Fn branch
  std::set<Atom> tops;
  for (auto list : {&F.num_terms(), &F.den_terms()})
    for (auto& t : *list)
      for (auto& f : t.mono) tops.insert(f.atom);

  Expr acc = Expr::zero();
  for (const Atom& a : tops) {
    Expr coeff;
    switch (a.kind) {
      case Atom::Kind::IndepT:
        coeff = g_.xi_t;
        break;
      case Atom::Kind::IndepX:
        coeff = g_.xi_x;
        break;
      case Atom::Kind::Jet:
        coeff = jet_coefficient(a.jet);
        break;
      case Atom::Kind::Const:
        continue;  // handled below through eta_sym
      case Atom::Kind::Fn: {
        if (g_.eta_fn.count(a.fn->name)) {
          coeff = fn_coefficient(*a.fn);
        } else {
          // fixed function: chain rule through the arguments
          coeff = Expr::zero();
          for (size_t k = 0; k < a.fn->args.size(); ++k) {
            Expr da = apply(a.fn->args[k]);
            if (da.is_zero()) continue;
            std::vector<int> up = a.fn->orders;
            up[k] += 1;
            coeff = coeff + Expr::fn_partial(a.fn->name, a.fn->args, up) * da;
          }
        }
        break;
      }
    }
    if (coeff.is_zero()) continue;
    Expr dF = partial_derivative(F, a, /*chain=*/false);
    if (dF.is_zero()) continue;
    acc = acc + coeff * dF;
  }
  for (auto& [s, coeff] : g_.eta_sym) {
    if (!F.depends_on_sym(s) || coeff.is_zero()) continue;
    acc = acc + coeff * sym_derivative(F, s);
  }
  return acc;
}

}  // namespace cylmhd
