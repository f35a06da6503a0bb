#include "cylmhd/expr_ops.hpp"

#include <algorithm>
#include <functional>

namespace cylmhd {

namespace {

Expr term_to_expr(const Term& t) {
  return Expr::from_terms({t});
}

Expr sum_to_expr(const std::vector<Term>& ts) {
  std::vector<Term> copy = ts;
  return Expr::from_terms(std::move(copy));
}

// d(atom) under total differentiation
Expr atom_total_derivative(const Atom& a, Dir d) {
  switch (a.kind) {
    case Atom::Kind::IndepT:
      return d == Dir::T ? Expr::one() : Expr::zero();
    case Atom::Kind::IndepX:
      return d == Dir::X ? Expr::one() : Expr::zero();
    case Atom::Kind::Const:
      return Expr::zero();
    case Atom::Kind::Jet:
      return Expr::jet(a.jet.field, a.jet.dt + (d == Dir::T ? 1 : 0),
                       a.jet.dx + (d == Dir::X ? 1 : 0));
    case Atom::Kind::Fn: {
      Expr acc = Expr::zero();
      for (size_t k = 0; k < a.fn->args.size(); ++k) {
        Expr da = total_derivative(a.fn->args[k], d);
        if (da.is_zero()) continue;
        std::vector<int> ords = a.fn->orders;
        ords[k] += 1;
        acc = acc + Expr::fn_partial(a.fn->name, a.fn->args, ords) * da;
      }
      return acc;
    }
  }
  return Expr::zero();
}

Expr term_total_derivative(const Term& t, Dir d) {
  Expr acc = Expr::zero();
  for (size_t i = 0; i < t.mono.size(); ++i) {
    Expr da = atom_total_derivative(t.mono[i].atom, d);
    if (da.is_zero()) continue;
    Term rest;
    rest.coef = t.coef * t.mono[i].exp;
    for (size_t j = 0; j < t.mono.size(); ++j) {
      if (j == i) {
        Scalar e = t.mono[j].exp - Scalar(1);
        if (!e.is_zero()) rest.mono.push_back({t.mono[j].atom, e});
      } else {
        rest.mono.push_back(t.mono[j]);
      }
    }
    acc = acc + term_to_expr(rest) * da;
  }
  return acc;
}

}  // namespace

Expr total_derivative(const Expr& e, Dir d) {
  const auto& den = e.den_terms();
  bool plain = den.size() == 1 && den[0].mono.empty() && den[0].coef.is_one();
  if (plain) {
    Expr acc = Expr::zero();
    for (auto& t : e.num_terms()) acc = acc + term_total_derivative(t, d);
    return acc;
  }
  Expr n = sum_to_expr(e.num_terms());
  Expr dd = sum_to_expr(e.den_terms());
  Expr dn = total_derivative(n, d);
  Expr ddd = total_derivative(dd, d);
  return (dn * dd - n * ddd) / (dd * dd);
}

Expr total_derivative(const Expr& e, Dir d, int times) {
  Expr r = e;
  for (int i = 0; i < times; ++i) r = total_derivative(r, d);
  return r;
}

Expr partial_derivative(const Expr& e, const Atom& a, bool chain) {
  const auto& den = e.den_terms();
  bool plain = den.size() == 1 && den[0].mono.empty() && den[0].coef.is_one();
  if (!plain) {
    Expr n = sum_to_expr(e.num_terms());
    Expr dd = sum_to_expr(e.den_terms());
    Expr dn = partial_derivative(n, a, chain);
    Expr ddd = partial_derivative(dd, a, chain);
    return (dn * dd - n * ddd) / (dd * dd);
  }
  Expr acc = Expr::zero();
  for (auto& t : e.num_terms()) {
    for (size_t i = 0; i < t.mono.size(); ++i) {
      const Factor& f = t.mono[i];
      Expr dfac = Expr::zero();
      if (f.atom == a) {
        dfac = Expr::one();
      } else if (chain && f.atom.kind == Atom::Kind::Fn) {
        for (size_t k = 0; k < f.atom.fn->args.size(); ++k) {
          Expr da = partial_derivative(f.atom.fn->args[k], a, chain);
          if (da.is_zero()) continue;
          std::vector<int> ords = f.atom.fn->orders;
          ords[k] += 1;
          dfac = dfac + Expr::fn_partial(f.atom.fn->name, f.atom.fn->args, ords) * da;
        }
      }
      if (dfac.is_zero()) continue;
      Term rest;
      rest.coef = t.coef * f.exp;
      for (size_t j = 0; j < t.mono.size(); ++j) {
        if (j == i) {
          Scalar ex = t.mono[j].exp - Scalar(1);
          if (!ex.is_zero()) rest.mono.push_back({t.mono[j].atom, ex});
        } else {
          rest.mono.push_back(t.mono[j]);
        }
      }
      acc = acc + term_to_expr(rest) * dfac;
    }
  }
  return acc;
}

namespace {

struct RuleMatcher {
  const JetRules& rules;
  // memo of differentiated right-hand sides: (rule index, extra dt, extra dx)
  std::map<std::tuple<size_t, int, int>, Expr> memo;

  explicit RuleMatcher(const JetRules& r) : rules(r) {}

  // best matching rule for a jet variable, or npos
  size_t match(const JetVar& v) const {
    size_t best = size_t(-1);
    int best_order = -1, best_dt = -1;
    for (size_t i = 0; i < rules.size(); ++i) {
      const JetVar& k = rules[i].first;
      if (k.field != v.field || k.dt > v.dt || k.dx > v.dx) continue;
      int order = k.dt + k.dx;
      if (order > best_order || (order == best_order && k.dt > best_dt)) {
        best = i;
        best_order = order;
        best_dt = k.dt;
      }
    }
    return best;
  }

  const Expr& replacement(size_t idx, const JetVar& v) {
    const JetVar& k = rules[idx].first;
    int ddt = v.dt - k.dt, ddx = v.dx - k.dx;
    auto key = std::make_tuple(idx, ddt, ddx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Expr r = rules[idx].second;
    r = total_derivative(r, Dir::T, ddt);
    r = total_derivative(r, Dir::X, ddx);
    return memo.emplace(key, std::move(r)).first->second;
  }
};

Expr substitute_impl(const Expr& e, RuleMatcher& m);

Expr substitute_term(const Term& t, RuleMatcher& m) {
  Expr acc = Expr::scalar(t.coef);
  for (auto& f : t.mono) {
    Expr base;
    bool replaced = false;
    if (f.atom.kind == Atom::Kind::Jet) {
      size_t idx = m.match(f.atom.jet);
      if (idx != size_t(-1)) {
        base = m.replacement(idx, f.atom.jet);
        replaced = true;
      }
    }
    if (!replaced && f.atom.kind == Atom::Kind::Fn) {
      std::vector<Expr> args;
      bool changed = false;
      for (auto& a : f.atom.fn->args) {
        Expr sa = substitute_impl(a, m);
        changed = changed || !(sa == a);
        args.push_back(std::move(sa));
      }
      if (changed) {
        base = Expr::fn_partial(f.atom.fn->name, std::move(args),
                                f.atom.fn->orders);
        replaced = true;
      }
    }
    if (!replaced) base = Expr::atom_expr(f.atom);
    acc = acc * base.pow(f.exp);
  }
  return acc;
}

Expr substitute_impl(const Expr& e, RuleMatcher& m) {
  Expr num = Expr::zero();
  for (auto& t : e.num_terms()) num = num + substitute_term(t, m);
  const auto& den = e.den_terms();
  if (den.size() == 1 && den[0].mono.empty() && den[0].coef.is_one())
    return num;
  Expr d = Expr::zero();
  for (auto& t : den) d = d + substitute_term(t, m);
  return num / d;
}

void check_acyclic(const JetRules& rules) {
  RuleMatcher m(rules);
  size_t n = rules.size();
  std::vector<std::vector<size_t>> adj(n);
  for (size_t i = 0; i < n; ++i) {
    for (const Atom& a : rules[i].second.atoms()) {
      if (a.kind != Atom::Kind::Jet) continue;
      size_t j = m.match(a.jet);
      if (j != size_t(-1)) adj[i].push_back(j);
    }
  }
  std::vector<int> state(n, 0);
  std::function<void(size_t)> dfs = [&](size_t v) {
    state[v] = 1;
    for (size_t w : adj[v]) {
      if (state[w] == 1) throw CyclicRules("cyclic substitution rules");
      if (state[w] == 0) dfs(w);
    }
    state[v] = 2;
  };
  for (size_t i = 0; i < n; ++i)
    if (state[i] == 0) dfs(i);
}

}  // namespace

Expr substitute(const Expr& e, const JetRules& rules) {
  check_acyclic(rules);
  return substitute_unchecked(e, rules);
}

Expr substitute_unchecked(const Expr& e, const JetRules& rules) {
  if (rules.empty()) return e;
  RuleMatcher m(rules);
  return substitute_impl(e, m);
}

namespace {

Expr substitute_fn_impl(const Expr& e, const std::map<std::string, Expr>& map);

Expr substitute_fn_term(const Term& t, const std::map<std::string, Expr>& map) {
  Expr acc = Expr::scalar(t.coef);
  for (auto& f : t.mono) {
    Expr base;
    if (f.atom.kind == Atom::Kind::Fn) {
      auto it = map.find(f.atom.fn->name);
      bool zero_orders =
          std::all_of(f.atom.fn->orders.begin(), f.atom.fn->orders.end(),
                      [](int o) { return o == 0; });
      if (it != map.end() && zero_orders) {
        base = it->second;
      } else {
        std::vector<Expr> args;
        for (auto& a : f.atom.fn->args)
          args.push_back(substitute_fn_impl(a, map));
        base = Expr::fn_partial(f.atom.fn->name, std::move(args),
                                f.atom.fn->orders);
      }
    } else {
      base = Expr::atom_expr(f.atom);
    }
    acc = acc * base.pow(f.exp);
  }
  return acc;
}

Expr substitute_fn_impl(const Expr& e, const std::map<std::string, Expr>& map) {
  Expr num = Expr::zero();
  for (auto& t : e.num_terms()) num = num + substitute_fn_term(t, map);
  const auto& den = e.den_terms();
  if (den.size() == 1 && den[0].mono.empty() && den[0].coef.is_one())
    return num;
  Expr d = Expr::zero();
  for (auto& t : den) d = d + substitute_fn_term(t, map);
  return num / d;
}

}  // namespace

Expr substitute_fn(const Expr& e, const std::map<std::string, Expr>& map) {
  if (map.empty()) return e;
  return substitute_fn_impl(e, map);
}

namespace {

Scalar scalar_substituted(const Scalar& s, const std::map<Sym, Rat>& vals) {
  Scalar r = s;
  for (auto& [sym, v] : vals)
    if (r.depends_on(sym)) r = r.substituted(sym, v);
  return r;
}

Expr subst_syms_term(const Term& t, const std::map<Sym, Rat>& vals) {
  Expr acc = Expr::scalar(scalar_substituted(t.coef, vals));
  for (auto& f : t.mono) {
    Scalar e = scalar_substituted(f.exp, vals);
    Expr base;
    if (f.atom.kind == Atom::Kind::Const && vals.count(f.atom.cst)) {
      if (!e.is_integer())
        throw ExprError("cannot bind constant under a symbolic exponent");
      base = Expr::rational(vals.at(f.atom.cst));
    } else if (f.atom.kind == Atom::Kind::Fn) {
      std::vector<Expr> args;
      for (auto& a : f.atom.fn->args) args.push_back(substitute_syms(a, vals));
      base = Expr::fn_partial(f.atom.fn->name, std::move(args),
                              f.atom.fn->orders);
    } else {
      base = Expr::atom_expr(f.atom);
    }
    acc = acc * base.pow(e);
  }
  return acc;
}

}  // namespace

Expr substitute_syms(const Expr& e, const std::map<Sym, Rat>& vals) {
  if (vals.empty()) return e;
  Expr num = Expr::zero();
  for (auto& t : e.num_terms()) num = num + subst_syms_term(t, vals);
  const auto& den = e.den_terms();
  if (den.size() == 1 && den[0].mono.empty() && den[0].coef.is_one())
    return num;
  Expr d = Expr::zero();
  for (auto& t : den) d = d + subst_syms_term(t, vals);
  return num / d;
}

Expr sym_derivative(const Expr& e, Sym s) {
  const auto& den = e.den_terms();
  bool plain = den.size() == 1 && den[0].mono.empty() && den[0].coef.is_one();
  if (!plain) {
    Expr n = Expr::from_terms(std::vector<Term>(e.num_terms()));
    Expr dd = Expr::from_terms(std::vector<Term>(e.den_terms()));
    return (sym_derivative(n, s) * dd - n * sym_derivative(dd, s)) / (dd * dd);
  }
  Expr acc = Expr::zero();
  for (auto& t : e.num_terms()) {
    // coefficient part
    Scalar dc = t.coef.derivative(s);
    if (!dc.is_zero()) {
      Term t2 = t;
      t2.coef = dc;
      acc = acc + Expr::from_terms({t2});
    }
    // factor part
    for (size_t i = 0; i < t.mono.size(); ++i) {
      const Factor& f = t.mono[i];
      if (f.exp.depends_on(s))
        throw ExprError("derivative w.r.t. a constant appearing in an exponent");
      Expr dfac = Expr::zero();
      if (f.atom.kind == Atom::Kind::Const && f.atom.cst == s) {
        dfac = Expr::one();
      } else if (f.atom.kind == Atom::Kind::Fn) {
        for (size_t k = 0; k < f.atom.fn->args.size(); ++k) {
          if (!f.atom.fn->args[k].depends_on_sym(s)) continue;
          std::vector<int> ords = f.atom.fn->orders;
          ords[k] += 1;
          dfac = dfac + Expr::fn_partial(f.atom.fn->name, f.atom.fn->args, ords) *
                            sym_derivative(f.atom.fn->args[k], s);
        }
      }
      if (dfac.is_zero()) continue;
      Term rest;
      rest.coef = t.coef * f.exp;
      for (size_t j = 0; j < t.mono.size(); ++j) {
        if (j == i) {
          Scalar ex = t.mono[j].exp - Scalar(1);
          if (!ex.is_zero()) rest.mono.push_back({t.mono[j].atom, ex});
        } else {
          rest.mono.push_back(t.mono[j]);
        }
      }
      acc = acc + Expr::from_terms({rest}) * dfac;
    }
  }
  return acc;
}

namespace {

Expr close_term_impl(const Term& t, const std::string& name,
                     const Expr& factor) {
  Expr acc = Expr::scalar(t.coef);
  for (auto& f : t.mono) {
    Expr base;
    if (f.atom.kind == Atom::Kind::Fn && f.atom.fn->name == name &&
        !f.atom.fn->orders.empty() && f.atom.fn->orders[0] > 0) {
      int n = f.atom.fn->orders[0];
      std::vector<int> zero(f.atom.fn->orders.size(), 0);
      base = factor.pow(n) * Expr::fn_partial(name, f.atom.fn->args, zero);
    } else if (f.atom.kind == Atom::Kind::Fn) {
      std::vector<Expr> args;
      for (auto& a : f.atom.fn->args)
        args.push_back(close_fn_derivatives(a, name, factor));
      base = Expr::fn_partial(f.atom.fn->name, std::move(args),
                              f.atom.fn->orders);
    } else {
      base = Expr::atom_expr(f.atom);
    }
    acc = acc * base.pow(f.exp);
  }
  return acc;
}

}  // namespace

Expr close_fn_derivatives(const Expr& e, const std::string& name,
                          const Expr& factor) {
  Expr num = Expr::zero();
  for (auto& t : e.num_terms()) num = num + close_term_impl(t, name, factor);
  if (!e.has_multiterm_den()) return num;
  Expr den = Expr::zero();
  for (auto& t : e.den_terms()) den = den + close_term_impl(t, name, factor);
  return num / den;
}

namespace {

Expr subst_atoms_term(const Term& t,
                      const std::vector<std::pair<Atom, Expr>>& rules) {
  Expr acc = Expr::scalar(t.coef);
  for (auto& f : t.mono) {
    Expr base;
    bool replaced = false;
    for (auto& [a, rep] : rules) {
      if (f.atom == a) {
        base = rep;
        replaced = true;
        break;
      }
    }
    if (!replaced && f.atom.kind == Atom::Kind::Fn) {
      std::vector<Expr> args;
      for (auto& arg : f.atom.fn->args)
        args.push_back(substitute_atoms(arg, rules));
      base = Expr::fn_partial(f.atom.fn->name, std::move(args),
                              f.atom.fn->orders);
    } else if (!replaced) {
      base = Expr::atom_expr(f.atom);
    }
    acc = acc * base.pow(f.exp);
  }
  return acc;
}

}  // namespace

Expr substitute_atoms(const Expr& e,
                      const std::vector<std::pair<Atom, Expr>>& rules) {
  Expr num = Expr::zero();
  for (auto& t : e.num_terms()) num = num + subst_atoms_term(t, rules);
  if (!e.has_multiterm_den()) return num;
  Expr den = Expr::zero();
  for (auto& t : e.den_terms()) den = den + subst_atoms_term(t, rules);
  return num / den;
}

}  // namespace cylmhd
