#include "cylmhd/eval.hpp"

#include <cmath>

namespace cylmhd {

namespace {

uint64_t fnv1a(const std::string& s, uint64_t h = 0xcbf29ce484222325ULL) {
  for (char c : s) {
    h ^= uint64_t(uint8_t(c));
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Enumerates multi-indices of total degree <= deg over n slots.
void enumerate(int n, int deg, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& fn) {
  if ((int)cur.size() == n) {
    fn(cur);
    return;
  }
  for (int d = 0; d <= deg; ++d) {
    cur.push_back(d);
    enumerate(n, deg - d, cur, fn);
    cur.pop_back();
  }
}

double falling(int d, int o) {
  double r = 1;
  for (int i = 0; i < o; ++i) r *= (d - i);
  return r;
}

}  // namespace

double standin_value(const std::string& name, const std::vector<int>& orders,
                     const std::vector<double>& args, uint64_t seed) {
  const int kDeg = 3;
  int n = int(args.size());
  double acc = 0;
  std::vector<int> cur;
  enumerate(n, kDeg, cur, [&](const std::vector<int>& d) {
    uint64_t h = fnv1a(name, seed ^ 0x9e3779b97f4a7c15ULL);
    for (int di : d) h = h * 1099511628211ULL + uint64_t(di + 1);
    SplitMix sm(h);
    double c = 0.3 + sm.uniform01();
    double term = c;
    for (int i = 0; i < n; ++i) {
      int o = i < (int)orders.size() ? orders[i] : 0;
      if (d[i] < o) {
        term = 0;
        break;
      }
      term *= falling(d[i], o);
      for (int k = 0; k < d[i] - o; ++k) term *= args[i];
    }
    acc += term;
  });
  return acc;
}

namespace {

struct Evaluator {
  const EvalContext& ctx;

  double atom(const Atom& a) const {
    switch (a.kind) {
      case Atom::Kind::IndepT:
        if (!ctx.has_t) throw UnboundSymbol("unbound independent variable t");
        return ctx.t;
      case Atom::Kind::IndepX:
        if (!ctx.has_x) throw UnboundSymbol("unbound independent variable s");
        return ctx.x;
      case Atom::Kind::Const:
        if (!ctx.syms_bound.test(int(a.cst)))
          throw UnboundSymbol(std::string("unbound constant ") +
                              sym_name(a.cst));
        return ctx.syms[int(a.cst)];
      case Atom::Kind::Jet: {
        auto it = ctx.jets.find(a.jet);
        if (it == ctx.jets.end()) {
          std::string n = field_name(a.jet.field);
          throw UnboundSymbol("unbound jet variable " + n + "(+" +
                              std::to_string(a.jet.dt) + "," +
                              std::to_string(a.jet.dx) + ")");
        }
        return it->second;
      }
      case Atom::Kind::Fn: {
        std::vector<double> argv;
        argv.reserve(a.fn->args.size());
        for (auto& arg : a.fn->args) argv.push_back(expr(arg));
        if (ctx.fn_eval) return ctx.fn_eval(*a.fn, argv);
        return standin_value(a.fn->name, a.fn->orders, argv, ctx.standin_seed);
      }
    }
    return 0;
  }

  void check_scalar_dens(const Scalar& s) const {
    if (s.den().empty()) return;
    double mn = s.min_den_magnitude(require_syms(s));
    guard_den(mn);
  }

  std::array<double, kNumSyms> require_syms(const Scalar& s) const {
    for (int i = 0; i < kNumSyms; ++i)
      if (s.depends_on(Sym(i)) && !ctx.syms_bound.test(i))
        throw UnboundSymbol(std::string("unbound constant ") + sym_name(Sym(i)));
    return ctx.syms;
  }

  void guard_den(double v) const {
    if (ctx.reject_tol > 0 && std::abs(v) < ctx.reject_tol)
      throw RejectSample("denominator too close to zero");
    if (v == 0) throw DomainError("division by zero");
  }

  double scalar(const Scalar& s) const {
    auto vals = require_syms(s);
    check_scalar_dens(s);
    return s.eval(vals);
  }

  double power(double base, const Scalar& e) const {
    double ev = scalar(e);
    if (e.is_integer()) {
      if (base == 0 && ev < 0) guard_den(0);
      if (ctx.reject_tol > 0 && ev < 0 && std::abs(base) < ctx.reject_tol)
        throw RejectSample("negative power of near-zero base");
      return std::pow(base, ev);
    }
    if (base < 0)
      throw DomainError("negative base with non-integer exponent");
    if (base == 0 && ev < 0) guard_den(0);
    if (ctx.reject_tol > 0 && std::abs(base) < ctx.reject_tol && ev < 0)
      throw RejectSample("negative power of near-zero base");
    return std::pow(base, ev);
  }

  double term(const Term& t) const {
    double acc = scalar(t.coef);
    for (auto& f : t.mono) acc *= power(atom(f.atom), f.exp);
    return acc;
  }

  double expr(const Expr& e) const {
    double num = 0;
    for (auto& t : e.num_terms()) num += term(t);
    if (!e.has_multiterm_den()) return num;
    double den = 0;
    for (auto& t : e.den_terms()) den += term(t);
    guard_den(den);
    return num / den;
  }
};

}  // namespace

double eval_numeric(const Expr& e, const EvalContext& ctx) {
  Evaluator ev{ctx};
  return ev.expr(e);
}

TermEvalResult eval_parts(const Expr& e, const EvalContext& ctx) {
  Evaluator ev{ctx};
  TermEvalResult r;
  for (auto& t : e.num_terms()) {
    double v = ev.term(t);
    r.num_sum += v;
    r.max_abs_term = std::max(r.max_abs_term, std::abs(v));
  }
  if (e.has_multiterm_den()) {
    r.den = 0;
    for (auto& t : e.den_terms()) r.den += ev.term(t);
    ev.guard_den(r.den);
  }
  r.value = r.num_sum / r.den;
  return r;
}

}  // namespace cylmhd
