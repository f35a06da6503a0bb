#include "cylmhd/manifold.hpp"

#include <algorithm>
#include <cmath>

namespace cylmhd {

namespace {

bool any_reducible(const Expr& e, const JetRules& rules) {
  for (const Atom& a : e.atoms()) {
    if (a.kind != Atom::Kind::Jet) continue;
    for (auto& [k, rhs] : rules)
      if (k.field == a.jet.field && k.dt <= a.jet.dt && k.dx <= a.jet.dx)
        return true;
  }
  return false;
}

}  // namespace

Expr PdeSystem::close(Expr e) const {
  for (auto& [name, factor] : fn_closures)
    e = close_fn_derivatives(e, name, factor);
  return e;
}

Expr reduce_on_manifold(const Expr& e, const PdeSystem& sys,
                        const ZeroTestOptions& opt) {
  JetRules rules = sys.solved;
  if (opt.use_nonlocal)
    rules.insert(rules.end(), sys.nonlocal.begin(), sys.nonlocal.end());
  Expr cur = sys.close(e);
  if (!opt.bind_syms.empty()) {
    cur = substitute_syms(cur, opt.bind_syms);
    for (auto& r : rules) r.second = substitute_syms(r.second, opt.bind_syms);
  }
  for (int pass = 0; pass < opt.max_passes; ++pass) {
    if (!any_reducible(cur, rules)) return cur;
    cur = sys.close(substitute_unchecked(cur, rules));
    if (!opt.bind_syms.empty()) cur = substitute_syms(cur, opt.bind_syms);
  }
  throw ReductionDiverged("manifold reduction did not terminate");
}

double max_numeric_residual(const Expr& reduced, uint64_t seed, int samples,
                            double lo, double hi, double den_tol) {
  std::set<Atom> atoms = reduced.atoms();
  SplitMix rng(seed);
  double worst = 0;
  int drawn = 0, attempts = 0;
  const int max_attempts = samples * 50 + 100;
  while (drawn < samples && attempts < max_attempts) {
    ++attempts;
    EvalContext ctx;
    ctx.reject_tol = den_tol;
    ctx.standin_seed = seed;
    ctx.bind_t(rng.uniform(lo, hi));
    ctx.bind_x(rng.uniform(lo, hi));
    for (int i = 0; i < kNumSyms; ++i) ctx.bind(Sym(i), rng.uniform(lo, hi));
    for (const Atom& a : atoms)
      if (a.kind == Atom::Kind::Jet) ctx.bind(a.jet, rng.uniform(lo, hi));
    try {
      TermEvalResult r = eval_parts(reduced, ctx);
      double rel = std::abs(r.num_sum) / std::max(1.0, r.max_abs_term);
      worst = std::max(worst, rel);
      ++drawn;
    } catch (const RejectSample&) {
      continue;
    }
  }
  if (drawn < samples)
    throw EvalError("could not draw enough admissible sample points");
  return worst;
}

ZeroResult is_zero_on_manifold_detail(const Expr& e, const PdeSystem& sys,
                                      const ZeroTestOptions& opt) {
  Expr reduced = reduce_on_manifold(e, sys, opt);
  if (reduced.is_zero()) return {true, ZeroMethod::Symbolic, 0.0};
  if (!opt.allow_numeric) return {false, ZeroMethod::Symbolic, 0.0};
  double worst = max_numeric_residual(reduced, opt.seed, opt.samples, opt.lo,
                                      opt.hi, opt.den_tol);
  if (worst <= opt.pass_tol) return {true, ZeroMethod::Numeric, worst};
  if (worst < opt.fail_tol) throw InconclusiveZeroTest(worst);
  return {false, ZeroMethod::Numeric, worst};
}

bool is_zero_on_manifold(const Expr& e, const PdeSystem& sys,
                         const ZeroTestOptions& opt) {
  return is_zero_on_manifold_detail(e, sys, opt).zero;
}

}  // namespace cylmhd
