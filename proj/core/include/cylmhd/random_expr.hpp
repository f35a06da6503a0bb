#pragma once

#include <cmath>

#include "cylmhd/eval.hpp"
#include "cylmhd/expr_ops.hpp"

namespace cylmhd {

// Seeded random expression source for the property suites.  Leaves are jet
// variables of low order, the independent variables, gamma, rationals and
// an occasional opaque application; operators are +, -, *, / and small
// integer powers.
class RandomExprGen {
 public:
  explicit RandomExprGen(uint64_t seed) : rng_(seed) {}

  Expr next() { return build(3); }

  SplitMix& rng() { return rng_; }

 private:
  SplitMix rng_;

  Expr leaf() {
    switch (rng_.next() % 10) {
      case 0:
        return Expr::indep(Dir::T);
      case 1:
        return Expr::indep(Dir::X);
      case 2:
        return Expr::constant(Sym::Gamma);
      case 3:
        return Expr::rational(rat(long(rng_.next() % 7) + 1,
                                  long(rng_.next() % 3) + 1));
      case 4:
        return Expr::fn("sigma", {Expr::jet(Field::Rho), Expr::jet(Field::P)});
      default: {
        Field fs[] = {Field::U, Field::V, Field::Rho, Field::P, Field::Htheta};
        Field f = fs[rng_.next() % 5];
        int dt = int(rng_.next() % 2), dx = int(rng_.next() % 2);
        return Expr::jet(f, dt, dx);
      }
    }
  }

  Expr build(int depth) {
    if (depth == 0 || rng_.next() % 4 == 0) return leaf();
    Expr a = build(depth - 1);
    Expr b = build(depth - 1);
    switch (rng_.next() % 5) {
      case 0:
        return a + b;
      case 1:
        return a - b;
      case 2:
        return a * b;
      case 3: {
        if (b.is_zero()) return a;
        return a / b;
      }
      default: {
        long long k = (long long)(rng_.next() % 5) - 2;
        if (a.is_zero() && k <= 0) return a;
        return a.pow(k);
      }
    }
  }
};

struct PropertyCounters {
  long long cases = 0;
  long long failures = 0;
  long long commute = 0;
  long long fd = 0;
  long long projection = 0;
  long long numeq = 0;
};

namespace detail {

// Binds every jet variable occurring in `e` to the exact derivative of a
// smooth polynomial trajectory in (t, s), so total derivatives can be
// checked against centered finite differences.
inline void bind_trajectory(EvalContext& ctx, const Expr& e, double t, double s,
                            uint64_t seed) {
  ctx.bind_t(t);
  ctx.bind_x(s);
  ctx.bind(Sym::Gamma, 1.4);
  Expr T = Expr::indep(Dir::T), S = Expr::indep(Dir::X);
  for (const Atom& a : e.atoms()) {
    if (a.kind != Atom::Kind::Jet) continue;
    Field f = a.jet.field;
    SplitMix c(seed ^ (uint64_t(f) * 0x9e37u));
    // trajectory 2 + a1*t*s + a2*s^2 + a3*t^2 (positive near the sample box)
    Expr traj = Expr::num(2) +
                Expr::rational(Rat(long(c.next() % 5) + 1, 7)) * T * S +
                Expr::rational(Rat(long(c.next() % 5) + 1, 9)) * S * S +
                Expr::rational(Rat(long(c.next() % 5) + 1, 11)) * T * T;
    Expr d = total_derivative(total_derivative(traj, Dir::T, a.jet.dt), Dir::X,
                              a.jet.dx);
    EvalContext base;
    base.bind_t(t);
    base.bind_x(s);
    ctx.bind(a.jet, eval_numeric(d, base));
  }
}

}  // namespace detail

// Runs `n` randomized property cases: canonical projection, commutation of
// the total derivatives, structural-equality => numeric-equality, and
// finite-difference cross-checks of D_t.  Returns counters; failures==0
// means every exercised property held.
inline PropertyCounters run_expr_properties(RandomExprGen& gen, long long n) {
  PropertyCounters pc;
  for (long long i = 0; i < n; ++i) {
    ++pc.cases;
    Expr e;
    try {
      e = gen.next();
    } catch (const ExprError&) {
      continue;  // degenerate draw (zero division, deep powers)
    } catch (const ScalarError&) {
      continue;  // constant-degree cap hit by stacked products
    }
    int which = int(gen.rng().next() % 3);
    try {
      if (which == 0) {
        // canonicalize is a projection: rebuilding canonical output is a no-op
        Expr r = (e + Expr::zero()) * Expr::one();
        if (!(r == e)) ++pc.failures;
        ++pc.projection;
      } else if (which == 1) {
        Expr c = total_derivative(total_derivative(e, Dir::T), Dir::X) -
                 total_derivative(total_derivative(e, Dir::X), Dir::T);
        if (!c.is_zero()) ++pc.failures;
        ++pc.commute;
      } else {
        Expr de = total_derivative(e, Dir::T);
        double t = 0.6 + 0.8 * gen.rng().uniform01();
        double s = 0.6 + 0.8 * gen.rng().uniform01();
        double h = 1e-5;
        uint64_t seed = gen.rng().next();
        double vd, fd1, fd2;
        try {
          EvalContext c0;
          detail::bind_trajectory(c0, e, t, s, seed);
          detail::bind_trajectory(c0, de, t, s, seed);
          vd = eval_numeric(de, c0);
          auto centered = [&](double step) {
            EvalContext cp, cm;
            detail::bind_trajectory(cp, e, t + step, s, seed);
            detail::bind_trajectory(cm, e, t - step, s, seed);
            return (eval_numeric(e, cp) - eval_numeric(e, cm)) / (2 * step);
          };
          fd1 = centered(h);
          fd2 = centered(h / 2);
        } catch (const DomainError&) {
          continue;  // singular sample
        }
        if (!std::isfinite(fd1) || !std::isfinite(fd2) || !std::isfinite(vd))
          continue;
        double scale = std::max({1.0, std::abs(vd), std::abs(fd1)});
        // trust the difference quotient only where it is self-consistent
        if (std::abs(fd2 - fd1) / scale > 1e-7) continue;
        double fd = (4 * fd2 - fd1) / 3;
        if (std::abs(fd - vd) / scale > 1e-6) ++pc.failures;
        ++pc.fd;
      }
    } catch (const JetOrderError&) {
      continue;  // drew an expression already at the derivative cap
    } catch (const ScalarError&) {
      continue;
    }
  }
  return pc;
}

}  // namespace cylmhd
