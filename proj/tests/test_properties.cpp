#include "doctest.h"

#include <cmath>

#include "cylmhd/eval.hpp"
#include "cylmhd/expr_ops.hpp"
#include "cylmhd/parse.hpp"
#include "cylmhd/random_expr.hpp"

using namespace cylmhd;

TEST_CASE("randomized differentiation / canonicalization properties") {
  RandomExprGen gen(kDefaultSeed);
  PropertyCounters counts = run_expr_properties(gen, 300);
  CHECK(counts.failures == 0);
  CHECK(counts.commute >= 50);
  CHECK(counts.fd >= 50);
  CHECK(counts.projection >= 50);
}

TEST_CASE("property run is deterministic under a fixed seed") {
  RandomExprGen g1(1234), g2(1234);
  Expr a = g1.next(), b = g2.next();
  CHECK(a == b);
  RandomExprGen g3(1235);
  // a different seed gives a different stream (overwhelmingly likely)
  bool differs = false;
  for (int i = 0; i < 4; ++i) differs = differs || !(g3.next() == g2.next());
  CHECK(differs);
}

TEST_CASE("Dt and Ds commute on hand-written corpus") {
  for (const char* s :
       {"rho^gamma*u_s", "sigma(rho,p)*u + t*s*v", "p/(r*rho)",
        "(u + v)^3/(rho - p)", "Htheta^2/(2*rho) + f1(s,p*rho^(-gamma))"}) {
    Expr e = parse_expr(s);
    Expr c = total_derivative(total_derivative(e, Dir::T), Dir::X) -
             total_derivative(total_derivative(e, Dir::X), Dir::T);
    CHECK(c.is_zero());
  }
}

TEST_CASE("substitution commutes with total differentiation") {
  JetRules rules;
  rules.push_back({JetVar{Field::U, 1, 0}, parse_expr("-rho*v_s + v^2/r")});
  rules.push_back({JetVar{Field::Rho, 1, 0}, parse_expr("-rho^2*(r_s*u + r*u_s)")});
  for (const char* s : {"u_t*rho", "u_t^2 + rho_t*u_s", "u_ts + rho_t/r"}) {
    Expr e = parse_expr(s);
    Expr a = total_derivative(substitute(e, rules), Dir::X);
    Expr b = substitute(total_derivative(e, Dir::X), rules);
    CHECK((a - b).is_zero());
  }
}
