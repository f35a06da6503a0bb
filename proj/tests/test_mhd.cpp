#include "doctest.h"

#include "cylmhd/mhd.hpp"
#include "cylmhd/parse.hpp"

using namespace cylmhd;

namespace {
Expr P(const std::string& s) { return parse_expr(s); }
}

TEST_CASE("finite A system has ten solved leading derivatives") {
  PdeSystem sys = build_system(ModelConfig{}, Regime::finite_A());
  int t_keys = 0;
  for (auto& [k, rhs] : sys.solved)
    if (k.dt == 1 && k.dx == 0) ++t_keys;
  CHECK(t_keys == 10);
  // E eliminated algebraically
  int alg = 0;
  for (auto& [k, rhs] : sys.solved)
    if (k.dt == 0 && k.dx == 0) ++alg;
  CHECK(alg == 2);
}

TEST_CASE("solved form satisfies its own residuals") {
  for (auto regime : {Regime::finite_A(), Regime::finite_A0(),
                      Regime::infinite_A(), Regime::infinite_A0()}) {
    ModelConfig cfg = regime.cond == Conductivity::Finite
                          ? ModelConfig{}
                          : ModelConfig::infinite();
    PdeSystem sys = build_system(cfg, regime);
    for (const Expr& res : sys.residuals) {
      CAPTURE(sys.name);
      CHECK(reduce_on_manifold(res, sys).is_zero());
    }
  }
}

TEST_CASE("invalid configurations are rejected") {
  ModelConfig bad;
  bad.gamma = rat(1);
  CHECK_THROWS_AS(build_system(bad, Regime::finite_A()), InvalidConfig);
  CHECK_THROWS_AS(build_system(ModelConfig{}, Regime::infinite_A()),
                  InvalidConfig);
  CHECK_THROWS_AS(build_system(ModelConfig::infinite(), Regime::finite_A()),
                  InvalidConfig);
  ConductivityModel m;
  m.kind = SigmaKind::RhoPowFP;
  m.alpha = rat(1);
  m.beta = rat(1);  // 2*alpha - beta - 1 = 0
  CHECK_THROWS_AS(m.validate(), InvalidConfig);
}

TEST_CASE("reduced A=0 equations take the stated form") {
  PdeSystem sys = build_system(ModelConfig::infinite(), Regime::infinite_A0());
  for (auto& [k, rhs] : sys.solved) {
    if (k.field == Field::V && k.dt == 1)
      CHECK((rhs - P("-u*v/r")).is_zero());
    if (k.field == Field::Htheta && k.dt == 1)
      CHECK((rhs - P("-r*rho*Htheta*u_s")).is_zero());
  }
  // no radial field component left anywhere for A = 0
  for (auto& r : sys.residuals) CHECK(!r.depends_on_sym(Sym::A));
}

TEST_CASE("mass conservation reduces to zero on the manifold") {
  PdeSystem sys = build_system(ModelConfig{}, Regime::finite_A());
  Expr law = total_derivative(P("1/rho"), Dir::T) -
             total_derivative(P("r*u"), Dir::X);
  CHECK(is_zero_on_manifold(law, sys));
  CHECK_FALSE(is_zero_on_manifold(Expr::one(), sys));
}

TEST_CASE("angular momentum with H^r = A/r reduces to zero") {
  PdeSystem sys = build_system(ModelConfig{}, Regime::finite_A());
  Expr law = total_derivative(P("r*v"), Dir::T) -
             total_derivative(P("r^2*(A/r)*Htheta"), Dir::X);
  CHECK(is_zero_on_manifold(law, sys));
}

TEST_CASE("entropy behaviour per regime") {
  Expr S = entropy_expr();
  CHECK((substitute(S, {{JetVar{Field::P, 0, 0}, P("rho^gamma")}}) -
         Expr::one())
            .is_zero());
  PdeSystem inf = build_system(ModelConfig::infinite(), Regime::infinite_A());
  CHECK(is_zero_on_manifold(total_derivative(S, Dir::T), inf));
  PdeSystem fin = build_system(ModelConfig{}, Regime::finite_A());
  CHECK_FALSE(is_zero_on_manifold(total_derivative(S, Dir::T), fin));
}

TEST_CASE("flux forms are conservation laws on the manifold") {
  for (auto regime : {Regime::finite_A(), Regime::finite_A0(),
                      Regime::infinite_A(), Regime::infinite_A0()}) {
    ModelConfig cfg = regime.cond == Conductivity::Finite
                          ? ModelConfig{}
                          : ModelConfig::infinite();
    PdeSystem sys = build_system(cfg, regime);
    auto pairs = flux_forms(regime);
    REQUIRE(pairs.size() == 2);
    for (auto& [dens, flux] : pairs) {
      Expr law = total_derivative(dens, Dir::T) -
                 total_derivative(flux, Dir::X);
      CAPTURE(sys.name);
      CHECK(is_zero_on_manifold(law, sys));
    }
  }
  // the A=0 infinite pair has identically vanishing flux
  auto pairs = flux_forms(Regime::infinite_A0());
  CHECK(pairs[0].second.is_zero());
  CHECK(pairs[1].second.is_zero());
}

TEST_CASE("w,z subsystem decouples and is solved in closed form") {
  PdeSystem sys = build_system(ModelConfig{}, Regime::finite_A0());
  for (auto& [k, rhs] : sys.solved) {
    if (k.field == Field::W && k.dt == 1) CHECK(rhs.is_zero());
    if (k.field == Field::Z && k.dt == 1)
      CHECK((rhs - Expr::jet(Field::W)).is_zero());
  }
  // closed-form solution w = w0(s), z = w0(s) t + z0(s) satisfies both
  Expr w0 = Expr::fn("h", {Expr::indep(Dir::X)});
  Expr z0 = Expr::fn("h2", {Expr::indep(Dir::X)});
  Expr w_sol = w0, z_sol = w0 * Expr::indep(Dir::T) + z0;
  CHECK(total_derivative(w_sol, Dir::T).is_zero());
  CHECK((total_derivative(z_sol, Dir::T) - w_sol).is_zero());
}

TEST_CASE("eulerian system is self-consistent") {
  PdeSystem esys = build_euler_system(ModelConfig{}, Regime::finite_A());
  for (const Expr& res : esys.residuals)
    CHECK(reduce_on_manifold(res, esys).is_zero());
}
