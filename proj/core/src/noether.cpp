#include "cylmhd/noether.hpp"

namespace cylmhd {

namespace {

Expr J(Field f, int dt = 0, int dx = 0) { return Expr::jet(f, dt, dx); }
Expr T() { return Expr::indep(Dir::T); }
Expr S() { return Expr::indep(Dir::X); }
Expr Ds(const Expr& e) { return total_derivative(e, Dir::X); }
Expr C(Sym s) { return Expr::constant(s); }

const Expr kHalf = Expr::rational(rat(1, 2));

Expr close(const Expr& e, const std::vector<Profile>& profiles) {
  return close_profile_derivatives(e, profiles);
}

}  // namespace

std::vector<Expr> euler_lagrange(const Lagrangian& lag) {
  std::vector<Expr> out;
  for (Field f : lag.potentials) {
    Expr dL_f = partial_derivative(lag.L, jet_atom(f, 0, 0));
    Expr dL_ft = partial_derivative(lag.L, jet_atom(f, 1, 0));
    Expr dL_fs = partial_derivative(lag.L, jet_atom(f, 0, 1));
    Expr el = dL_f - total_derivative(dL_ft, Dir::T) -
              total_derivative(dL_fs, Dir::X);
    // orient so the second time derivative enters positively
    out.push_back(close(-el, lag.profiles));
  }
  return out;
}

Expr noether_identity_residual(const Lagrangian& lag, const Generator& X,
                               const DivergencePair& B) {
  GeneratorAction act(X, 1);
  Expr res = act.apply(lag.L) +
             lag.L * (total_derivative(X.xi_t, Dir::T) +
                      total_derivative(X.xi_x, Dir::X)) -
             total_derivative(B.B1, Dir::T) - total_derivative(B.B2, Dir::X);
  return close(res, lag.profiles);
}

DensityPair conserved_density(const Lagrangian& lag, const Generator& X,
                              const DivergencePair& B,
                              const std::map<Sym, Rat>& binds) {
  Expr res = noether_identity_residual(lag, X, B);
  if (!binds.empty())
    res = close(substitute_syms(res, binds), lag.profiles);
  if (!res.is_zero())
    throw NotASymmetry("generator is not a divergence symmetry of L");
  Expr Tt = X.xi_t * lag.L - B.B1;
  Expr Ts = X.xi_x * lag.L - B.B2;
  for (Field f : lag.potentials) {
    Expr w = X.eta_of(f) - X.xi_t * J(f, 1, 0) - X.xi_x * J(f, 0, 1);
    Tt = Tt + w * partial_derivative(lag.L, jet_atom(f, 1, 0));
    Ts = Ts + w * partial_derivative(lag.L, jet_atom(f, 0, 1));
  }
  return {close(Tt, lag.profiles), close(Ts, lag.profiles)};
}

PotentialMap potential_map_A() {
  using F = Field;
  Expr r = J(F::R), rho = J(F::Rho), A = C(Sym::A);
  PotentialMap pm;
  pm.rules.push_back({JetVar{F::Phi, 0, 0}, r});
  pm.rules.push_back({JetVar{F::Phi, 1, 0}, J(F::U)});
  pm.rules.push_back({JetVar{F::Phi, 0, 1}, 1 / (r * rho)});
  pm.rules.push_back({JetVar{F::Psi, 0, 0}, J(F::Theta)});
  pm.rules.push_back({JetVar{F::Psi, 1, 0}, J(F::V) / r});
  pm.rules.push_back({JetVar{F::Psi, 0, 1}, J(F::Htheta) / (A * r * rho)});
  pm.rules.push_back({JetVar{F::Chi, 0, 0}, J(F::Z)});
  pm.rules.push_back({JetVar{F::Chi, 1, 0}, J(F::W)});
  pm.rules.push_back({JetVar{F::Chi, 0, 1}, J(F::Hz) / (A * rho)});
  pm.fn_map["S"] = entropy_expr();
  return pm;
}

PotentialMap potential_map_A0() {
  using F = Field;
  Expr r = J(F::R), rho = J(F::Rho);
  PotentialMap pm;
  pm.rules.push_back({JetVar{F::Phi, 0, 0}, r});
  pm.rules.push_back({JetVar{F::Phi, 1, 0}, J(F::U)});
  pm.rules.push_back({JetVar{F::Phi, 0, 1}, 1 / (r * rho)});
  pm.fn_map["S"] = entropy_expr();
  pm.fn_map["F"] = J(Field::Htheta) / (J(Field::R) * J(Field::Rho));
  pm.fn_map["G"] = J(Field::Hz) / J(Field::Rho);
  pm.fn_map["R"] = J(Field::R) * J(Field::V);
  // Stilde = S/(gamma-1) + G^2/2 expressed through the fields
  pm.fn_map["Stilde"] =
      entropy_expr() / (C(Sym::Gamma) - 1) +
      kHalf * (J(Field::Hz) / J(Field::Rho)).pow(2);
  return pm;
}

DensityPair to_physical(const DensityPair& law, const PotentialMap& pm) {
  auto conv = [&](const Expr& e) {
    Expr r = substitute_fn(substitute(e, pm.rules), pm.fn_map);
    for (const Atom& a : r.atoms()) {
      if (a.kind == Atom::Kind::Jet &&
          (a.jet.field == Field::Phi || a.jet.field == Field::Psi ||
           a.jet.field == Field::Chi))
        throw IncompleteInversion("potential variables survive the inversion");
    }
    return r;
  };
  return {conv(law.Tt), conv(law.Ts)};
}

VariationalBuild build_variational_A(const Profile& Sp) {
  using F = Field;
  Expr phi = J(F::Phi), psi = J(F::Psi), chi = J(F::Chi);
  Expr phi_t = J(F::Phi, 1, 0), phi_s = J(F::Phi, 0, 1);
  Expr psi_t = J(F::Psi, 1, 0), psi_s = J(F::Psi, 0, 1);
  Expr chi_t = J(F::Chi, 1, 0), chi_s = J(F::Chi, 0, 1);
  Expr g = C(Sym::Gamma), A = C(Sym::A);
  Scalar gam(Sym::Gamma), one(1);
  Expr Sv = Sp.expr();

  Lagrangian lag;
  lag.potentials = {F::Phi, F::Psi, F::Chi};
  lag.profiles = {Sp};
  lag.L = kHalf * (phi_t * phi_t + phi * phi * psi_t * psi_t + chi_t * chi_t) -
          Sv / (g - 1) * phi.pow(one - gam) * phi_s.pow(one - gam) -
          kHalf * A * A *
              (phi * psi_s * psi_s / phi_s + chi_s * chi_s / (phi * phi_s));

  Expr press = Sv * phi.pow(-gam) * phi_s.pow(-gam);
  Expr r1 = J(F::Phi, 2, 0) - phi * psi_t * psi_t + phi * Ds(press) +
            (A * A / (2 * phi)) * Ds(phi * phi * psi_s * psi_s / (phi_s * phi_s)) +
            (A * A * phi * kHalf) *
                Ds(chi_s * chi_s / (phi * phi * phi_s * phi_s));
  Expr r2 = phi * J(F::Psi, 2, 0) + 2 * phi_t * psi_t -
            (A * A / phi) * Ds(phi * psi_s / phi_s);
  Expr r3 = J(F::Chi, 2, 0) - A * A * Ds(chi_s / (phi * phi_s));

  VariationalBuild vb;
  vb.lag = lag;
  vb.system.name = "variational.A";
  if (auto c = Sp.exp_closure()) vb.system.fn_closures.push_back(*c);
  vb.system.residuals = {close(r1, {Sp}), close(r2, {Sp}), close(r3, {Sp})};
  vb.system.solved.push_back(
      {JetVar{F::Phi, 2, 0}, close(J(F::Phi, 2, 0) - r1, {Sp})});
  vb.system.solved.push_back(
      {JetVar{F::Psi, 2, 0}, close((phi * J(F::Psi, 2, 0) - r2) / phi, {Sp})});
  vb.system.solved.push_back(
      {JetVar{F::Chi, 2, 0}, close(J(F::Chi, 2, 0) - r3, {Sp})});
  return vb;
}

VariationalBuild build_variational_A0(const Profile& Sp, const Profile& Fp,
                                      const Profile& Gp, const Profile& Rp) {
  using F = Field;
  Expr phi = J(F::Phi), phi_t = J(F::Phi, 1, 0), phi_s = J(F::Phi, 0, 1);
  Expr g = C(Sym::Gamma);
  Scalar gam(Sym::Gamma), one(1);
  Expr Sv = Sp.expr(), Fv = Fp.expr(), Gv = Gp.expr(), Rv = Rp.expr();
  std::vector<Profile> profs = {Sp, Fp, Gp, Rp};

  Lagrangian lag;
  lag.potentials = {F::Phi};
  lag.profiles = profs;
  lag.L = kHalf * phi_t * phi_t - kHalf * Rv * Rv / (phi * phi) -
          Sv / (g - 1) * phi.pow(one - gam) * phi_s.pow(one - gam) -
          kHalf * Fv * Fv * phi / phi_s - kHalf * Gv * Gv / (phi * phi_s);

  Expr press = Sv * phi.pow(-gam) * phi_s.pow(-gam);
  Expr r1 = J(F::Phi, 2, 0) - Rv * Rv / (phi * phi * phi) + phi * Ds(press) +
            (1 / (2 * phi)) * Ds(Fv * Fv * phi * phi / (phi_s * phi_s)) +
            (phi * kHalf) * Ds(Gv * Gv / (phi * phi * phi_s * phi_s));

  VariationalBuild vb;
  vb.lag = lag;
  vb.system.name = "variational.A0";
  for (auto& pr : profs)
    if (auto c = pr.exp_closure()) vb.system.fn_closures.push_back(*c);
  vb.system.residuals = {close(r1, profs)};
  vb.system.solved.push_back(
      {JetVar{F::Phi, 2, 0}, close(J(F::Phi, 2, 0) - r1, profs)});
  return vb;
}

VariationalBuild build_variational_A0_gamma2(const Profile& St,
                                             const Profile& Fp,
                                             const Profile& Rp) {
  using F = Field;
  Expr phi = J(F::Phi), phi_t = J(F::Phi, 1, 0), phi_s = J(F::Phi, 0, 1);
  Expr Stv = St.expr(), Fv = Fp.expr(), Rv = Rp.expr();
  std::vector<Profile> profs = {St, Fp, Rp};

  Lagrangian lag;
  lag.potentials = {F::Phi};
  lag.profiles = profs;
  lag.L = kHalf * phi_t * phi_t - kHalf * Rv * Rv / (phi * phi) -
          Stv / (phi * phi_s) - kHalf * Fv * Fv * phi / phi_s;

  Expr r1 = J(F::Phi, 2, 0) - Rv * Rv / (phi * phi * phi) +
            phi * Ds(Stv / (phi * phi * phi_s * phi_s)) +
            (1 / (2 * phi)) * Ds(Fv * Fv * phi * phi / (phi_s * phi_s));

  VariationalBuild vb;
  vb.lag = lag;
  vb.system.name = "variational.A0.g2";
  for (auto& pr : profs)
    if (auto c = pr.exp_closure()) vb.system.fn_closures.push_back(*c);
  vb.system.residuals = {close(r1, profs)};
  vb.system.solved.push_back(
      {JetVar{F::Phi, 2, 0}, close(J(F::Phi, 2, 0) - r1, profs)});
  return vb;
}

VariationalBuild build_variational(AClass aclass, bool gamma2) {
  if (aclass == AClass::NonZero) return build_variational_A(Profile::arbitrary("S"));
  if (!gamma2)
    return build_variational_A0(Profile::arbitrary("S"), Profile::arbitrary("F"),
                                Profile::arbitrary("G"), Profile::arbitrary("R"));
  return build_variational_A0_gamma2(Profile::arbitrary("Stilde"),
                                     Profile::arbitrary("F"),
                                     Profile::arbitrary("R"));
}

// ---------------------------------------------------------------------------

namespace {

Generator pot_gen(std::string name, Expr xi_t, Expr xi_x,
                  std::initializer_list<std::pair<Field, Expr>> etas) {
  Generator g;
  g.name = std::move(name);
  g.xi_t = std::move(xi_t);
  g.xi_x = std::move(xi_x);
  for (auto& [f, e] : etas) g.eta[f] = e;
  return g;
}

// physical-variable guard keys for pinned profiles
JetRules physical_guard_A(const Profile& Sp) {
  JetRules g;
  if (Sp.kind != ProfileKind::Arbitrary) {
    g.push_back({JetVar{Field::P, 0, 0},
                 Sp.expr() * J(Field::Rho).pow(Scalar(Sym::Gamma))});
  }
  return g;
}

JetRules physical_guard_A0(const Profile& Sp, const Profile& Fp,
                           const Profile& Gp, const Profile& Rp) {
  JetRules g;
  if (Sp.kind != ProfileKind::Arbitrary)
    g.push_back({JetVar{Field::P, 0, 0},
                 Sp.expr() * J(Field::Rho).pow(Scalar(Sym::Gamma))});
  if (Fp.kind != ProfileKind::Arbitrary)
    g.push_back({JetVar{Field::Htheta, 0, 0},
                 Fp.expr() * J(Field::R) * J(Field::Rho)});
  if (Gp.kind != ProfileKind::Arbitrary)
    g.push_back({JetVar{Field::Hz, 0, 0}, Gp.expr() * J(Field::Rho)});
  if (Rp.kind != ProfileKind::Arbitrary)
    g.push_back({JetVar{Field::V, 0, 0}, Rp.expr() / J(Field::R)});
  return g;
}

// gamma = 2 guard: p = Stilde rho^2 - Hz^2/2, plus Htheta and v pins
JetRules physical_guard_A0_gamma2(const Profile& St, const Profile& Fp,
                                  const Profile& Rp) {
  JetRules g;
  if (St.kind != ProfileKind::Arbitrary)
    g.push_back({JetVar{Field::P, 0, 0},
                 St.expr() * J(Field::Rho).pow(2) -
                     kHalf * J(Field::Hz) * J(Field::Hz)});
  if (Fp.kind != ProfileKind::Arbitrary)
    g.push_back({JetVar{Field::Htheta, 0, 0},
                 Fp.expr() * J(Field::R) * J(Field::Rho)});
  if (Rp.kind != ProfileKind::Arbitrary)
    g.push_back({JetVar{Field::V, 0, 0}, Rp.expr() / J(Field::R)});
  return g;
}

}  // namespace

std::vector<NoetherCase> noether_cases() {
  using F = Field;
  std::vector<NoetherCase> cases;
  Scalar gam(Sym::Gamma), one(1), two(2);
  Expr phi = J(F::Phi), chi = J(F::Chi);

  // --- A != 0, arbitrary entropy profile
  {
    VariationalBuild vb = build_variational_A(Profile::arbitrary("S"));
    auto add = [&](std::string id, Generator g, DivergencePair B,
                   std::string claw) {
      NoetherCase c;
      c.id = std::move(id);
      c.build = vb;
      c.gen = std::move(g);
      c.B = std::move(B);
      c.claw_id = std::move(claw);
      cases.push_back(std::move(c));
    };
    add("noether.A.energy", pot_gen("X1", Expr::one(), Expr::zero(), {}), {},
        "claw.inf_A.energy");
    add("noether.A.rotation",
        pot_gen("X2", Expr::zero(), Expr::zero(), {{F::Psi, Expr::one()}}), {},
        "claw.inf_A.rotation");
    add("noether.A.momentum_z",
        pot_gen("X3", Expr::zero(), Expr::zero(), {{F::Chi, Expr::one()}}), {},
        "claw.inf_A.momentum_z");
    add("noether.A.galileo_z",
        pot_gen("X4", Expr::zero(), Expr::zero(), {{F::Chi, T()}}),
        DivergencePair{chi, Expr::zero()}, "claw.inf_A.galileo_z");
  }
  // --- A != 0, constant entropy: s-translation
  {
    VariationalBuild vb = build_variational_A(Profile::constant(Sym::S0));
    NoetherCase c;
    c.id = "noether.A.s_translation";
    c.build = vb;
    c.gen = pot_gen("X=ds", Expr::zero(), Expr::one(), {});
    c.claw_id = "claw.inf_A.s_translation";
    c.physical_guard = physical_guard_A(Profile::constant(Sym::S0));
    cases.push_back(c);
  }
  // --- A != 0, power entropy with q = 1 - 2 gamma: scaling
  {
    Profile Sp = Profile::power(Sym::S0, one - two * gam);
    VariationalBuild vb = build_variational_A(Sp);
    NoetherCase c;
    c.id = "noether.A.scaling";
    c.build = vb;
    c.gen = pot_gen("X=2s ds - phi dphi - chi dchi", Expr::zero(), 2 * S(),
                    {{F::Phi, -phi}, {F::Chi, -chi}});
    c.claw_id = "claw.inf_A.scaling";
    c.physical_guard = physical_guard_A(Sp);
    c.use_nonlocal = true;
    cases.push_back(c);
  }

  // --- A = 0, gamma != 2
  auto arb = [] {
    return build_variational_A0(Profile::arbitrary("S"), Profile::arbitrary("F"),
                                Profile::arbitrary("G"),
                                Profile::arbitrary("R"));
  };
  {
    NoetherCase c;
    c.id = "noether.A0.energy";
    c.build = arb();
    c.gen = pot_gen("Z1", Expr::one(), Expr::zero(), {});
    c.claw_id = "claw.inf_A0.energy";
    cases.push_back(c);
  }
  {
    Profile Sp = Profile::constant(Sym::S0), Fp = Profile::constant(Sym::F0);
    Profile Gp = Profile::constant(Sym::G0), Rp = Profile::constant(Sym::R0);
    NoetherCase c;
    c.id = "noether.A0.s_translation";
    c.build = build_variational_A0(Sp, Fp, Gp, Rp);
    c.gen = pot_gen("Z2", Expr::zero(), Expr::one(), {});
    c.claw_id = "claw.inf_A0.s_translation";
    c.physical_guard = physical_guard_A0(Sp, Fp, Gp, Rp);
    cases.push_back(c);
  }
  {
    Profile Sp = Profile::constant(Sym::S0), Fp = Profile::constant(Sym::F0);
    Profile Gp = Profile::zero(), Rp = Profile::zero();
    NoetherCase c;
    c.id = "noether.A0.g54";
    c.build = build_variational_A0(Sp, Fp, Gp, Rp);
    c.gen = pot_gen("Z3", 4 * T(), -2 * S(), {{F::Phi, 3 * phi}});
    c.claw_id = "claw.inf_A0.g54";
    c.binds[Sym::Gamma] = rat(5, 4);
    c.physical_guard = physical_guard_A0(Sp, Fp, Gp, Rp);
    cases.push_back(c);
  }
  {
    // power profiles, F0 != 0
    Scalar q2(Sym::Q2);
    Scalar q1 = -two * (gam - two) * q2 - Scalar(4) * gam + Scalar(5);
    Profile Sp = Profile::power(Sym::S0, q1);
    Profile Fp = Profile::power(Sym::F0, q2);
    Profile Gp = Profile::power(Sym::G0, Scalar(rat(-3, 2)));
    Profile Rp = Profile::power(Sym::R0, Scalar(-1));
    NoetherCase c;
    c.id = "noether.A0.power.F0";
    c.build = build_variational_A0(Sp, Fp, Gp, Rp);
    c.gen = pot_gen("Z2", Expr::scalar(Scalar(4) * (q2 + one)) * T(), -2 * S(),
                    {{F::Phi, Expr::scalar(two * q2 + Scalar(3)) * phi}});
    c.claw_id = "claw.inf_A0.power_F";
    c.physical_guard = physical_guard_A0(Sp, Fp, Gp, Rp);
    cases.push_back(c);
  }
  {
    // power profiles, F0 = 0, G0 != 0
    Scalar q1(Sym::Q1);
    Profile Sp = Profile::power(Sym::S0, q1);
    Profile Fp = Profile::zero();
    Profile Gp = Profile::power(Sym::G0, Scalar(rat(-3, 2)));
    Profile Rp = Profile::power(Sym::R0, Scalar(-1));
    NoetherCase c;
    c.id = "noether.A0.power.G0";
    c.build = build_variational_A0(Sp, Fp, Gp, Rp);
    c.gen = pot_gen("Z2", Expr::scalar(two * (q1 + two * gam - one)) * T(),
                    Expr::scalar(two * (gam - two)) * S(),
                    {{F::Phi, Expr::scalar(q1 + gam + one) * phi}});
    c.claw_id = "claw.inf_A0.power_G";
    c.physical_guard = physical_guard_A0(Sp, Fp, Gp, Rp);
    cases.push_back(c);
  }
  {
    // exponential profiles, F0 != 0 (q3 = q4 = 0: constant G and R)
    Scalar q2(Sym::Q2);
    Scalar q1 = -two * (gam - two) * q2;
    Profile Sp = Profile::exponential_rate(Sym::S0, q1, "exp_qS");
    Profile Fp = Profile::exponential(Sym::F0, Sym::Q2);
    Profile Gp = Profile::constant(Sym::G0);
    Profile Rp = Profile::constant(Sym::R0);
    NoetherCase c;
    c.id = "noether.A0.exp.F0";
    c.build = build_variational_A0(Sp, Fp, Gp, Rp);
    c.gen = pot_gen("Z2", Expr::scalar(two * q2) * T(), -Expr::one(),
                    {{F::Phi, Expr::scalar(q2) * phi}});
    c.claw_id = "claw.inf_A0.exp_F";
    c.physical_guard = physical_guard_A0(Sp, Fp, Gp, Rp);
    cases.push_back(c);
  }
  {
    // exponential S, F0 = 0, G0 != 0 (q3 = q4 = 0)
    Scalar q1(Sym::Q1);
    Profile Sp = Profile::exponential(Sym::S0, Sym::Q1);
    Profile Fp = Profile::zero();
    Profile Gp = Profile::constant(Sym::G0);
    Profile Rp = Profile::constant(Sym::R0);
    NoetherCase c;
    c.id = "noether.A0.exp.G0";
    c.build = build_variational_A0(Sp, Fp, Gp, Rp);
    c.gen = pot_gen("Z2", Expr::scalar(two * q1) * T(),
                    Expr::scalar(two * (gam - two)),
                    {{F::Phi, Expr::scalar(q1) * phi}});
    c.claw_id = "claw.inf_A0.exp_G";
    c.physical_guard = physical_guard_A0(Sp, Fp, Gp, Rp);
    cases.push_back(c);
  }

  // --- gamma = 2
  {
    Profile St = Profile::arbitrary("Stilde"), Fp = Profile::zero(),
            Rp = Profile::arbitrary("R");
    VariationalBuild vb = build_variational_A0_gamma2(St, Fp, Rp);
    NoetherCase c1;
    c1.id = "noether.A0g2.time_scaling";
    c1.build = vb;
    c1.gen = pot_gen("Z*", 2 * T(), Expr::zero(), {{F::Phi, phi}});
    c1.claw_id = "claw.inf_A0g2.scaling";
    c1.binds[Sym::Gamma] = rat(2);
    c1.physical_guard = physical_guard_A0_gamma2(St, Fp, Rp);
    cases.push_back(c1);
    NoetherCase c2;
    c2.id = "noether.A0g2.projective";
    c2.build = vb;
    c2.gen = pot_gen("Z**", T() * T(), Expr::zero(), {{F::Phi, T() * phi}});
    c2.B = DivergencePair{kHalf * phi * phi, Expr::zero()};
    c2.claw_id = "claw.inf_A0g2.projective";
    c2.binds[Sym::Gamma] = rat(2);
    c2.physical_guard = physical_guard_A0_gamma2(St, Fp, Rp);
    cases.push_back(c2);
  }
  {
    Profile St = Profile::constant(Sym::S0), Fp = Profile::constant(Sym::F0),
            Rp = Profile::constant(Sym::R0);
    NoetherCase c;
    c.id = "noether.A0g2.s_translation";
    c.build = build_variational_A0_gamma2(St, Fp, Rp);
    c.gen = pot_gen("Z2", Expr::zero(), Expr::one(), {});
    c.claw_id = "claw.inf_A0g2.s_translation";
    c.binds[Sym::Gamma] = rat(2);
    c.physical_guard = physical_guard_A0_gamma2(St, Fp, Rp);
    cases.push_back(c);
  }
  {
    // gamma = 2 power case, F0 != 0: q1 = -3, q3 = -1
    Scalar q2(Sym::Q2);
    Profile St = Profile::power(Sym::S0, Scalar(-3));
    Profile Fp = Profile::power(Sym::F0, q2);
    Profile Rp = Profile::power(Sym::R0, Scalar(-1));
    NoetherCase c;
    c.id = "noether.A0g2.power.F0";
    c.build = build_variational_A0_gamma2(St, Fp, Rp);
    c.gen = pot_gen("Z2", Expr::scalar(Scalar(4) * (q2 + one)) * T(), -2 * S(),
                    {{F::Phi, Expr::scalar(two * q2 + Scalar(3)) * phi}});
    c.claw_id = "claw.inf_A0g2.power_F";
    c.binds[Sym::Gamma] = rat(2);
    c.physical_guard = physical_guard_A0_gamma2(St, Fp, Rp);
    cases.push_back(c);
  }
  {
    // gamma = 2 power case, F = 0: Z2 = t dt + s ds
    Profile St = Profile::power(Sym::S0, Scalar(-3));
    Profile Fp = Profile::zero();
    Profile Rp = Profile::power(Sym::R0, Scalar(-1));
    NoetherCase c;
    c.id = "noether.A0g2.power.noF";
    c.build = build_variational_A0_gamma2(St, Fp, Rp);
    c.gen = pot_gen("Z2", T(), S(), {});
    c.claw_id = "claw.inf_A0g2.power_ts";
    c.binds[Sym::Gamma] = rat(2);
    c.physical_guard = physical_guard_A0_gamma2(St, Fp, Rp);
    cases.push_back(c);
  }
  {
    // gamma = 2 exponential case, F0 != 0: q1 = q3 = 0
    Scalar q2(Sym::Q2);
    Profile St = Profile::constant(Sym::S0);
    Profile Fp = Profile::exponential(Sym::F0, Sym::Q2);
    Profile Rp = Profile::constant(Sym::R0);
    NoetherCase c;
    c.id = "noether.A0g2.exp.F0";
    c.build = build_variational_A0_gamma2(St, Fp, Rp);
    c.gen = pot_gen("Z", Expr::scalar(two * q2) * T(), -Expr::one(),
                    {{F::Phi, Expr::scalar(q2) * phi}});
    c.claw_id = "claw.inf_A0g2.exp_F";
    c.binds[Sym::Gamma] = rat(2);
    c.physical_guard = physical_guard_A0_gamma2(St, Fp, Rp);
    cases.push_back(c);
  }
  return cases;
}

std::vector<VariationalSymmetryCase> variational_symmetry_cases() {
  using F = Field;
  std::vector<VariationalSymmetryCase> cases;
  Scalar gam(Sym::Gamma), one(1), two(2), q(Sym::Q);
  Expr phi = J(F::Phi), chi = J(F::Chi);

  auto add = [&](std::string id, VariationalBuild vb, Generator g,
                 std::map<Sym, Rat> binds = {}, bool pass = true) {
    VariationalSymmetryCase c;
    c.id = std::move(id);
    c.build = std::move(vb);
    c.gen = std::move(g);
    c.binds = std::move(binds);
    c.expect_pass = pass;
    cases.push_back(std::move(c));
  };

  // kernel of the three-potential system (arbitrary S)
  {
    VariationalBuild vb = build_variational_A(Profile::arbitrary("S"));
    add("var_A.kern.X1", vb, pot_gen("X1", Expr::one(), Expr::zero(), {}));
    add("var_A.kern.X2", vb,
        pot_gen("X2", Expr::zero(), Expr::zero(), {{F::Psi, Expr::one()}}));
    add("var_A.kern.X3", vb,
        pot_gen("X3", Expr::zero(), Expr::zero(), {{F::Chi, Expr::one()}}));
    add("var_A.kern.X4", vb,
        pot_gen("X4", Expr::zero(), Expr::zero(), {{F::Chi, T()}}));
  }
  // Table 3
  {
    VariationalBuild vb = build_variational_A(Profile::constant(Sym::S0));
    add("table3.case1.a", vb, pot_gen("ds", Expr::zero(), Expr::one(), {}));
    add("table3.case1.b", vb,
        pot_gen("case1b", Expr::scalar(two * gam - one) * T(),
                Expr::scalar(two * (gam - one)) * S(),
                {{F::Phi, Expr::scalar(gam) * phi},
                 {F::Chi, Expr::scalar(gam) * chi}}));
  }
  {
    VariationalBuild vb = build_variational_A(Profile::power(Sym::S0, q));
    add("table3.case2", vb,
        pot_gen("case2", Expr::scalar(two * gam + q - one) * T(),
                Expr::scalar(two * (gam - one)) * S(),
                {{F::Phi, Expr::scalar(gam + q) * phi},
                 {F::Chi, Expr::scalar(gam + q) * chi}}));
  }
  {
    VariationalBuild vb = build_variational_A(Profile::exponential(Sym::S0, Sym::Q));
    add("table3.case3", vb,
        pot_gen("case3", Expr::scalar(q) * T(),
                Expr::scalar(two * (gam - one)),
                {{F::Phi, Expr::scalar(q) * phi},
                 {F::Chi, Expr::scalar(q) * chi}}));
  }
  // Table 4 (variational shape checked in the Noether suite; symmetry here)
  {
    VariationalBuild vb =
        build_variational_A(Profile::power(Sym::S0, one - two * gam));
    add("table4.case2", vb,
        pot_gen("case2", Expr::zero(), 2 * S(),
                {{F::Phi, -phi}, {F::Chi, -chi}}));
  }

  // single-potential system, gamma != 2
  {
    VariationalBuild vb = build_variational(AClass::Zero, false);
    add("var_A0.arb.X1", vb, pot_gen("X1", Expr::one(), Expr::zero(), {}));
  }
  {
    VariationalBuild vb = build_variational_A0(
        Profile::constant(Sym::S0), Profile::constant(Sym::F0),
        Profile::constant(Sym::G0), Profile::constant(Sym::R0));
    add("var_A0.const.X2", vb, pot_gen("X2", Expr::zero(), Expr::one(), {}));
  }
  {
    VariationalBuild vb =
        build_variational_A0(Profile::constant(Sym::S0),
                             Profile::constant(Sym::F0), Profile::zero(),
                             Profile::zero());
    Generator x3 = pot_gen("X3", -T(), Expr::scalar(two * (gam - one)) * S(),
                           {{F::Phi, Expr::scalar(gam - two) * phi}});
    add("var_A0.const.F.X3", vb, x3);
  }
  {
    // gamma = 3/2 admits the same extension with R0 != 0
    VariationalBuild vb =
        build_variational_A0(Profile::constant(Sym::S0),
                             Profile::constant(Sym::F0), Profile::zero(),
                             Profile::constant(Sym::R0));
    Generator x3 = pot_gen("X3", -T(), Expr::scalar(two * (gam - one)) * S(),
                           {{F::Phi, Expr::scalar(gam - two) * phi}});
    add("var_A0.const.F.g32.X3", vb, x3, {{Sym::Gamma, rat(3, 2)}});
    // and must fail for other gamma with R0 != 0
    add("var_A0.const.F.g32.X3.off", vb, x3, {{Sym::Gamma, rat(7, 4)}}, false);
  }
  {
    VariationalBuild vb = build_variational_A0(
        Profile::constant(Sym::S0), Profile::zero(),
        Profile::constant(Sym::G0), Profile::zero());
    add("var_A0.const.G.X3", vb,
        pot_gen("X3", T(), 2 * S(), {{F::Phi, phi}}));
  }
  {
    Scalar q1(Sym::Q1), q2(Sym::Q2);
    Scalar q3 = (q1 + two * (gam - two) * q2 + gam - two) / (two * (gam - one));
    Scalar q4 =
        (q1 + two * (gam - two) * q2 + two * gam - Scalar(3)) / (two * (gam - one));
    VariationalBuild vb = build_variational_A0(
        Profile::power(Sym::S0, q1), Profile::power(Sym::F0, q2),
        Profile::power(Sym::G0, q3), Profile::power(Sym::R0, q4));
    add("var_A0.power.F.X2", vb,
        pot_gen("X2", Expr::scalar(q1 - two * gam * q2 - one) * T(),
                Expr::scalar(two * (gam - one)) * S(),
                {{F::Phi, Expr::scalar(q1 - two * q2 + gam - two) * phi}}));
  }
  {
    Scalar q1(Sym::Q1), q3(Sym::Q3);
    VariationalBuild vb = build_variational_A0(
        Profile::power(Sym::S0, q1), Profile::zero(),
        Profile::power(Sym::G0, q3),
        Profile::power(Sym::R0, q3 + Scalar(rat(1, 2))));
    add("var_A0.power.G.X2", vb,
        pot_gen("X2",
                Expr::scalar(two * q1 - two * gam * q3 + gam - two) * T(),
                Expr::scalar(two * (gam - two)) * S(),
                {{F::Phi, Expr::scalar(q1 - two * q3 + gam - two) * phi}}));
  }
  {
    Scalar q1(Sym::Q1), q2(Sym::Q2);
    Scalar q34 = (q1 + two * (gam - two) * q2) / (two * (gam - one));
    VariationalBuild vb = build_variational_A0(
        Profile::exponential(Sym::S0, Sym::Q1),
        Profile::exponential(Sym::F0, Sym::Q2),
        Profile::exponential_rate(Sym::G0, q34, "exp_qG"),
        Profile::exponential_rate(Sym::R0, q34, "exp_qR"));
    add("var_A0.exp.F.X2", vb,
        pot_gen("X2", Expr::scalar(q1 - two * gam * q2) * T(),
                Expr::scalar(two * (gam - one)),
                {{F::Phi, Expr::scalar(q1 - two * q2) * phi}}));
  }
  {
    Scalar q1(Sym::Q1), q3(Sym::Q3);
    VariationalBuild vb = build_variational_A0(
        Profile::exponential(Sym::S0, Sym::Q1), Profile::zero(),
        Profile::exponential(Sym::G0, Sym::Q3),
        Profile::exponential(Sym::R0, Sym::Q3));
    add("var_A0.exp.G.X2", vb,
        pot_gen("X2", Expr::scalar(two * (q1 - gam * q3)) * T(),
                Expr::scalar(two * (gam - two)),
                {{F::Phi, Expr::scalar(q1 - two * q3) * phi}}));
  }

  // gamma = 2 list
  {
    VariationalBuild vb = build_variational(AClass::Zero, true);
    add("var_A0g2.arb.X1", vb, pot_gen("X1", Expr::one(), Expr::zero(), {}));
  }
  {
    VariationalBuild vb = build_variational_A0_gamma2(
        Profile::arbitrary("Stilde"), Profile::zero(), Profile::arbitrary("R"));
    add("var_A0g2.arbF0.Xstar", vb,
        pot_gen("X*", 2 * T(), Expr::zero(), {{F::Phi, phi}}));
    add("var_A0g2.arbF0.Xstarstar", vb,
        pot_gen("X**", T() * T(), Expr::zero(), {{F::Phi, T() * phi}}));
  }
  {
    VariationalBuild vb = build_variational_A0_gamma2(
        Profile::constant(Sym::S0), Profile::constant(Sym::F0),
        Profile::constant(Sym::R0));
    add("var_A0g2.const.X2", vb, pot_gen("X2", Expr::zero(), Expr::one(), {}));
  }
  {
    VariationalBuild vb = build_variational_A0_gamma2(
        Profile::constant(Sym::S0), Profile::constant(Sym::F0), Profile::zero());
    add("var_A0g2.const.F.X3", vb, pot_gen("X3", -T(), 2 * S(), {}));
  }
  {
    VariationalBuild vb = build_variational_A0_gamma2(
        Profile::constant(Sym::S0), Profile::zero(), Profile::zero());
    add("var_A0g2.const.noF.X3", vb,
        pot_gen("X3", T(), 2 * S(), {{F::Phi, phi}}));
  }
  {
    Scalar q1(Sym::Q1), q2(Sym::Q2);
    Scalar q3 = (q1 + one) / two;
    VariationalBuild vb = build_variational_A0_gamma2(
        Profile::power(Sym::S0, q1), Profile::power(Sym::F0, q2),
        Profile::power(Sym::R0, q3));
    add("var_A0g2.power.F.X2", vb,
        pot_gen("X2", Expr::scalar(q1 - Scalar(4) * q2 - one) * T(), 2 * S(),
                {{F::Phi, Expr::scalar(q1 - two * q2) * phi}}));
  }
  {
    Scalar q1(Sym::Q1);
    Scalar q3 = (q1 + one) / two;
    VariationalBuild vb = build_variational_A0_gamma2(
        Profile::power(Sym::S0, q1), Profile::zero(),
        Profile::power(Sym::R0, q3));
    add("var_A0g2.power.noF.X2", vb,
        pot_gen("X2", Expr::zero(), 4 * S(),
                {{F::Phi, Expr::scalar(q1 + one) * phi}}));
  }
  {
    Scalar q1(Sym::Q1), q2(Sym::Q2);
    Scalar q3 = q1 / two;
    VariationalBuild vb = build_variational_A0_gamma2(
        Profile::exponential(Sym::S0, Sym::Q1),
        Profile::exponential(Sym::F0, Sym::Q2),
        Profile::exponential_rate(Sym::R0, q3, "exp_qR"));
    add("var_A0g2.exp.F.X2", vb,
        pot_gen("X2", Expr::scalar(q1 - Scalar(4) * q2) * T(), 2 * Expr::one(),
                {{F::Phi, Expr::scalar(q1 - two * q2) * phi}}));
  }
  {
    Scalar q1(Sym::Q1);
    Scalar q3 = q1 / two;
    VariationalBuild vb = build_variational_A0_gamma2(
        Profile::exponential(Sym::S0, Sym::Q1), Profile::zero(),
        Profile::exponential_rate(Sym::R0, q3, "exp_qR"));
    add("var_A0g2.exp.noF.X2", vb,
        pot_gen("X2", Expr::zero(), 4 * Expr::one(),
                {{F::Phi, Expr::scalar(q1) * phi}}));
  }
  return cases;
}

}  // namespace cylmhd
