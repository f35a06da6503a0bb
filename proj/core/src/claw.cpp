#include "cylmhd/claw.hpp"

#include <algorithm>

namespace cylmhd {

namespace {

Expr J(Field f, int dt = 0, int dx = 0) { return Expr::jet(f, dt, dx); }
Expr T() { return Expr::indep(Dir::T); }
Expr S() { return Expr::indep(Dir::X); }
Expr C(Sym s) { return Expr::constant(s); }

const Expr kHalf = Expr::rational(rat(1, 2));

struct Vars {
  Expr rho = J(Field::Rho), u = J(Field::U), v = J(Field::V), w = J(Field::W);
  Expr p = J(Field::P), Ht = J(Field::Htheta), Hz = J(Field::Hz);
  Expr Et = J(Field::Etheta), Ez = J(Field::Ez);
  Expr r = J(Field::R), th = J(Field::Theta), z = J(Field::Z);
  Expr g = C(Sym::Gamma), A = C(Sym::A), Cc = C(Sym::C);
  Expr Hr() const { return A / r; }
  Expr H2() const { return Ht * Ht + Hz * Hz; }
  // energy density, optionally without the w contribution
  Expr energy(bool with_w) const {
    Expr kin = u * u + v * v + (with_w ? w * w : Expr::zero());
    return kHalf * kin + p / ((g - 1) * rho) + H2() / (2 * rho);
  }
};

ConservationLaw make_law(std::string id, std::string title, Expr Tt, Expr Ts,
                         Regime regime) {
  ConservationLaw law;
  law.id = std::move(id);
  law.title = std::move(title);
  law.Tt = std::move(Tt);
  law.Ts = std::move(Ts);
  law.regime = regime;
  return law;
}

// guard keys for pinned profiles in the physical variables (see the
// matching构 builders in noether.cpp)
JetRules entropy_guard(const Expr& profile) {
  return {{JetVar{Field::P, 0, 0},
           profile * J(Field::Rho).pow(Scalar(Sym::Gamma))}};
}

}  // namespace

std::vector<ConservationLaw> claw_catalog(const Regime& regime,
                                          const ConductivityModel& model) {
  std::vector<ConservationLaw> out;
  Vars x;
  bool finite = regime.cond == Conductivity::Finite;
  bool withA = regime.aclass == AClass::NonZero;
  std::string base =
      std::string("claw.") + (finite ? "finite_" : "inf_") +
      (withA ? "A" : (regime.gamma2 ? "A0g2" : "A0"));

  auto add = [&](ConservationLaw law) {
    if (regime.gamma2) law.binds[Sym::Gamma] = rat(2);
    out.push_back(std::move(law));
  };

  if (finite && withA) {
    add(make_law(base + ".mass", "mass", 1 / x.rho, -x.r * x.u, regime));
    add(make_law(base + ".momentum_z", "z-momentum", x.w,
                 -x.r * x.Hr() * x.Hz, regime));
    add(make_law(base + ".galileo_z", "center of mass along z",
                 T() * x.w - x.z, -T() * x.r * x.Hr() * x.Hz, regime));
    add(make_law(base + ".rotation", "angular momentum", x.r * x.v,
                 -x.r * x.r * x.Hr() * x.Ht, regime));
    add(make_law(base + ".flux_theta", "azimuthal magnetic flux",
                 x.Ht / (x.r * x.rho), -(x.Ez + x.v * x.Hr()), regime));
    add(make_law(base + ".flux_z", "axial magnetic flux", x.Hz / x.rho,
                 x.r * x.Et - x.r * x.w * x.Hr(), regime));
    add(make_law(base + ".energy", "energy", x.energy(true),
                 x.r * x.u * (x.p + kHalf * x.H2()) +
                     x.r * (x.Et * x.Hz - x.Ez * x.Ht) -
                     x.r * x.Hr() * (x.v * x.Ht + x.w * x.Hz),
                 regime));
    if (model.kind == SigmaKind::CRho) {
      ConservationLaw law = make_law(
          base + ".special1", "extra law for sigma = C rho",
          (2 * T() - x.Cc * S()) * x.Hz / x.rho - x.Cc * x.r * x.z * x.Hr(),
          (2 * T() - x.Cc * S()) * (x.r * x.Et - x.r * x.w * x.Hr()) -
              x.r * x.r * x.Hz,
          regime);
      law.sigma_guard = SigmaKind::CRho;
      law.violation_note = "fails for generic sigma(rho,p)";
      add(std::move(law));
    }
  } else if (finite && !withA) {
    add(make_law(base + ".mass", "mass", 1 / x.rho, -x.r * x.u, regime));
    add(make_law(base + ".rotation", "angular momentum", x.r * x.v,
                 Expr::zero(), regime));
    add(make_law(base + ".flux_theta", "azimuthal magnetic flux",
                 x.Ht / (x.r * x.rho), -x.Ez, regime));
    add(make_law(base + ".flux_z", "axial magnetic flux", x.Hz / x.rho,
                 x.r * x.Et, regime));
    add(make_law(base + ".energy", "energy", x.energy(false),
                 x.r * x.u * (x.p + kHalf * x.H2()) +
                     x.r * (x.Et * x.Hz - x.Ez * x.Ht),
                 regime));
    if (model.kind == SigmaKind::CRho) {
      ConservationLaw l2 = make_law(
          base + ".special2", "extra law for sigma = C rho",
          (2 * T() - x.Cc * S()) * x.Hz / x.rho,
          (2 * T() - x.Cc * S()) * x.r * x.Et - x.r * x.r * x.Hz, regime);
      l2.sigma_guard = SigmaKind::CRho;
      l2.violation_note = "fails for generic sigma(rho,p)";
      add(std::move(l2));
      ConservationLaw l3 = make_law(
          base + ".special3", "extra law for sigma = C rho",
          x.Cc * S() * x.Ht / (x.r * x.rho),
          x.r * x.Ht - x.Cc * S() * x.Ez, regime);
      l3.sigma_guard = SigmaKind::CRho;
      l3.violation_note = "fails for generic sigma(rho,p)";
      add(std::move(l3));
    }
    // T^s == 0 family on the extended system: T^t(r v, w, z - t w)
    for (int i = 0; i < 5; ++i) {
      SplitMix sm(kDefaultSeed + i);
      Expr a1 = x.r * x.v, a2 = x.w, a3 = x.z - T() * x.w;
      Expr poly =
          Expr::num(long(sm.next() % 5) + 1) * a1 +
          Expr::num(long(sm.next() % 5) + 1) * a2 * a2 +
          Expr::num(long(sm.next() % 5) + 1) * a3 +
          Expr::num(long(sm.next() % 5) + 1) * a1 * a3 +
          Expr::num(long(sm.next() % 5) + 1) * a2;
      add(make_law(base + ".ode_type." + std::to_string(i + 1),
                   "pointwise invariant family", poly, Expr::zero(), regime));
    }
  } else if (!finite && withA) {
    add(make_law(base + ".mass", "mass", 1 / x.rho, -x.r * x.u, regime));
    add(make_law(base + ".momentum_z", "z-momentum", x.w,
                 -x.r * x.Hr() * x.Hz, regime));
    add(make_law(base + ".galileo_z", "center of mass along z",
                 T() * x.w - x.z, -T() * x.r * x.Hr() * x.Hz, regime));
    add(make_law(base + ".rotation", "angular momentum", x.r * x.v,
                 -x.r * x.r * x.Hr() * x.Ht, regime));
    add(make_law(base + ".flux_theta", "azimuthal magnetic flux",
                 x.Ht / (x.r * x.rho), -x.v * x.Hr(), regime));
    add(make_law(base + ".flux_z", "axial magnetic flux", x.Hz / x.rho,
                 -x.r * x.w * x.Hr(), regime));
    add(make_law(base + ".energy", "energy", x.energy(true),
                 x.r * x.u * (x.p + kHalf * x.H2()) -
                     x.r * x.Hr() * (x.v * x.Ht + x.w * x.Hz),
                 regime));
    add(make_law(base + ".entropy", "entropy advection", entropy_expr(),
                 Expr::zero(), regime));
    {
      // s-translation law for constant entropy profile
      ConservationLaw law = make_law(
          base + ".s_translation", "mass-coordinate translation",
          (x.u * x.Hr() + x.v * x.Ht + x.w * x.Hz) / (x.r * x.rho * x.Hr()),
          -kHalf * (x.u * x.u + x.v * x.v + x.w * x.w) +
              x.g / (x.g - 1) * x.p / x.rho,
          regime);
      law.guard_keys = entropy_guard(C(Sym::S0));
      law.violation_note = "fails without the constant-entropy guard";
      add(std::move(law));
    }
    {
      // scaling law for S = S0 s^(1-2 gamma); needs the nonlocal relations
      Scalar gam(Sym::Gamma), one(1), two(2);
      ConservationLaw law = make_law(
          base + ".scaling", "scaling law",
          2 * S() * (x.u * x.Hr() + x.v * x.Ht + x.w * x.Hz) /
                  (x.r * x.rho * x.Hr()) +
              x.r * x.u + x.z * x.w,
          2 * S() *
                  (-kHalf * (x.u * x.u + x.v * x.v + x.w * x.w) +
                   x.g / (x.g - 1) * x.p / x.rho) +
              x.r * x.r * (x.p + kHalf * x.H2()) - x.r * x.Hr() * x.z * x.Hz,
          regime);
      law.guard_keys =
          entropy_guard(C(Sym::S0) * S().pow(one - two * gam));
      law.use_nonlocal = true;
      law.violation_note = "fails without the power-entropy guard";
      add(std::move(law));
    }
  } else {  // infinite, A = 0 (generic or gamma = 2)
    Scalar gam(Sym::Gamma), one(1), two(2);
    add(make_law(base + ".mass", "mass", 1 / x.rho, -x.r * x.u, regime));
    add(make_law(base + ".rotation", "angular momentum", x.r * x.v,
                 Expr::zero(), regime));
    add(make_law(base + ".flux_theta", "azimuthal magnetic flux",
                 x.Ht / (x.r * x.rho), Expr::zero(), regime));
    add(make_law(base + ".flux_z", "axial magnetic flux", x.Hz / x.rho,
                 Expr::zero(), regime));
    add(make_law(base + ".entropy", "entropy advection", entropy_expr(),
                 Expr::zero(), regime));
    add(make_law(base + ".energy", "energy", x.energy(false),
                 x.r * x.u * (x.p + kHalf * x.H2()), regime));

    if (!regime.gamma2) {
      // pointwise invariant family T^t(r v, S, Htheta/(r rho), Hz/rho)
      for (int i = 0; i < 5; ++i) {
        SplitMix sm(kDefaultSeed + 17 * (i + 1));
        Expr a1 = x.r * x.v, a2 = entropy_expr(),
             a3 = x.Ht / (x.r * x.rho), a4 = x.Hz / x.rho;
        Expr poly = Expr::num(long(sm.next() % 5) + 1) * a1 * a2 +
                    Expr::num(long(sm.next() % 5) + 1) * a3 +
                    Expr::num(long(sm.next() % 5) + 1) * a4 * a4 +
                    Expr::num(long(sm.next() % 5) + 1) * a2 +
                    Expr::num(long(sm.next() % 5) + 1) * a1 * a4;
        add(make_law(base + ".invariant." + std::to_string(i + 1),
                     "pointwise invariant family", poly, Expr::zero(),
                     regime));
      }
      {
        ConservationLaw law = make_law(
            base + ".s_translation", "mass-coordinate translation",
            x.u / (x.r * x.rho),
            kHalf * (x.v * x.v - x.u * x.u) + x.g / (x.g - 1) * x.p / x.rho +
                x.H2() / x.rho,
            regime);
        law.guard_keys = entropy_guard(C(Sym::S0));
        law.guard_keys.push_back(
            {JetVar{Field::Htheta, 0, 0}, C(Sym::F0) * x.r * x.rho});
        law.guard_keys.push_back({JetVar{Field::Hz, 0, 0}, C(Sym::G0) * x.rho});
        law.guard_keys.push_back({JetVar{Field::V, 0, 0}, C(Sym::R0) / x.r});
        law.violation_note = "fails without the constant-profile guards";
        add(std::move(law));
      }
      {
        // gamma = 5/4 case: F0 != 0, G0 = R0 = 0
        ConservationLaw law = make_law(
            base + ".g54", "gamma = 5/4 scaling law",
            4 * T() *
                    (kHalf * x.u * x.u + x.p / ((x.g - 1) * x.rho) +
                     x.Ht * x.Ht / (2 * x.rho)) -
                2 * S() * x.u / (x.r * x.rho) - 3 * x.r * x.u,
            (4 * T() * x.r * x.u - 3 * x.r * x.r) *
                    (x.p + kHalf * x.Ht * x.Ht) -
                2 * S() *
                    (-kHalf * x.u * x.u + x.g / (x.g - 1) * x.p / x.rho +
                     x.Ht * x.Ht / x.rho),
            regime);
        law.binds[Sym::Gamma] = rat(5, 4);
        law.guard_keys = entropy_guard(C(Sym::S0));
        law.guard_keys.push_back(
            {JetVar{Field::Htheta, 0, 0}, C(Sym::F0) * x.r * x.rho});
        law.guard_keys.push_back({JetVar{Field::Hz, 0, 0}, Expr::zero()});
        law.guard_keys.push_back({JetVar{Field::V, 0, 0}, Expr::zero()});
        law.violation_note = "fails for gamma != 5/4";
        add(std::move(law));
      }
      {
        // power-profile law, F0 != 0
        Scalar q2(Sym::Q2);
        Scalar q1 = -two * (gam - two) * q2 - Scalar(4) * gam + Scalar(5);
        Expr c1 = Expr::scalar(Scalar(4) * (q2 + one));
        Expr c2 = Expr::scalar(two * q2 + Scalar(3));
        ConservationLaw law = make_law(
            base + ".power_F", "power-profile law (F0 != 0)",
            c1 * T() * x.energy(false) - 2 * S() * x.u / (x.r * x.rho) -
                c2 * x.r * x.u,
            (c1 * T() * x.r * x.u - c2 * x.r * x.r) *
                    (x.p + kHalf * x.H2()) -
                2 * S() *
                    (kHalf * (x.v * x.v - x.u * x.u) +
                     x.g / (x.g - 1) * x.p / x.rho + x.H2() / x.rho),
            regime);
        law.guard_keys = entropy_guard(C(Sym::S0) * S().pow(q1));
        law.guard_keys.push_back(
            {JetVar{Field::Htheta, 0, 0},
             C(Sym::F0) * S().pow(q2) * x.r * x.rho});
        law.guard_keys.push_back(
            {JetVar{Field::Hz, 0, 0},
             C(Sym::G0) * S().pow(Scalar(rat(-3, 2))) * x.rho});
        law.guard_keys.push_back(
            {JetVar{Field::V, 0, 0}, C(Sym::R0) * S().pow(Scalar(-1)) / x.r});
        law.violation_note = "fails without the power-profile guards";
        add(std::move(law));
      }
      {
        // power-profile law, F0 = 0, G0 != 0
        Scalar q1(Sym::Q1);
        Expr c1 = Expr::scalar(two * (q1 + two * gam - one));
        Expr c2 = Expr::scalar(q1 + gam + one);
        Expr cs = Expr::scalar(two * (gam - two));
        ConservationLaw law = make_law(
            base + ".power_G", "power-profile law (F0 = 0)",
            c1 * T() * x.energy(false) + cs * S() * x.u / (x.r * x.rho) -
                c2 * x.r * x.u,
            (c1 * T() * x.r * x.u - c2 * x.r * x.r) *
                    (x.p + kHalf * x.Hz * x.Hz) +
                cs * S() *
                    (kHalf * (x.v * x.v - x.u * x.u) +
                     x.g / (x.g - 1) * x.p / x.rho + x.Hz * x.Hz / x.rho),
            regime);
        law.guard_keys = entropy_guard(C(Sym::S0) * S().pow(q1));
        law.guard_keys.push_back({JetVar{Field::Htheta, 0, 0}, Expr::zero()});
        law.guard_keys.push_back(
            {JetVar{Field::Hz, 0, 0},
             C(Sym::G0) * S().pow(Scalar(rat(-3, 2))) * x.rho});
        law.guard_keys.push_back(
            {JetVar{Field::V, 0, 0}, C(Sym::R0) * S().pow(Scalar(-1)) / x.r});
        law.violation_note = "fails without the power-profile guards";
        add(std::move(law));
      }
      {
        // exponential-profile law, F0 != 0 (q3 = q4 = 0)
        Scalar q2(Sym::Q2);
        Scalar q1 = -two * (gam - two) * q2;
        Profile Sp = Profile::exponential_rate(Sym::S0, q1, "exp_qS");
        Profile Fp = Profile::exponential(Sym::F0, Sym::Q2);
        Expr c1 = Expr::scalar(two * q2);
        ConservationLaw law = make_law(
            base + ".exp_F", "exponential-profile law (F0 != 0)",
            c1 * T() * x.energy(false) - x.u / (x.r * x.rho) -
                Expr::scalar(q2) * x.r * x.u,
            Expr::scalar(q2) * (2 * T() * x.r * x.u - x.r * x.r) *
                    (x.p + kHalf * x.H2()) -
                (kHalf * (x.v * x.v - x.u * x.u) +
                 x.g / (x.g - 1) * x.p / x.rho + x.H2() / x.rho),
            regime);
        law.guard_keys = entropy_guard(Sp.expr());
        law.guard_keys.push_back(
            {JetVar{Field::Htheta, 0, 0}, Fp.expr() * x.r * x.rho});
        law.guard_keys.push_back({JetVar{Field::Hz, 0, 0}, C(Sym::G0) * x.rho});
        law.guard_keys.push_back({JetVar{Field::V, 0, 0}, C(Sym::R0) / x.r});
        law.profiles = {Sp, Fp};
        law.violation_note = "fails without the exponential-profile guards";
        add(std::move(law));
      }
      {
        // exponential-profile law, F0 = 0 (q3 = q4 = 0)
        Scalar q1(Sym::Q1);
        Profile Sp = Profile::exponential(Sym::S0, Sym::Q1);
        Expr c1 = Expr::scalar(two * q1);
        Expr cs = Expr::scalar(two * (gam - two));
        ConservationLaw law = make_law(
            base + ".exp_G", "exponential-profile law (F0 = 0)",
            c1 * T() * x.energy(false) + cs * x.u / (x.r * x.rho) -
                Expr::scalar(q1) * x.r * x.u,
            Expr::scalar(q1) * (2 * T() * x.r * x.u - x.r * x.r) *
                    (x.p + kHalf * x.Hz * x.Hz) +
                cs * (kHalf * (x.v * x.v - x.u * x.u) +
                      x.g / (x.g - 1) * x.p / x.rho + x.Hz * x.Hz / x.rho),
            regime);
        law.guard_keys = entropy_guard(Sp.expr());
        law.guard_keys.push_back({JetVar{Field::Htheta, 0, 0}, Expr::zero()});
        law.guard_keys.push_back({JetVar{Field::Hz, 0, 0}, C(Sym::G0) * x.rho});
        law.guard_keys.push_back({JetVar{Field::V, 0, 0}, C(Sym::R0) / x.r});
        law.profiles = {Sp};
        law.violation_note = "fails without the exponential-profile guards";
        add(std::move(law));
      }
    } else {
      // gamma = 2 extras; the entropy guard uses p = St rho^2 - Hz^2/2
      auto st_guard = [&](const Expr& st_profile) {
        JetRules g;
        g.push_back({JetVar{Field::P, 0, 0},
                     st_profile * x.rho * x.rho - kHalf * x.Hz * x.Hz});
        return g;
      };
      {
        ConservationLaw law = make_law(
            base + ".scaling", "gamma = 2 time scaling",
            2 * T() *
                    (kHalf * (x.u * x.u + x.v * x.v) +
                     x.p / ((x.g - 1) * x.rho) + x.Hz * x.Hz / (2 * x.rho)) -
                x.r * x.u,
            (2 * T() * x.r * x.u - x.r * x.r) * (x.p + kHalf * x.Hz * x.Hz),
            regime);
        law.guard_keys = {{JetVar{Field::Htheta, 0, 0}, Expr::zero()}};
        law.violation_note = "fails for gamma != 2";
        add(std::move(law));
      }
      {
        ConservationLaw law = make_law(
            base + ".projective", "gamma = 2 projective law",
            T() * T() *
                    (kHalf * (x.u * x.u + x.v * x.v) +
                     x.p / ((x.g - 1) * x.rho) + x.Hz * x.Hz / (2 * x.rho)) -
                T() * x.r * x.u + kHalf * x.r * x.r,
            (T() * T() * x.r * x.u - T() * x.r * x.r) *
                (x.p + kHalf * x.Hz * x.Hz),
            regime);
        law.guard_keys = {{JetVar{Field::Htheta, 0, 0}, Expr::zero()}};
        law.violation_note = "fails for gamma != 2";
        add(std::move(law));
      }
      {
        ConservationLaw law = make_law(
            base + ".s_translation", "mass-coordinate translation",
            x.u / (x.r * x.rho),
            kHalf * (x.v * x.v - x.u * x.u) + x.g / (x.g - 1) * x.p / x.rho +
                x.H2() / x.rho,
            regime);
        law.guard_keys = st_guard(C(Sym::S0));
        law.guard_keys.push_back(
            {JetVar{Field::Htheta, 0, 0}, C(Sym::F0) * x.r * x.rho});
        law.guard_keys.push_back({JetVar{Field::V, 0, 0}, C(Sym::R0) / x.r});
        law.violation_note = "fails without the constant-profile guards";
        add(std::move(law));
      }
      {
        // power case with F = 0: Z2 = t dt + s ds
        ConservationLaw law = make_law(
            base + ".power_ts", "gamma = 2 power-profile law",
            T() * (kHalf * (x.u * x.u + x.v * x.v) +
                   x.p / ((x.g - 1) * x.rho) + x.Hz * x.Hz / (2 * x.rho)) +
                S() * x.u / (x.r * x.rho),
            T() * x.r * x.u * (x.p + kHalf * x.Hz * x.Hz) +
                S() * (kHalf * (x.v * x.v - x.u * x.u) +
                       x.g / (x.g - 1) * x.p / x.rho + x.Hz * x.Hz / x.rho),
            regime);
        law.guard_keys = st_guard(C(Sym::S0) * S().pow(Scalar(-3)));
        law.guard_keys.push_back({JetVar{Field::Htheta, 0, 0}, Expr::zero()});
        law.guard_keys.push_back(
            {JetVar{Field::V, 0, 0}, C(Sym::R0) * S().pow(Scalar(-1)) / x.r});
        law.violation_note = "fails without the power-profile guards";
        add(std::move(law));
      }
      {
        // gamma = 2 power case with F0 != 0 (q1 = -3, q3 = -1)
        Scalar q2(Sym::Q2), one(1), two(2);
        Expr c1 = Expr::scalar(Scalar(4) * (q2 + one));
        Expr c2 = Expr::scalar(two * q2 + Scalar(3));
        ConservationLaw law = make_law(
            base + ".power_F", "gamma = 2 power-profile law (F0 != 0)",
            c1 * T() * x.energy(false) - 2 * S() * x.u / (x.r * x.rho) -
                c2 * x.r * x.u,
            (c1 * T() * x.r * x.u - c2 * x.r * x.r) *
                    (x.p + kHalf * x.H2()) -
                2 * S() *
                    (kHalf * (x.v * x.v - x.u * x.u) +
                     x.g / (x.g - 1) * x.p / x.rho + x.H2() / x.rho),
            regime);
        law.guard_keys = st_guard(C(Sym::S0) * S().pow(Scalar(-3)));
        law.guard_keys.push_back(
            {JetVar{Field::Htheta, 0, 0},
             C(Sym::F0) * S().pow(Scalar(Sym::Q2)) * x.r * x.rho});
        law.guard_keys.push_back(
            {JetVar{Field::V, 0, 0}, C(Sym::R0) * S().pow(Scalar(-1)) / x.r});
        law.violation_note = "fails without the power-profile guards";
        add(std::move(law));
      }
      {
        // gamma = 2 exponential case with F0 != 0 (q1 = q3 = 0)
        Scalar q2(Sym::Q2), two(2);
        Profile Fp = Profile::exponential(Sym::F0, Sym::Q2);
        ConservationLaw law = make_law(
            base + ".exp_F", "gamma = 2 exponential-profile law",
            Expr::scalar(two * q2) * T() * x.energy(false) -
                x.u / (x.r * x.rho) - Expr::scalar(q2) * x.r * x.u,
            Expr::scalar(q2) * (2 * T() * x.r * x.u - x.r * x.r) *
                    (x.p + kHalf * x.H2()) -
                (kHalf * (x.v * x.v - x.u * x.u) +
                 x.g / (x.g - 1) * x.p / x.rho + x.H2() / x.rho),
            regime);
        law.guard_keys = st_guard(C(Sym::S0));
        law.guard_keys.push_back(
            {JetVar{Field::Htheta, 0, 0}, Fp.expr() * x.r * x.rho});
        law.guard_keys.push_back({JetVar{Field::V, 0, 0}, C(Sym::R0) / x.r});
        law.profiles = {Fp};
        law.violation_note = "fails without the exponential-profile guards";
        add(std::move(law));
      }
    }
  }
  return out;
}

std::vector<ConservationLaw> claw_catalog_all() {
  std::vector<ConservationLaw> all;
  ConductivityModel opaque;  // generic sigma
  ConductivityModel crho;
  crho.kind = SigmaKind::CRho;
  auto append = [&](std::vector<ConservationLaw> v) {
    for (auto& law : v) {
      bool seen = false;
      for (auto& e : all) seen = seen || e.id == law.id;
      if (!seen) all.push_back(std::move(law));
    }
  };
  append(claw_catalog(Regime::finite_A(), crho));
  append(claw_catalog(Regime::finite_A0(), crho));
  append(claw_catalog(Regime::infinite_A(), ConductivityModel{SigmaKind::Infinite}));
  append(claw_catalog(Regime::infinite_A0(), ConductivityModel{SigmaKind::Infinite}));
  append(claw_catalog(Regime::infinite_A0(true), ConductivityModel{SigmaKind::Infinite}));
  return all;
}

std::optional<ConservationLaw> claw_by_id(const std::string& id) {
  for (auto& law : claw_catalog_all())
    if (law.id == id) return law;
  return std::nullopt;
}

PdeSystem guarded_system(const ConservationLaw& law) {
  ModelConfig cfg;
  if (law.regime.cond == Conductivity::Infinite)
    cfg = ModelConfig::infinite();
  else if (law.sigma_guard)
    cfg.sigma.kind = *law.sigma_guard;
  PdeSystem sys = build_system(cfg, law.regime);
  sys = sys.with_extra_keys(law.guard_keys);
  for (auto& pr : law.profiles)
    if (auto c = pr.exp_closure()) sys.fn_closures.push_back(*c);
  return sys;
}

ZeroResult symbolic_audit_detail(const ConservationLaw& law,
                                 const PdeSystem& sys, ZeroTestOptions opt) {
  Expr div = total_derivative(law.Tt, Dir::T) + total_derivative(law.Ts, Dir::X);
  for (auto& [s, v] : law.binds)
    if (!opt.bind_syms.count(s)) opt.bind_syms[s] = v;
  opt.use_nonlocal = opt.use_nonlocal || law.use_nonlocal;
  PdeSystem guarded = sys.with_extra_keys(law.guard_keys);
  for (auto& pr : law.profiles)
    if (auto c = pr.exp_closure()) guarded.fn_closures.push_back(*c);
  Expr cur = reduce_on_manifold(div, guarded, opt);
  if (cur.is_zero()) return {true, ZeroMethod::Symbolic, 0.0};
  if (!opt.allow_numeric) return {false, ZeroMethod::Symbolic, 0.0};
  double worst = max_numeric_residual(cur, opt.seed, opt.samples, opt.lo,
                                      opt.hi, opt.den_tol);
  if (worst <= opt.pass_tol) return {true, ZeroMethod::Numeric, worst};
  if (worst < opt.fail_tol) throw InconclusiveZeroTest(worst);
  return {false, ZeroMethod::Numeric, worst};
}

bool symbolic_audit(const ConservationLaw& law, const PdeSystem& sys,
                    ZeroTestOptions opt) {
  return symbolic_audit_detail(law, sys, opt).zero;
}

ConservationLaw to_eulerian(const ConservationLaw& law) {
  Expr rho = J(Field::Rho), u = J(Field::U);
  Expr r = J(Field::R);
  if (law.Tt.atoms().count(indep_atom(Dir::X)) ||
      law.Ts.atoms().count(indep_atom(Dir::X)))
    throw GuardMismatch(
        "the mass coordinate is nonlocal in Eulerian variables");
  Expr eTt = r * rho * law.Tt;
  Expr eTr = r * rho * u * law.Tt + law.Ts;
  // re-express over the Eulerian base: the radius becomes the coordinate
  JetRules to_euler = {{JetVar{Field::R, 0, 0}, Expr::indep(Dir::X)}};
  ConservationLaw out = law;
  out.id = law.id + ".euler";
  out.Tt = substitute(eTt, to_euler);
  out.Ts = substitute(eTr, to_euler);
  return out;
}

Expr eulerian_conversion_identity_residual() {
  std::vector<Expr> args = {T(),
                            S(),
                            J(Field::R),
                            J(Field::U),
                            J(Field::V),
                            J(Field::W),
                            J(Field::Rho),
                            J(Field::P),
                            J(Field::Htheta),
                            J(Field::Hz)};
  Expr Tt = Expr::fn("Tt", args), Ts = Expr::fn("Ts", args);
  Expr rho = J(Field::Rho), u = J(Field::U), r = J(Field::R);
  Expr lhs = total_derivative(Tt, Dir::T) + total_derivative(Ts, Dir::X);
  Expr DtE_of_rrT = total_derivative(r * rho * Tt, Dir::T) -
                    u * r * rho * total_derivative(r * rho * Tt, Dir::X);
  Expr Dr_of_flux =
      r * rho * total_derivative(r * rho * u * Tt + Ts, Dir::X);
  Expr rhs = (DtE_of_rrT + Dr_of_flux) / (r * rho);
  return lhs - rhs;
}

}  // namespace cylmhd
