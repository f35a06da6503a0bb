#include "cylmhd/mhd.hpp"

#include "cylmhd/parse.hpp"

namespace cylmhd {

namespace {

Expr J(Field f, int dt = 0, int dx = 0) { return Expr::jet(f, dt, dx); }
Expr C(Sym s) { return Expr::constant(s); }
Expr Ds(const Expr& e) { return total_derivative(e, Dir::X); }

const Expr kHalf = Expr::rational(rat(1, 2));

}  // namespace

std::string Regime::str() const {
  std::string s = cond == Conductivity::Finite ? "finite" : "infinite";
  s += aclass == AClass::NonZero ? ".A" : ".A0";
  if (gamma2) s += ".g2";
  return s;
}

Expr ConductivityModel::expr() const {
  Expr rho = J(Field::Rho), p = J(Field::P);
  Scalar a(Sym::Alpha), b(Sym::Beta), one(1), two(2);
  switch (kind) {
    case SigmaKind::Opaque:
      return Expr::fn("sigma", {rho, p});
    case SigmaKind::FOfRho:
      return Expr::fn("F", {rho});
    case SigmaKind::SqrtRhoFPRhoAlpha:
      return rho.pow(Scalar(rat(1, 2))) *
             Expr::fn("F", {p * rho.pow(Scalar(Sym::Alpha))});
    case SigmaKind::CRho:
      return Expr::constant(Sym::C) * rho;
    case SigmaKind::SqrtRhoFP:
      return rho.pow(Scalar(rat(1, 2))) * Expr::fn("F", {p});
    case SigmaKind::CSqrtRho:
      return Expr::constant(Sym::C) * rho.pow(Scalar(rat(1, 2)));
    case SigmaKind::SqrtRhoPPowC:
      return Expr::constant(Sym::C) * rho.pow(Scalar(rat(1, 2))) *
             p.pow(one / (two * (a - one)));
    case SigmaKind::PowerLaw:
      return Expr::constant(Sym::C) *
             rho.pow((a + b - two) / (two * (a + b - one))) *
             p.pow((two - a) / (two * (a + b - one)));
    case SigmaKind::FPRhoAlphaMinus2:
      return rho.pow(Scalar(rat(1, 2))) *
             Expr::fn("F", {p * rho.pow(one / (a - two))});
    case SigmaKind::RhoPowFP:
      return rho.pow((two * a - b) / (two * (two * a - b - one))) *
             Expr::fn("F", {p * rho.pow((one - a) / (two * a - b - one))});
    case SigmaKind::Infinite:
      throw InvalidConfig("infinite conductivity has no sigma expression");
  }
  throw InvalidConfig("unknown conductivity kind");
}

void ConductivityModel::validate() const {
  auto check = [&](const Rat& v, const char* what) {
    if (v == 0)
      throw InvalidConfig(
          std::string("conductivity parameters zero a denominator: ") + what);
  };
  if (alpha && kind == SigmaKind::SqrtRhoPPowC) check(*alpha - 1, "alpha-1");
  if (alpha && kind == SigmaKind::FPRhoAlphaMinus2) check(*alpha - 2, "alpha-2");
  if (alpha && beta && kind == SigmaKind::RhoPowFP)
    check(2 * *alpha - *beta - 1, "2*alpha-beta-1");
  if (alpha && beta && kind == SigmaKind::PowerLaw)
    check(*alpha + *beta - 1, "alpha+beta-1");
  if (C && *C == 0 && (kind == SigmaKind::CRho || kind == SigmaKind::CSqrtRho))
    throw InvalidConfig("sigma must not vanish identically");
}

std::string ConductivityModel::str() const {
  switch (kind) {
    case SigmaKind::Opaque: return "sigma(rho,p)";
    case SigmaKind::FOfRho: return "F(rho)";
    case SigmaKind::SqrtRhoFPRhoAlpha: return "sqrt(rho)*F(p*rho^alpha)";
    case SigmaKind::CRho: return "C*rho";
    case SigmaKind::SqrtRhoFP: return "sqrt(rho)*F(p)";
    case SigmaKind::CSqrtRho: return "C*sqrt(rho)";
    case SigmaKind::SqrtRhoPPowC: return "C*sqrt(rho)*p^(1/(2*(alpha-1)))";
    case SigmaKind::PowerLaw: return "C*rho^a*p^b power law";
    case SigmaKind::FPRhoAlphaMinus2: return "sqrt(rho)*F(p*rho^(1/(alpha-2)))";
    case SigmaKind::RhoPowFP: return "rho^a*F(p*rho^b)";
    case SigmaKind::Infinite: return "infinite";
  }
  return "?";
}

std::map<Sym, Rat> ModelConfig::bindings() const {
  std::map<Sym, Rat> b;
  if (gamma) b[Sym::Gamma] = *gamma;
  if (sigma.alpha) b[Sym::Alpha] = *sigma.alpha;
  if (sigma.beta) b[Sym::Beta] = *sigma.beta;
  if (sigma.C) b[Sym::C] = *sigma.C;
  return b;
}

Expr entropy_expr() {
  return J(Field::P) * J(Field::Rho).pow(-Scalar(Sym::Gamma));
}

PdeSystem build_system(const ModelConfig& config, const Regime& regime) {
  bool finite = regime.cond == Conductivity::Finite;
  bool withA = regime.aclass == AClass::NonZero;
  if (finite && config.sigma.is_infinite())
    throw InvalidConfig("finite regime requires a conductivity model");
  if (!finite && !config.sigma.is_infinite())
    throw InvalidConfig("infinite regime admits no conductivity model");
  if (config.gamma && *config.gamma <= 1)
    throw InvalidConfig("polytropic constant must exceed 1");
  config.sigma.validate();

  Expr rho = J(Field::Rho), u = J(Field::U), v = J(Field::V), w = J(Field::W);
  Expr p = J(Field::P), Ht = J(Field::Htheta), Hz = J(Field::Hz);
  Expr Et = J(Field::Etheta), Ez = J(Field::Ez);
  Expr r = J(Field::R);
  Expr g = C(Sym::Gamma), A = C(Sym::A);
  Expr Hr = withA ? A / r : Expr::zero();

  Expr ru_s = Ds(r * u);

  PdeSystem sys;
  sys.name = "lagrange." + regime.str();

  auto add = [&](Field f, const Expr& rhs, const Expr& residual) {
    sys.solved.push_back({JetVar{f, 1, 0}, rhs});
    sys.residuals.push_back(residual);
  };

  // continuity
  add(Field::Rho, -(rho * rho) * ru_s, J(Field::Rho, 1, 0) + rho * rho * ru_s);
  // radial momentum, entered in the paper's grouped divergence form
  Expr u_rhs = v * v / r - r * Ds(p) - (1 / (2 * r)) * Ds(r * r * Ht * Ht) -
               (r * kHalf) * Ds(Hz * Hz);
  add(Field::U, u_rhs, J(Field::U, 1, 0) - u_rhs);
  add(Field::R, u, J(Field::R, 1, 0) - u);
  // azimuthal momentum
  Expr v_rhs = -u * v / r + (withA ? Hr * Ds(r * Ht) : Expr::zero());
  add(Field::V, v_rhs, J(Field::V, 1, 0) - v_rhs);
  add(Field::Theta, v / r, J(Field::Theta, 1, 0) - v / r);
  // axial momentum; for A = 0 the w,z pair decouples and is kept as solved
  // relations of the extended system only, not as residuals of the reduced
  // one
  if (withA) {
    Expr w_rhs = r * Hr * Ds(Hz);
    add(Field::W, w_rhs, J(Field::W, 1, 0) - w_rhs);
    add(Field::Z, w, J(Field::Z, 1, 0) - w);
  } else {
    sys.solved.push_back({JetVar{Field::W, 1, 0}, Expr::zero()});
    sys.solved.push_back({JetVar{Field::Z, 1, 0}, w});
  }
  // pressure with Joule heating for finite conductivity
  Expr joule = finite ? (g - 1) * config.sigma.expr() * (Et * Et + Ez * Ez)
                      : Expr::zero();
  Expr p_rhs = -g * rho * p * ru_s + joule;
  add(Field::P, p_rhs, J(Field::P, 1, 0) - p_rhs);
  // induction
  Expr ht_flux = (withA ? v * Hr : Expr::zero()) + (finite ? Ez : Expr::zero());
  Expr ht_rhs = r * rho * (Ds(ht_flux) - Ht * Ds(u));
  add(Field::Htheta, ht_rhs, J(Field::Htheta, 1, 0) - ht_rhs);
  Expr hz_flux =
      (withA ? r * w * Hr : Expr::zero()) - (finite ? r * Et : Expr::zero());
  Expr hz_rhs = rho * (Ds(hz_flux) - Hz * ru_s);
  add(Field::Hz, hz_rhs, J(Field::Hz, 1, 0) - hz_rhs);

  if (finite) {
    Expr sig = config.sigma.expr();
    // sigma*Etheta = -r*rho*Hz_s and sigma*Ez = rho*(r*Htheta)_s
    sys.residuals.push_back(sig * Et + r * rho * Ds(Hz));
    sys.residuals.push_back(sig * Ez - rho * Ds(r * Ht));
    sys.solved.push_back({JetVar{Field::Etheta, 0, 0}, -r * rho * Ds(Hz) / sig});
    sys.solved.push_back({JetVar{Field::Ez, 0, 0}, rho * Ds(r * Ht) / sig});
  }

  // nonlocal radius
  sys.solved.push_back({JetVar{Field::R, 0, 1}, 1 / (r * rho)});

  if (!finite && withA) {
    // gauge-fixed potential relations; only the scaling law may assume them
    sys.nonlocal.push_back({JetVar{Field::Theta, 0, 1}, Ht / (r * rho * A)});
    sys.nonlocal.push_back({JetVar{Field::Z, 0, 1}, Hz / (rho * A)});
  }
  return sys;
}

PdeSystem build_euler_system(const ModelConfig& config, const Regime& regime) {
  bool finite = regime.cond == Conductivity::Finite;
  bool withA = regime.aclass == AClass::NonZero;
  if (finite && config.sigma.is_infinite())
    throw InvalidConfig("finite regime requires a conductivity model");

  Expr rho = J(Field::Rho), u = J(Field::U), v = J(Field::V), w = J(Field::W);
  Expr p = J(Field::P), Ht = J(Field::Htheta), Hz = J(Field::Hz);
  Expr Et = J(Field::Etheta), Ez = J(Field::Ez);
  Expr r = Expr::indep(Dir::X);  // the radius is the base coordinate here
  Expr g = C(Sym::Gamma), A = C(Sym::A);
  Expr Hr = withA ? A / r : Expr::zero();

  PdeSystem sys;
  sys.name = "euler." + regime.str();
  auto add = [&](Field f, const Expr& rhs) {
    sys.solved.push_back({JetVar{f, 1, 0}, rhs});
    sys.residuals.push_back(J(f, 1, 0) - rhs);
  };

  add(Field::Rho, -(1 / r) * Ds(r * rho * u));
  add(Field::U, -u * Ds(u) + v * v / r -
                    (Ds(p) + (Ht / r) * Ds(r * Ht) + Hz * Ds(Hz)) / rho);
  add(Field::V, -u * Ds(v) - u * v / r +
                    (withA ? (Hr / (r * rho)) * (r * Ds(r * Ht)) / r
                           : Expr::zero()));
  add(Field::W, -u * Ds(w) + (withA ? Hr * Ds(Hz) / rho : Expr::zero()));
  Expr joule = finite ? (g - 1) * config.sigma.expr() * (Et * Et + Ez * Ez)
                      : Expr::zero();
  add(Field::P, -u * Ds(p) - g * p * (1 / r) * Ds(r * u) + joule);
  Expr ht_flux = (withA ? v * Hr : Expr::zero()) - u * Ht +
                 (finite ? Ez : Expr::zero());
  add(Field::Htheta, Ds(ht_flux));
  Expr hz_flux = (withA ? w * Hr : Expr::zero()) - u * Hz -
                 (finite ? Et : Expr::zero());
  add(Field::Hz, (1 / r) * Ds(r * hz_flux));

  if (finite) {
    Expr sig = config.sigma.expr();
    sys.residuals.push_back(sig * Et + Ds(Hz));
    sys.residuals.push_back(sig * Ez - (1 / r) * Ds(r * Ht));
    sys.solved.push_back({JetVar{Field::Etheta, 0, 0}, -Ds(Hz) / sig});
    sys.solved.push_back({JetVar{Field::Ez, 0, 0}, (1 / r) * Ds(r * Ht) / sig});
  }
  return sys;
}

std::vector<std::pair<Expr, Expr>> flux_forms(const Regime& regime) {
  bool finite = regime.cond == Conductivity::Finite;
  bool withA = regime.aclass == AClass::NonZero;
  Expr rho = J(Field::Rho), v = J(Field::V), w = J(Field::W);
  Expr Ht = J(Field::Htheta), Hz = J(Field::Hz);
  Expr Et = J(Field::Etheta), Ez = J(Field::Ez);
  Expr r = J(Field::R), A = C(Sym::A);
  Expr Hr = withA ? A / r : Expr::zero();
  Expr f1 = (withA ? v * Hr : Expr::zero()) + (finite ? Ez : Expr::zero());
  Expr f2 =
      (withA ? r * w * Hr : Expr::zero()) - (finite ? r * Et : Expr::zero());
  return {{Ht / (r * rho), f1}, {Hz / rho, f2}};
}

Profile Profile::arbitrary(std::string name) {
  Profile p;
  p.kind = ProfileKind::Arbitrary;
  p.fname = std::move(name);
  return p;
}
Profile Profile::constant(Sym amp) {
  Profile p;
  p.kind = ProfileKind::Constant;
  p.amplitude = amp;
  return p;
}
Profile Profile::power(Sym amp, Scalar rate) {
  Profile p;
  p.kind = ProfileKind::Power;
  p.amplitude = amp;
  p.rate = std::move(rate);
  return p;
}
Profile Profile::exponential(Sym amp, Sym rate) {
  return exponential_rate(amp, Scalar(rate),
                          std::string("exp_") + sym_name(rate));
}
Profile Profile::exponential_rate(Sym amp, Scalar rate, std::string name) {
  Profile p;
  p.kind = ProfileKind::Exponential;
  p.amplitude = amp;
  p.rate = std::move(rate);
  p.fname = std::move(name);
  return p;
}
Profile Profile::zero() {
  Profile p;
  p.kind = ProfileKind::Zero;
  return p;
}

Expr Profile::expr() const {
  Expr s = Expr::indep(Dir::X);
  switch (kind) {
    case ProfileKind::Arbitrary:
      return Expr::fn(fname, {s});
    case ProfileKind::Constant:
      return Expr::constant(amplitude);
    case ProfileKind::Power:
      return Expr::constant(amplitude) * s.pow(rate);
    case ProfileKind::Exponential:
      return Expr::constant(amplitude) * Expr::fn(fname, {s});
    case ProfileKind::Zero:
      return Expr::zero();
  }
  return Expr::zero();
}

std::optional<std::pair<std::string, Expr>> Profile::exp_closure() const {
  if (kind != ProfileKind::Exponential) return std::nullopt;
  return std::make_pair(fname, Expr::scalar(rate));
}

Expr close_profile_derivatives(const Expr& e,
                               const std::vector<Profile>& profiles) {
  Expr cur = e;
  for (auto& p : profiles) {
    if (auto c = p.exp_closure())
      cur = close_fn_derivatives(cur, c->first, c->second);
  }
  return cur;
}

}  // namespace cylmhd
