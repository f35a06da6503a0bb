#pragma once

#include "cylmhd/manifold.hpp"

namespace cylmhd {

struct InvalidConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Conductivity { Finite, Infinite };
enum class AClass { NonZero, Zero };

struct Regime {
  Conductivity cond = Conductivity::Finite;
  AClass aclass = AClass::NonZero;
  bool gamma2 = false;  // gamma = 2 subcase, used by the variational checks

  static Regime finite_A() { return {Conductivity::Finite, AClass::NonZero}; }
  static Regime finite_A0() { return {Conductivity::Finite, AClass::Zero}; }
  static Regime infinite_A() { return {Conductivity::Infinite, AClass::NonZero}; }
  static Regime infinite_A0(bool g2 = false) {
    return {Conductivity::Infinite, AClass::Zero, g2};
  }
  std::string str() const;
};

// Electric conductivity models of the classification tables.
enum class SigmaKind {
  Opaque,            // arbitrary sigma(rho, p)
  FOfRho,            // F(rho)
  SqrtRhoFPRhoAlpha, // sqrt(rho) F(p rho^alpha)
  CRho,              // C rho
  SqrtRhoFP,         // sqrt(rho) F(p)
  CSqrtRho,          // C sqrt(rho)
  SqrtRhoPPowC,      // C sqrt(rho) p^(1/(2(alpha-1)))
  PowerLaw,          // C rho^((alpha+beta-2)/(2(alpha+beta-1))) p^((2-alpha)/(2(alpha+beta-1)))
  FPRhoAlphaMinus2,  // sqrt(rho) F(p rho^(1/(alpha-2)))
  RhoPowFP,          // rho^((2a-b)/(2(2a-b-1))) F(p rho^((1-a)/(2a-b-1)))
  Infinite
};

struct ConductivityModel {
  SigmaKind kind = SigmaKind::Opaque;
  // Parameter checks when alpha/beta are pinned to numbers.
  std::optional<Rat> alpha, beta, C;

  Expr expr() const;  // throws InvalidConfig for Infinite
  bool is_infinite() const { return kind == SigmaKind::Infinite; }
  // Rejects parameter sets that zero a structural denominator.
  void validate() const;
  std::string str() const;
};

struct ModelConfig {
  std::optional<Rat> gamma;  // nullopt = symbolic, must be > 1 when pinned
  ConductivityModel sigma;
  std::map<Sym, Rat> bindings() const;  // gamma/alpha/beta/C values if pinned

  static ModelConfig opaque_sigma() { return {}; }
  static ModelConfig infinite() {
    ModelConfig c;
    c.sigma.kind = SigmaKind::Infinite;
    return c;
  }
};

// Mass-Lagrangian system of the given regime, in solved form, with the
// electric field eliminated algebraically for finite conductivity.
PdeSystem build_system(const ModelConfig& config, const Regime& regime);

// Eulerian cylindrical system (independent variables t, r) used for the
// density-conversion checks.  The second base direction is the radius.
PdeSystem build_euler_system(const ModelConfig& config, const Regime& regime);

// Entropy function S = p / rho^gamma.
Expr entropy_expr();

// Divergence-form rewrites of the induction equations: pairs (density,
// flux) with (density)_t = (flux)_s on solutions.
std::vector<std::pair<Expr, Expr>> flux_forms(const Regime& regime);

// Profiles S(s), F(s), G(s), R(s) of the variational classification.
enum class ProfileKind { Arbitrary, Constant, Power, Exponential, Zero };

struct Profile {
  ProfileKind kind = ProfileKind::Arbitrary;
  // opaque name: the function itself for the arbitrary case, the
  // exponential factor for the exponential case
  std::string fname;
  Sym amplitude = Sym::S0;
  Scalar rate = Scalar(Sym::Q);  // power-law or exponential exponent

  Expr expr() const;
  // Derivative closure for exponential profiles: the opaque exp factor and
  // its per-order multiplier, applied after differentiation.
  std::optional<std::pair<std::string, Expr>> exp_closure() const;

  static Profile arbitrary(std::string name);
  static Profile constant(Sym amp);
  static Profile power(Sym amp, Scalar rate);
  static Profile exponential(Sym amp, Sym rate);
  static Profile exponential_rate(Sym amp, Scalar rate, std::string name);
  static Profile zero();
};

// Replaces derivative applications of exponential profile factors by the
// closed form (D^n exp(qs) = q^n exp(qs)).
Expr close_profile_derivatives(const Expr& e,
                               const std::vector<Profile>& profiles);

}  // namespace cylmhd
