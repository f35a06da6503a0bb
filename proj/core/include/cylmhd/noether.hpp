#pragma once

#include "cylmhd/liecheck.hpp"

namespace cylmhd {

struct NotASymmetry : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteInversion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// First-order Lagrangian over the potentials.
struct Lagrangian {
  Expr L;
  std::vector<Field> potentials;  // {Phi,Psi,Chi} or {Phi}
  std::vector<Profile> profiles;  // profile functions appearing in L
};

struct DivergencePair {
  Expr B1 = Expr::zero();
  Expr B2 = Expr::zero();
};

struct DensityPair {
  Expr Tt, Ts;
};

// Variational derivative, one residual per potential, oriented so the
// second time derivative of each potential enters with coefficient +1.
std::vector<Expr> euler_lagrange(const Lagrangian& lag);

// X L + L (D_t xi^t + D_s xi^s) - D_t B1 - D_s B2, canonicalized.  Zero
// identically iff X is a divergence symmetry (variational when B = 0).
Expr noether_identity_residual(const Lagrangian& lag, const Generator& X,
                               const DivergencePair& B);

// Conserved densities (N^t L - B1, N^s L - B2); requires the Noether
// residual to vanish (after pinning the given constants, e.g. gamma = 2).
DensityPair conserved_density(const Lagrangian& lag, const Generator& X,
                              const DivergencePair& B,
                              const std::map<Sym, Rat>& binds = {});

// Rule set sending potential-variable expressions to physical variables.
struct PotentialMap {
  JetRules rules;
  std::map<std::string, Expr> fn_map;
};
PotentialMap potential_map_A();
PotentialMap potential_map_A0();

DensityPair to_physical(const DensityPair& law, const PotentialMap& pm);

struct VariationalBuild {
  Lagrangian lag;
  PdeSystem system;
};

VariationalBuild build_variational_A(const Profile& S);
VariationalBuild build_variational_A0(const Profile& S, const Profile& F,
                                      const Profile& G, const Profile& R);
VariationalBuild build_variational_A0_gamma2(const Profile& St,
                                             const Profile& F,
                                             const Profile& R);
// Convenience dispatcher with arbitrary profiles.
VariationalBuild build_variational(AClass aclass, bool gamma2);

// One entry of the variational-symmetry catalog: a Lagrangian with pinned
// profiles, a (divergence) symmetry, and the physical-variable law the
// constructed density must match.
struct NoetherCase {
  std::string id;
  VariationalBuild build;
  Generator gen;
  DivergencePair B;
  std::map<Sym, Rat> binds;  // gamma pins
  JetRules physical_guard;   // profile constraints in physical variables
  std::string claw_id;       // matching law in the conservation-law catalog
  bool use_nonlocal = false;
};
std::vector<NoetherCase> noether_cases();

// Variational symmetry cases of the entropy classification (symmetry-only,
// checked against the potential systems): Tables of additional symmetries.
struct VariationalSymmetryCase {
  std::string id;
  VariationalBuild build;
  Generator gen;
  std::map<Sym, Rat> binds;
  bool expect_pass = true;
};
std::vector<VariationalSymmetryCase> variational_symmetry_cases();

}  // namespace cylmhd
