#pragma once

#include "cylmhd/generator.hpp"
#include "cylmhd/mhd.hpp"

namespace cylmhd {

struct SymmetryReport {
  std::string generator;
  std::string system;
  bool passed = true;
  struct Item {
    bool zero = false;
    ZeroMethod method = ZeroMethod::Symbolic;
    double residual = 0;
  };
  std::vector<Item> items;
  double max_numeric = 0;
};

// X(F) for each residual F, reduced to the solution manifold.
std::vector<Expr> determining_residuals(const Generator& g,
                                        const PdeSystem& sys, int order = 1,
                                        const ZeroTestOptions& opt = {});

SymmetryReport check_symmetry(const Generator& g, const PdeSystem& sys,
                              int order = 1, const ZeroTestOptions& opt = {});

// Left-hand side minus right-hand side of the classifying equations for the
// conductivity, with the model substituted.
Expr classifying_residual_sigma_withA(const Scalar& a3, const Scalar& a4,
                                      const ConductivityModel& model);
Expr classifying_residual_sigma_noA(const Scalar& a3, const Scalar& a4,
                                    const Scalar& a5,
                                    const ConductivityModel& model);

// Residuals of the classifying conditions for the entropy/field profiles of
// the variational systems: the three-potential case (k1..k8) and the single
// potential case (k1..k5, optionally the gamma=2 variant with k6).
std::vector<Expr> classifying_residual_profiles_threepot(
    const std::array<Scalar, 8>& k, const Profile& S);
std::vector<Expr> classifying_residual_profiles_onepot(
    const std::array<Scalar, 5>& k, const Profile& S, const Profile& F,
    const Profile& G, const Profile& R);
std::vector<Expr> classifying_residual_profiles_onepot_gamma2(
    const std::array<Scalar, 6>& k, const Profile& St, const Profile& F,
    const Profile& R);

// --- generator catalogs -----------------------------------------------

// Symmetry basis of the finite-conductivity system with A != 0.
std::vector<Generator> extended_algebra_finite_A();
// Kernel admitted for every sigma(rho,p) and A.
std::vector<Generator> kern01();
// Symmetry basis of the reduced A = 0 system.
std::vector<Generator> extended_algebra_finite_A0();
std::vector<Generator> kern02();
// Admitted symmetries for infinite conductivity.
std::vector<Generator> symmetries_infinite_A();
std::vector<Generator> symmetries_infinite_A0();
// gamma = 2 extension of the infinite-conductivity A = 0 system.
Generator x7_gamma2();

struct ClassificationCase {
  std::string id;
  Generator gen;
  ConductivityModel model;
  ConductivityModel perturbed;  // recorded perturbation that must fail
  Regime regime;
  // row coefficients entering the classifying equation
  Scalar a3, a4, a5;
};
std::vector<ClassificationCase> table1_cases();
std::vector<ClassificationCase> table2_cases();

// Appendix equivalence generators per regime/system family.
std::vector<Generator> equivalence_finite_A();
std::vector<Generator> equivalence_finite_A0();
std::vector<Generator> equivalence_infinite_A();
std::vector<Generator> equivalence_variational_A();
std::vector<Generator> equivalence_variational_A0();
std::vector<Generator> equivalence_variational_A0_gamma2();

}  // namespace cylmhd
