#pragma once

#include "cylmhd/noether.hpp"

namespace cylmhd {

struct GuardMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A conservation law D_t T^t + D_s T^s = 0 together with its validity
// guard: the regime, the conductivity model it needs, algebraic profile
// constraints, and constant pins.
struct ConservationLaw {
  std::string id;
  std::string title;
  Expr Tt, Ts;
  Regime regime;
  std::optional<SigmaKind> sigma_guard;  // law needs this model when set
  JetRules guard_keys;
  std::map<Sym, Rat> binds;
  bool use_nonlocal = false;
  std::vector<Profile> profiles;  // for exponential-profile closure
  // recorded guard violation used by the sharpness regression: a modified
  // system / law under which the audit must fail
  std::string violation_note;
};

// All conservation laws valid for the given regime and conductivity model.
std::vector<ConservationLaw> claw_catalog(const Regime& regime,
                                          const ConductivityModel& model);

// The full catalog across regimes (deduplicated by id).
std::vector<ConservationLaw> claw_catalog_all();

std::optional<ConservationLaw> claw_by_id(const std::string& id);

// Is D_t T^t + D_s T^s zero on the guarded solution manifold?
ZeroResult symbolic_audit_detail(const ConservationLaw& law,
                                 const PdeSystem& sys,
                                 ZeroTestOptions opt = {});
bool symbolic_audit(const ConservationLaw& law, const PdeSystem& sys,
                    ZeroTestOptions opt = {});

// Builds the system a law wants to be audited against.
PdeSystem guarded_system(const ConservationLaw& law);

// Lagrangian -> Eulerian density conversion (eT^t, eT^r) =
// (r rho T^t, r rho u T^t + T^s), re-expressed over the Eulerian base.
ConservationLaw to_eulerian(const ConservationLaw& law);

// Residual of the operator identity behind the conversion, for opaque
// densities; canonical zero on the Lagrangian manifold.
Expr eulerian_conversion_identity_residual();

}  // namespace cylmhd
