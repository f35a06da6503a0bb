#pragma once

#include "cylmhd/claw.hpp"
#include "cylmhd/solver.hpp"

namespace cylmhd {

// Discrete conservation audit of solver output.  Densities are evaluated
// with the solver's own staggering (T^t at cell centers, T^s at nodes) and
// one-sided boundary closures; interior-only statistics are reported
// separately.
struct DriftReport {
  struct PerLaw {
    std::string id;
    bool applicable = true;
    std::string skip_reason;
    double max_pointwise = 0;       // interior cells
    double initial_integral = 0;
    double global_drift_abs = 0;    // flux-corrected
    double global_drift_rel = 0;    // relative to max(|initial|, 1e-30)
    double interior_drift_rel = 0;  // boundary cells excluded from the sum
    // for T^s == 0 families: worst per-cell relative change of T^t
    double max_cellwise_rel = 0;
    bool has_cellwise = false;
  };
  std::vector<PerLaw> laws;
  double t0 = 0, t1 = 0;
  long steps = 0;

  const PerLaw* find(const std::string& id) const {
    for (auto& l : laws)
      if (l.id == id) return &l;
    return nullptr;
  }
};

DriftReport discrete_audit(const std::vector<ConservationLaw>& laws,
                           const TimeSeries& series);

// Time series of the density integral of one law (for plotting).
std::vector<std::pair<double, double>> density_integral_series(
    const ConservationLaw& law, const TimeSeries& series);

}  // namespace cylmhd
