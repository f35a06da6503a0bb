#pragma once

#include <iosfwd>
#include <limits>

#include "cylmhd/mhd.hpp"

namespace cylmhd {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonPositiveDensity : SolverError {
  int cell;
  explicit NonPositiveDensity(int c)
      : SolverError("non-positive density in cell " + std::to_string(c)),
        cell(c) {}
};
struct NonPositivePressure : SolverError {
  int cell;
  explicit NonPositivePressure(int c)
      : SolverError("non-positive pressure in cell " + std::to_string(c)),
        cell(c) {}
};
struct InvalidProfile : SolverError {
  using SolverError::SolverError;
};
struct ZeroConductivity : SolverError {
  using SolverError::SolverError;
};

enum class BoundaryKind { Rigid, Free };

// Initial profiles as expressions in the mass coordinate s.  The magnetic
// field is specified through the advected flux functions
// ftheta = Htheta/(r rho) and fz = Hz/rho.
struct InitialProfiles {
  Expr rho = Expr::one();
  Expr u = Expr::zero();
  Expr v = Expr::zero();
  Expr w = Expr::zero();
  Expr p = Expr::one();
  // entropy profile; when set, the initial pressure is S(s) rho^gamma
  std::optional<Expr> S;
  Expr ftheta = Expr::zero();
  Expr fz = Expr::zero();
};

struct RunConfig {
  Regime regime = Regime::infinite_A0();
  double gamma = 1.4;
  double A = 0.0;
  SigmaKind sigma_kind = SigmaKind::Infinite;
  double sigma_C = 1.0;     // parameter of sigma = C rho / C sqrt(rho)
  int N = 200;
  double s_min = 0.0, s_max = 1.0;
  double r_inner = 1.0;
  double cfl = 0.4;
  double t_end = 1.0;
  long max_steps = 1'000'000;
  BoundaryKind bc_left = BoundaryKind::Free;
  BoundaryKind bc_right = BoundaryKind::Free;
  // external total stress for free boundaries; NaN = take the initial value
  double p_ext_left = std::numeric_limits<double>::quiet_NaN();
  double p_ext_right = std::numeric_limits<double>::quiet_NaN();
  double viscosity = 2.0;  // von Neumann-Richtmyer coefficient
  bool viscosity_on = false;
  int output_every = 1;
  InitialProfiles init;

  void validate() const;
  double ds() const { return (s_max - s_min) / N; }
};

// Staggered state: velocities and radii live on nodes, thermodynamic and
// magnetic quantities in cells.
struct GridState {
  double t = 0;
  // nodes, size N+1
  std::vector<double> s_node, r, u;
  // cells, size N
  std::vector<double> s_cell, rho, p, entropy, v, w, theta, z, Htheta, Hz;
  // nodes, finite conductivity only
  std::vector<double> Etheta, Ez;
  // external total stress resolved at init (profile values at the faces)
  double pext_left = 0, pext_right = 0;

  int cells() const { return int(rho.size()); }
  double cell_r(int j) const { return 0.5 * (r[j] + r[j + 1]); }
};

struct TimeSeries {
  RunConfig config;
  std::vector<GridState> snapshots;
  std::vector<double> dts;
  long steps = 0;
  double min_dt = 0;
};

GridState init_grid(const RunConfig& cfg);
double cfl_dt(const GridState& st, const RunConfig& cfg);
GridState step(const GridState& st, const RunConfig& cfg, double dt);
// Electric field at nodes from the current state (finite conductivity).
void compute_E(const GridState& st, const RunConfig& cfg,
               std::vector<double>& Etheta, std::vector<double>& Ez);
TimeSeries run(const RunConfig& cfg);

// Serialization: one record per (time, node/cell).
void write_csv(const TimeSeries& ts, std::ostream& out);
void write_jsonl(const TimeSeries& ts, std::ostream& out);
TimeSeries read_jsonl(std::istream& in);

// Evaluates a profile expression at a given s (supports exp/log/sqrt/...
// as opaque calls).
double eval_profile(const Expr& e, double s);

}  // namespace cylmhd
