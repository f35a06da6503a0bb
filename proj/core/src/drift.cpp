#include "cylmhd/drift.hpp"

#include <cmath>

#include "cylmhd/eval.hpp"

namespace cylmhd {

namespace {

// Bindings for one cell (cell quantities direct, nodal averaged) or one
// node (nodal direct, cell quantities averaged).
struct Binder {
  const RunConfig& cfg;

  void bind_common(EvalContext& ctx) const {
    ctx.bind(Sym::Gamma, cfg.gamma);
    ctx.bind(Sym::A, cfg.A);
    ctx.bind(Sym::C, cfg.sigma_C);
  }

  EvalContext cell(const GridState& st, int j) const {
    EvalContext ctx;
    bind_common(ctx);
    ctx.bind_t(st.t);
    ctx.bind_x(st.s_cell[j]);
    ctx.bind(JetVar{Field::R, 0, 0}, st.cell_r(j));
    ctx.bind(JetVar{Field::U, 0, 0}, 0.5 * (st.u[j] + st.u[j + 1]));
    ctx.bind(JetVar{Field::Rho, 0, 0}, st.rho[j]);
    ctx.bind(JetVar{Field::P, 0, 0}, st.p[j]);
    ctx.bind(JetVar{Field::S, 0, 0}, st.entropy[j]);
    ctx.bind(JetVar{Field::V, 0, 0}, st.v[j]);
    ctx.bind(JetVar{Field::W, 0, 0}, st.w[j]);
    ctx.bind(JetVar{Field::Theta, 0, 0}, st.theta[j]);
    ctx.bind(JetVar{Field::Z, 0, 0}, st.z[j]);
    ctx.bind(JetVar{Field::Htheta, 0, 0}, st.Htheta[j]);
    ctx.bind(JetVar{Field::Hz, 0, 0}, st.Hz[j]);
    if (!st.Etheta.empty()) {
      ctx.bind(JetVar{Field::Etheta, 0, 0},
               0.5 * (st.Etheta[j] + st.Etheta[j + 1]));
      ctx.bind(JetVar{Field::Ez, 0, 0}, 0.5 * (st.Ez[j] + st.Ez[j + 1]));
    }
    return ctx;
  }

  EvalContext node(const GridState& st, int i) const {
    EvalContext ctx;
    bind_common(ctx);
    int N = st.cells();
    auto avg = [&](const std::vector<double>& c) {
      if (i == 0) return c[0];
      if (i == N) return c[N - 1];
      return 0.5 * (c[i - 1] + c[i]);
    };
    ctx.bind_t(st.t);
    ctx.bind_x(st.s_node[i]);
    ctx.bind(JetVar{Field::R, 0, 0}, st.r[i]);
    ctx.bind(JetVar{Field::U, 0, 0}, st.u[i]);
    ctx.bind(JetVar{Field::Rho, 0, 0}, avg(st.rho));
    ctx.bind(JetVar{Field::P, 0, 0}, avg(st.p));
    ctx.bind(JetVar{Field::S, 0, 0}, avg(st.entropy));
    ctx.bind(JetVar{Field::V, 0, 0}, avg(st.v));
    ctx.bind(JetVar{Field::W, 0, 0}, avg(st.w));
    ctx.bind(JetVar{Field::Theta, 0, 0}, avg(st.theta));
    ctx.bind(JetVar{Field::Z, 0, 0}, avg(st.z));
    ctx.bind(JetVar{Field::Htheta, 0, 0}, avg(st.Htheta));
    ctx.bind(JetVar{Field::Hz, 0, 0}, avg(st.Hz));
    if (!st.Etheta.empty()) {
      ctx.bind(JetVar{Field::Etheta, 0, 0}, st.Etheta[i]);
      ctx.bind(JetVar{Field::Ez, 0, 0}, st.Ez[i]);
    }
    return ctx;
  }
};

bool law_matches_series(const ConservationLaw& law, const RunConfig& cfg,
                        std::string* why) {
  if (law.regime.cond != cfg.regime.cond) {
    *why = "conductivity regime mismatch";
    return false;
  }
  if (law.regime.aclass != cfg.regime.aclass) {
    *why = "A-class mismatch";
    return false;
  }
  if (law.sigma_guard && *law.sigma_guard != cfg.sigma_kind) {
    *why = "law requires sigma model " + std::to_string(int(*law.sigma_guard));
    return false;
  }
  if (law.regime.gamma2 && cfg.gamma != 2.0) {
    *why = "law requires gamma = 2";
    return false;
  }
  auto it = law.binds.find(Sym::Gamma);
  if (it != law.binds.end() && std::abs(to_double(it->second) - cfg.gamma) > 0) {
    *why = "law requires gamma = " + to_string(it->second);
    return false;
  }
  for (Sym s : {Sym::S0, Sym::F0, Sym::G0, Sym::R0, Sym::Q, Sym::Q1, Sym::Q2,
                Sym::Q3, Sym::Q4, Sym::Alpha, Sym::Beta}) {
    if (law.Tt.depends_on_sym(s) || law.Ts.depends_on_sym(s)) {
      *why = std::string("law depends on unbound constant ") + sym_name(s);
      return false;
    }
  }
  return true;
}

}  // namespace

DriftReport discrete_audit(const std::vector<ConservationLaw>& laws,
                           const TimeSeries& series) {
  if (series.snapshots.size() < 2)
    throw GuardMismatch("audit needs at least two snapshots");
  const RunConfig& cfg = series.config;
  DriftReport rep;
  rep.t0 = series.snapshots.front().t;
  rep.t1 = series.snapshots.back().t;
  rep.steps = series.steps;
  Binder bind{cfg};
  double ds = cfg.ds();
  int N = cfg.N;

  for (const ConservationLaw& law : laws) {
    DriftReport::PerLaw pl;
    pl.id = law.id;
    std::string why;
    if (!law_matches_series(law, cfg, &why)) {
      pl.applicable = false;
      pl.skip_reason = why;
      rep.laws.push_back(pl);
      continue;
    }
    bool ts_zero = law.Ts.is_zero();
    bool exact_mass_flux = law.id.find(".mass") != std::string::npos;

    // per-snapshot evaluations
    size_t M = series.snapshots.size();
    std::vector<double> G(M, 0), Gint(M, 0), flux_l(M, 0), flux_r(M, 0);
    std::vector<std::vector<double>> Tt_cells(M);
    for (size_t m = 0; m < M; ++m) {
      const GridState& st = series.snapshots[m];
      Tt_cells[m].resize(N);
      for (int j = 0; j < N; ++j) {
        Tt_cells[m][j] = eval_numeric(law.Tt, bind.cell(st, j));
        G[m] += Tt_cells[m][j] * ds;
        if (j > 0 && j < N - 1) Gint[m] += Tt_cells[m][j] * ds;
      }
      if (!ts_zero) {
        flux_l[m] = eval_numeric(law.Ts, bind.node(st, 0));
        flux_r[m] = eval_numeric(law.Ts, bind.node(st, N));
      }
    }

    // flux-corrected drift: d/dt int T^t ds = T^s(left) - T^s(right)
    double flux_int = 0;
    if (exact_mass_flux) {
      const GridState& a = series.snapshots.front();
      const GridState& b = series.snapshots.back();
      // scheme-exact boundary mass flux: int r u dt = delta(r^2)/2
      // int (r u) dt = delta(r^2)/2 holds exactly for the scheme
      flux_int = 0.5 * (b.r[N] * b.r[N] - a.r[N] * a.r[N]) -
                 0.5 * (b.r[0] * b.r[0] - a.r[0] * a.r[0]);
    } else if (!ts_zero) {
      for (size_t m = 0; m + 1 < M; ++m) {
        double dt = series.snapshots[m + 1].t - series.snapshots[m].t;
        flux_int += dt * 0.5 *
                    ((flux_l[m] - flux_r[m]) + (flux_l[m + 1] - flux_r[m + 1]));
      }
    }
    pl.initial_integral = G.front();
    pl.global_drift_abs = std::abs(G.back() - G.front() - flux_int);
    double scale = std::max(std::abs(G.front()), 1e-30);
    pl.global_drift_rel = pl.global_drift_abs / scale;
    double iscale = std::max(std::abs(Gint.front()), 1e-30);
    pl.interior_drift_rel =
        std::abs(Gint.back() - Gint.front() - flux_int) / iscale;

    // max pointwise residual over interior cells and snapshot pairs
    for (size_t m = 0; m + 1 < M; ++m) {
      const GridState& a = series.snapshots[m];
      const GridState& b = series.snapshots[m + 1];
      double dt = b.t - a.t;
      if (dt <= 0) continue;
      for (int j = 1; j < N - 1; ++j) {
        double ddt = (Tt_cells[m + 1][j] - Tt_cells[m][j]) / dt;
        double dds = 0;
        if (!ts_zero) {
          // time-centered flux difference across the cell
          double fa = eval_numeric(law.Ts, bind.node(a, j)),
                 fa1 = eval_numeric(law.Ts, bind.node(a, j + 1));
          double fb = eval_numeric(law.Ts, bind.node(b, j)),
                 fb1 = eval_numeric(law.Ts, bind.node(b, j + 1));
          dds = 0.5 * ((fa1 - fa) + (fb1 - fb)) / ds;
        }
        pl.max_pointwise = std::max(pl.max_pointwise, std::abs(ddt + dds));
      }
    }

    if (ts_zero) {
      pl.has_cellwise = true;
      for (int j = 0; j < N; ++j) {
        double ref = std::max(std::abs(Tt_cells.front()[j]), 1e-30);
        for (size_t m = 1; m < M; ++m)
          pl.max_cellwise_rel =
              std::max(pl.max_cellwise_rel,
                       std::abs(Tt_cells[m][j] - Tt_cells.front()[j]) / ref);
      }
    }
    rep.laws.push_back(std::move(pl));
  }
  return rep;
}

std::vector<std::pair<double, double>> density_integral_series(
    const ConservationLaw& law, const TimeSeries& series) {
  const RunConfig& cfg = series.config;
  Binder bind{cfg};
  double ds = cfg.ds();
  std::vector<std::pair<double, double>> out;
  for (const GridState& st : series.snapshots) {
    double G = 0;
    for (int j = 0; j < cfg.N; ++j)
      G += eval_numeric(law.Tt, bind.cell(st, j)) * ds;
    out.push_back({st.t, G});
  }
  return out;
}

}  // namespace cylmhd
