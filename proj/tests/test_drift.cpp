#include "doctest.h"

#include <cmath>

#include "cylmhd/drift.hpp"
#include "cylmhd/parse.hpp"

using namespace cylmhd;

namespace {

RunConfig pulse(int N, double t_end, bool resistive = false) {
  RunConfig cfg;
  cfg.regime = resistive ? Regime::finite_A0() : Regime::infinite_A0();
  cfg.sigma_kind = resistive ? SigmaKind::CRho : SigmaKind::Infinite;
  cfg.sigma_C = 1.0;
  cfg.gamma = 1.4;
  cfg.N = N;
  cfg.cfl = 0.4;
  cfg.t_end = t_end;
  cfg.init.rho = parse_expr("1 + 1/10*exp(-(s-1/2)^2/(1/100))");
  cfg.init.S = Expr::one();
  cfg.init.ftheta = parse_expr("1/10");
  cfg.init.fz = parse_expr("1/10");
  return cfg;
}

std::vector<ConservationLaw> ideal_laws() {
  ConductivityModel inf;
  inf.kind = SigmaKind::Infinite;
  return claw_catalog(Regime::infinite_A0(), inf);
}

}  // namespace

TEST_CASE("static run reports zero drift for every applicable law") {
  RunConfig cfg;
  cfg.regime = Regime::infinite_A0();
  cfg.N = 16;
  cfg.t_end = 0.2;
  cfg.init.rho = Expr::one();
  cfg.init.p = Expr::one();
  TimeSeries ts = run(cfg);
  DriftReport rep = discrete_audit(ideal_laws(), ts);
  int applicable = 0;
  for (auto& pl : rep.laws) {
    if (!pl.applicable) continue;
    ++applicable;
    CAPTURE(pl.id);
    if (std::abs(pl.initial_integral) > 1e-12)
      CHECK(pl.global_drift_rel <= 1e-12);
    else
      CHECK(pl.global_drift_abs <= 1e-12);
    CHECK(pl.max_pointwise <= 1e-11);
    if (pl.has_cellwise) CHECK(pl.max_cellwise_rel <= 1e-12);
  }
  CHECK(applicable >= 6);
}

TEST_CASE("profile-guarded laws are skipped with a reason") {
  RunConfig cfg = pulse(32, 0.02);
  TimeSeries ts = run(cfg);
  DriftReport rep = discrete_audit(ideal_laws(), ts);
  bool found_skip = false;
  for (auto& pl : rep.laws)
    if (!pl.applicable) {
      found_skip = true;
      CHECK(!pl.skip_reason.empty());
    }
  CHECK(found_skip);
}

TEST_CASE("pulse run meets the conservation targets") {
  RunConfig cfg = pulse(100, 1e9);
  cfg.max_steps = 250;
  TimeSeries ts = run(cfg);
  REQUIRE(ts.steps == 250);
  DriftReport rep = discrete_audit(ideal_laws(), ts);
  auto get = [&](const std::string& sub) {
    for (auto& pl : rep.laws)
      if (pl.applicable && pl.id.find(sub) != std::string::npos) return pl;
    REQUIRE(false);
    return rep.laws[0];
  };
  CHECK(get(".mass").global_drift_rel <= 1e-12);
  CHECK(get(".energy").global_drift_rel <= 1e-3);
  CHECK(get(".rotation").max_cellwise_rel <= 1e-10);
  CHECK(get(".flux_theta").max_cellwise_rel <= 1e-10);
  CHECK(get(".flux_z").max_cellwise_rel <= 1e-10);
  CHECK(get(".entropy").max_cellwise_rel <= 1e-10);
}

TEST_CASE("drift decreases under refinement") {
  RunConfig coarse = pulse(50, 0.2);
  RunConfig fine = pulse(100, 0.2);
  DriftReport rc = discrete_audit(ideal_laws(), run(coarse));
  DriftReport rf = discrete_audit(ideal_laws(), run(fine));
  const auto* ec = rc.find("claw.inf_A0.energy");
  const auto* ef = rf.find("claw.inf_A0.energy");
  REQUIRE((ec && ef));
  // energy drift is already near round-off; accept either a >=3x drop or
  // both being negligible
  bool tiny = ec->global_drift_rel < 1e-9 && ef->global_drift_rel < 1e-9;
  CHECK((tiny || ec->global_drift_rel / ef->global_drift_rel >= 3.0));
}

TEST_CASE("resistive run: special law 2 drifts little, entropy changes") {
  RunConfig cfg = pulse(100, 1e9, /*resistive=*/true);
  cfg.init.fz = parse_expr("1/2");
  cfg.max_steps = 200;
  TimeSeries ts = run(cfg);
  ConductivityModel crho;
  crho.kind = SigmaKind::CRho;
  auto laws = claw_catalog(Regime::finite_A0(), crho);
  DriftReport rep = discrete_audit(laws, ts);
  const auto* s2 = rep.find("claw.finite_A0.special2");
  REQUIRE(s2);
  CHECK(s2->applicable);
  CHECK(s2->global_drift_rel <= 5e-3);
  // entropy must be produced by the Joule term
  const GridState& a = ts.snapshots.front();
  const GridState& b = ts.snapshots.back();
  double rel = 0;
  for (int j = 0; j < cfg.N; ++j)
    rel = std::max(rel, std::abs(b.entropy[j] - a.entropy[j]) /
                            std::abs(a.entropy[j]));
  CHECK(rel >= 1e-6);
}

TEST_CASE("density integral series has one entry per snapshot") {
  RunConfig cfg = pulse(32, 0.05);
  TimeSeries ts = run(cfg);
  auto series = density_integral_series(ideal_laws().front(), ts);
  CHECK(series.size() == ts.snapshots.size());
}
