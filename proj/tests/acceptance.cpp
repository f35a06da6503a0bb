// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Run directly or through ctest.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cylmhd/catalog.hpp"
#include "cylmhd/drift.hpp"
#include "cylmhd/parse.hpp"
#include "cylmhd/random_expr.hpp"

using namespace cylmhd;

namespace {

struct Criterion {
  int id;
  std::string what;
  bool pass = true;
  std::vector<std::string> notes;
  double seconds = 0;

  void expect(bool ok, const std::string& note) {
    if (!ok) {
      pass = false;
      notes.push_back(note);
    }
  }
};

std::vector<Criterion> results;

template <typename Fn>
void criterion(int id, const std::string& what, Fn&& fn) {
  Criterion c{id, what};
  auto t0 = std::chrono::steady_clock::now();
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  c.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  results.push_back(std::move(c));
}

bool run_check(const std::string& id, Criterion& c,
               const CheckOptions& opts = {}) {
  for (const CheckDef& d : check_catalog()) {
    if (d.id != id) continue;
    CheckResult r = d.fn(opts);
    c.expect(r.pass, id + (r.note.empty() ? "" : " (" + r.note + ")"));
    return r.pass;
  }
  c.expect(false, "missing check id " + id);
  return false;
}

RunConfig acceptance_pulse(int N) {
  RunConfig cfg;
  cfg.regime = Regime::infinite_A0();
  cfg.gamma = 1.4;
  cfg.N = N;
  cfg.cfl = 0.4;
  cfg.s_min = 0.0;
  cfg.s_max = 1.0;
  cfg.r_inner = 1.0;
  cfg.bc_left = BoundaryKind::Free;
  cfg.bc_right = BoundaryKind::Free;
  cfg.init.rho = parse_expr("1 + 1/10*exp(-(s-1/2)^2/(1/100))");
  cfg.init.S = Expr::one();  // adiabatic: p = rho^gamma
  cfg.init.ftheta = parse_expr("1/10");
  cfg.init.fz = parse_expr("1/10");
  cfg.t_end = 1e9;  // bounded by max_steps
  return cfg;
}

// L1 self-convergence error of rho between N and 2N cells at equal time
double rho_l1_gap(const TimeSeries& coarse, const TimeSeries& fine) {
  const GridState& a = coarse.snapshots.back();
  const GridState& b = fine.snapshots.back();
  int N = a.cells();
  double ds = (coarse.config.s_max - coarse.config.s_min) / N;
  double e = 0;
  for (int j = 0; j < N; ++j) {
    // mass-consistent restriction: harmonic mean of the two fine cells
    double vf = 0.5 * (1.0 / b.rho[2 * j] + 1.0 / b.rho[2 * j + 1]);
    e += std::abs(a.rho[j] - 1.0 / vf) * ds;
  }
  return e;
}

}  // namespace

int main() {
  criterion(1,
            "seven-law suite, finite sigma, A != 0 (opaque sigma, symbolic "
            "gamma and A)",
            [](Criterion& c) {
              ModelConfig opaque;
              PdeSystem sys = build_system(opaque, Regime::finite_A());
              auto laws = claw_catalog(Regime::finite_A(), opaque.sigma);
              c.expect(laws.size() == 7, "expected seven general laws");
              for (auto& law : laws)
                c.expect(symbolic_audit(law, sys), law.id);
              c.expect(c.seconds <= 60, "wall-time budget");
            });

  criterion(
      2, "special-conductivity laws pass for sigma = C rho, fail for opaque",
      [](Criterion& c) {
        ConductivityModel crho;
        crho.kind = SigmaKind::CRho;
        ModelConfig cfg_crho;
        cfg_crho.sigma = crho;
        ModelConfig opaque;
        int found = 0;
        for (auto regime : {Regime::finite_A(), Regime::finite_A0()}) {
          PdeSystem guarded = build_system(cfg_crho, regime);
          PdeSystem generic = build_system(opaque, regime);
          for (auto& law : claw_catalog(regime, crho)) {
            if (law.id.find("special") == std::string::npos) continue;
            ++found;
            c.expect(symbolic_audit(law, guarded), law.id + " under C rho");
            c.expect(!symbolic_audit(law, generic),
                     law.id + " must fail for opaque sigma");
          }
        }
        c.expect(found == 3, "expected the three special laws");
      });

  criterion(
      3,
      "symmetry kernels and every Table 1-4 extension (pass + recorded "
      "perturbation fails)",
      [](Criterion& c) {
        for (auto prefix :
             {"kern01.", "kern02.", "var_A.kern.", "inf_A.", "inf_A0."}) {
          for (const CheckDef& d : check_catalog())
            if (d.id.rfind(prefix, 0) == 0) run_check(d.id, c);
        }
        run_check("inf_A0.g2.X7", c);
        // finite-sigma tables: stated model passes, perturbed model fails
        auto tables = table1_cases();
        for (auto& t2 : table2_cases()) tables.push_back(t2);
        for (auto& tc : tables) {
          ModelConfig good;
          good.sigma = tc.model;
          c.expect(check_symmetry(tc.gen, build_system(good, tc.regime)).passed,
                   tc.id);
          ModelConfig bad;
          bad.sigma = tc.perturbed;
          c.expect(
              !check_symmetry(tc.gen, build_system(bad, tc.regime)).passed,
              tc.id + " perturbation must fail");
        }
        // variational tables: stated profiles pass, arbitrary profiles (or
        // a reinstated F for the gamma=2 F==0 cases) fail
        for (auto& vc : variational_symmetry_cases()) {
          ZeroTestOptions z;
          z.bind_syms = vc.binds;
          bool ok = check_symmetry(vc.gen, vc.build.system, 2, z).passed;
          c.expect(ok == vc.expect_pass, vc.id);
          if (!vc.expect_pass) continue;
          bool kernel_case = vc.id.find("kern") != std::string::npos ||
                             vc.id.find("arb.X1") != std::string::npos;
          if (kernel_case) continue;  // admitted for every profile
          VariationalBuild pert;
          if (vc.build.lag.potentials.size() == 3) {
            pert = build_variational(AClass::NonZero, false);
          } else if (vc.build.system.name.find("g2") != std::string::npos) {
            pert = build_variational_A0_gamma2(Profile::arbitrary("Stilde"),
                                               Profile::constant(Sym::F0),
                                               Profile::arbitrary("R"));
          } else {
            pert = build_variational(AClass::Zero, false);
          }
          bool still = check_symmetry(vc.gen, pert.system, 2, z).passed;
          c.expect(!still, vc.id + " perturbation must fail");
        }
        c.expect(c.seconds <= 120, "wall-time budget");
      });

  criterion(4,
            "classifying equations canonicalize to exact zero (no numeric "
            "fallback)",
            [](Criterion& c) {
              for (auto& tc : table1_cases()) {
                Expr r =
                    classifying_residual_sigma_withA(tc.a3, tc.a4, tc.model);
                c.expect(r.is_zero(), "classify." + tc.id);
              }
              for (auto& tc : table2_cases()) {
                Expr r = classifying_residual_sigma_noA(tc.a3, tc.a4, tc.a5,
                                                        tc.model);
                c.expect(r.is_zero(), "classify." + tc.id);
              }
            });

  criterion(5, "Noether suite: EL pairing, residuals, physical-variable laws",
            [](Criterion& c) {
              // Euler-Lagrange operator reproduces each catalogued PDE
              {
                VariationalBuild vb = build_variational(AClass::NonZero, false);
                auto els = euler_lagrange(vb.lag);
                Expr phi = Expr::jet(Field::Phi);
                std::vector<Expr> mult = {Expr::one(), phi, Expr::one()};
                for (size_t i = 0; i < els.size(); ++i)
                  c.expect(
                      (els[i] - mult[i] * vb.system.residuals[i]).is_zero(),
                      "three-potential EL pairing");
              }
              for (bool g2 : {false, true}) {
                VariationalBuild vb = build_variational(AClass::Zero, g2);
                auto els = euler_lagrange(vb.lag);
                c.expect((els[0] - vb.system.residuals[0]).is_zero(),
                         g2 ? "gamma=2 EL pairing" : "single-potential EL pairing");
              }
              for (const NoetherCase& nc : noether_cases())
                run_check(nc.id, c);
              c.expect(c.seconds <= 120, "wall-time budget");
            });

  criterion(
      6, "Eulerian conversion identity and converted laws (<= 1e-10)",
      [](Criterion& c) {
        ModelConfig opaque;
        PdeSystem lsys = build_system(opaque, Regime::finite_A());
        Expr res = eulerian_conversion_identity_residual();
        c.expect(reduce_on_manifold(res, lsys).is_zero(),
                 "operator identity canonical zero");
        PdeSystem esys = build_euler_system(ModelConfig::infinite(),
                                            Regime::infinite_A());
        for (const char* id : {"claw.inf_A.mass", "claw.inf_A.rotation"}) {
          auto law = claw_by_id(id);
          ConservationLaw elaw = to_eulerian(*law);
          Expr div = total_derivative(elaw.Tt, Dir::T) +
                     total_derivative(elaw.Ts, Dir::X);
          Expr reduced = reduce_on_manifold(div, esys);
          double worst = reduced.is_zero()
                             ? 0.0
                             : max_numeric_residual(reduced, kDefaultSeed, 200);
          c.expect(worst <= 1e-10,
                   std::string(id) + " residual at 200 jet points");
        }
      });

  criterion(
      7,
      "solver conservation on the smooth adiabatic pulse (N=200, CFL=0.4, "
      "1000 steps) + self-convergence",
      [](Criterion& c) {
        RunConfig cfg = acceptance_pulse(200);
        cfg.max_steps = 1000;
        TimeSeries ts = run(cfg);
        c.expect(ts.steps == 1000, "expected 1000 steps");
        ConductivityModel inf_model;
        inf_model.kind = SigmaKind::Infinite;
        auto laws = claw_catalog(Regime::infinite_A0(), inf_model);
        DriftReport rep = discrete_audit(laws, ts);
        auto need = [&](const std::string& sub, double tol, bool cellwise) {
          for (auto& pl : rep.laws) {
            if (!pl.applicable || pl.id.find(sub) == std::string::npos)
              continue;
            double measured = cellwise ? pl.max_cellwise_rel
                                       : pl.global_drift_rel;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s drift %.3e (tol %.0e)",
                          pl.id.c_str(), measured, tol);
            c.expect(measured <= tol, buf);
            return;
          }
          c.expect(false, "law not audited: " + sub);
        };
        need(".mass", 1e-12, false);
        need(".energy", 1e-3, false);
        need(".rotation", 1e-3, true);
        need(".flux_theta", 1e-3, true);
        need(".flux_z", 1e-3, true);
        need(".entropy", 1e-3, true);

        // self-convergence on rho at the common final time
        double t_end = ts.snapshots.back().t;
        auto run_to = [&](int N) {
          RunConfig r = acceptance_pulse(N);
          r.t_end = t_end;
          r.output_every = 1 << 20;  // end snapshot only
          return run(r);
        };
        TimeSeries n100 = run_to(100), n400 = run_to(400);
        RunConfig r200 = acceptance_pulse(200);
        r200.t_end = t_end;
        r200.output_every = 1 << 20;
        TimeSeries n200 = run_to(200);
        double e1 = rho_l1_gap(n100, n200);
        double e2 = rho_l1_gap(n200, n400);
        double order = std::log2(e1 / e2);
        char buf[120];
        std::snprintf(buf, sizeof buf,
                      "self-convergence order %.2f (need >= 1.8)", order);
        c.expect(order >= 1.8, buf);
        c.expect(c.seconds <= 60, "wall-time budget");
      });

  criterion(
      8,
      "finite-sigma pulse: special law drift <= 5e-3 over 500 steps, entropy "
      "produced",
      [](Criterion& c) {
        RunConfig cfg = acceptance_pulse(200);
        cfg.regime = Regime::finite_A0();
        cfg.sigma_kind = SigmaKind::CRho;
        cfg.sigma_C = 1.0;
        cfg.init.fz = parse_expr("1/2");
        cfg.max_steps = 500;
        TimeSeries ts = run(cfg);
        c.expect(ts.steps == 500, "expected 500 steps");
        ConductivityModel crho;
        crho.kind = SigmaKind::CRho;
        DriftReport rep =
            discrete_audit(claw_catalog(Regime::finite_A0(), crho), ts);
        const auto* s2 = rep.find("claw.finite_A0.special2");
        c.expect(s2 && s2->applicable, "special law audited");
        if (s2 && s2->applicable) {
          char buf[120];
          std::snprintf(buf, sizeof buf, "special2 drift %.3e (tol 5e-3)",
                        s2->global_drift_rel);
          c.expect(s2->global_drift_rel <= 5e-3, buf);
        }
        const GridState& a = ts.snapshots.front();
        const GridState& b = ts.snapshots.back();
        double rel = 0;
        for (int j = 0; j < cfg.N; ++j)
          rel = std::max(rel, std::abs(b.entropy[j] - a.entropy[j]) /
                                  std::abs(a.entropy[j]));
        char buf[120];
        std::snprintf(buf, sizeof buf,
                      "entropy change %.3e (must be >= 1e-6)", rel);
        c.expect(rel >= 1e-6, buf);
      });

  criterion(9, "10,000 randomized expression-engine property cases",
            [](Criterion& c) {
              RandomExprGen gen(kDefaultSeed);
              PropertyCounters pc = run_expr_properties(gen, 10000);
              char buf[160];
              std::snprintf(buf, sizeof buf,
                            "%lld failures over %lld cases (proj %lld, "
                            "commute %lld, fd %lld)",
                            pc.failures, pc.cases, pc.projection, pc.commute,
                            pc.fd);
              c.expect(pc.failures == 0, buf);
              c.expect(pc.cases == 10000, "case count");
              // determinism: the same seed reproduces the same stream
              RandomExprGen g1(kDefaultSeed), g2(kDefaultSeed);
              bool same = true;
              for (int i = 0; i < 50; ++i) {
                Expr a, b;
                try {
                  a = g1.next();
                } catch (const ExprError&) {
                }
                try {
                  b = g2.next();
                } catch (const ExprError&) {
                }
                same = same && a == b;
              }
              c.expect(same, "deterministic under fixed seed");
            });

  int failed = 0;
  for (const Criterion& c : results) {
    std::printf("%s criterion %d: %s [%.1f s]\n", c.pass ? "PASS" : "FAIL",
                c.id, c.what.c_str(), c.seconds);
    for (const std::string& n : c.notes) std::printf("       - %s\n", n.c_str());
    if (!c.pass) ++failed;
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              int(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
