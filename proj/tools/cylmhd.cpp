// Command-line front end: batch symmetry/conservation verification, the
// Lagrangian solver, and the discrete conservation audit.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cylmhd/catalog.hpp"
#include "cylmhd/config.hpp"
#include "cylmhd/drift.hpp"

using namespace cylmhd;
using nlohmann::json;

namespace {

uint64_t resolve_seed(uint64_t cli_seed) {
  if (const char* env = std::getenv("CYLMHD_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed CYLMHD_SEED\n";
    }
  }
  return cli_seed;
}

int cmd_verify(const std::string& selector, int jobs, uint64_t seed,
               double tolerance, const std::string& out_path,
               const std::string& corrupt_id) {
  std::vector<const CheckDef*> checks;
  try {
    checks = select_checks(selector);
  } catch (const NoMatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  CheckOptions opts;
  opts.seed = seed;
  opts.tolerance = tolerance;
  opts.corrupt_id = corrupt_id;

  std::vector<CheckResult> results(checks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      try {
        results[i] = checks[i]->fn(opts);
      } catch (const std::exception& e) {
        results[i].id = checks[i]->id;
        results[i].pass = false;
        results[i].note = std::string("exception: ") + e.what();
      }
    }
  };
  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ofstream file;
  if (!out_path.empty()) file.open(out_path);
  std::ostream& out = out_path.empty() ? std::cout : file;
  int failed = 0;
  for (const CheckResult& r : results) {
    json line;
    line["id"] = r.id;
    line["status"] = r.pass ? "pass" : "fail";
    line["method"] = r.method == ZeroMethod::Symbolic ? "symbolic" : "numeric";
    line["residual"] = r.residual;
    if (!r.note.empty()) line["note"] = r.note;
    out << line.dump() << "\n";
    if (!r.pass) ++failed;
  }
  std::cerr << checks.size() - failed << "/" << checks.size()
            << " checks passed\n";
  if (failed) {
    std::cerr << "failing:";
    for (const CheckResult& r : results)
      if (!r.pass) std::cerr << " " << r.id;
    std::cerr << "\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_simulate(const std::string& config_path,
                 const std::string& out_prefix) {
  RunConfig cfg = run_config_from(load_config_file(config_path));
  auto t0 = std::chrono::steady_clock::now();
  TimeSeries ts = run(cfg);
  auto wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  {
    std::ofstream csv(out_prefix + ".csv");
    write_csv(ts, csv);
  }
  {
    std::ofstream jl(out_prefix + ".jsonl");
    write_jsonl(ts, jl);
  }
  std::cerr << "steps: " << ts.steps << "  min dt: " << ts.min_dt
            << "  final t: " << ts.snapshots.back().t
            << "  wall: " << wall.count() << " s\n"
            << "wrote " << out_prefix << ".csv and " << out_prefix
            << ".jsonl\n";
  return 0;
}

int cmd_audit(const std::string& config_path, const std::string& snapshots,
              const std::string& out_path, const std::string& series_path,
              double tolerance) {
  RunConfig cfg = run_config_from(load_config_file(config_path));
  std::ifstream in(snapshots);
  if (!in) {
    std::cerr << "error: cannot open snapshots " << snapshots << "\n";
    return 1;
  }
  TimeSeries ts = read_jsonl(in);
  if (ts.snapshots.empty()) {
    std::cerr << "error: no snapshots in " << snapshots << "\n";
    return 1;
  }
  if (ts.config.N != cfg.N || ts.config.gamma != cfg.gamma) {
    std::cerr << "error: snapshot header disagrees with the config (N or "
                 "gamma)\n";
    return 1;
  }
  ts.config.regime = cfg.regime;
  ts.config.sigma_kind = cfg.sigma_kind;
  ts.config.sigma_C = cfg.sigma_C;

  ConductivityModel model;
  model.kind = cfg.sigma_kind;
  auto laws = claw_catalog(cfg.regime, model);
  if (cfg.gamma == 2.0 && cfg.regime.cond == Conductivity::Infinite &&
      cfg.regime.aclass == AClass::Zero) {
    Regime g2 = cfg.regime;
    g2.gamma2 = true;
    for (auto& law : claw_catalog(g2, model)) laws.push_back(law);
  }
  DriftReport rep = discrete_audit(laws, ts);

  json doc;
  doc["t0"] = rep.t0;
  doc["t1"] = rep.t1;
  doc["steps"] = rep.steps;
  json jl = json::array();
  bool all_ok = true;
  for (auto& pl : rep.laws) {
    json e;
    e["law"] = pl.id;
    e["regime"] = cfg.regime.str();
    if (!pl.applicable) {
      e["skipped"] = pl.skip_reason;
    } else {
      e["maxPointwise"] = pl.max_pointwise;
      e["globalDrift"] = pl.global_drift_rel;
      e["globalDriftAbs"] = pl.global_drift_abs;
      e["interiorOnly"] = {{"globalDrift", pl.interior_drift_rel}};
      if (pl.has_cellwise) e["cellwiseInvariantChange"] = pl.max_cellwise_rel;
      double measure = std::abs(pl.initial_integral) > 1e-12
                           ? pl.global_drift_rel
                           : pl.global_drift_abs;
      if (pl.has_cellwise) measure = std::max(measure, pl.max_cellwise_rel);
      e["withinTolerance"] = measure <= tolerance;
      all_ok = all_ok && measure <= tolerance;
    }
    jl.push_back(e);
  }
  doc["laws"] = jl;

  std::ofstream file;
  if (!out_path.empty()) file.open(out_path);
  std::ostream& out = out_path.empty() ? std::cout : file;
  out << doc.dump(2) << "\n";

  if (!series_path.empty()) {
    std::ofstream sf(series_path);
    sf << "law,t,integral\n";
    for (auto& law : laws) {
      DriftReport probe = discrete_audit({law}, ts);
      if (!probe.laws[0].applicable) continue;
      for (auto& [t, G] : density_integral_series(law, ts)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", t, G);
        sf << law.id << "," << buf << "\n";
      }
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_list(const std::string& pattern) {
  int n = 0;
  for (const CheckDef& d : check_catalog()) {
    if (glob_match(pattern, d.id)) {
      std::cout << d.id << "\n";
      ++n;
    }
  }
  return n > 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cylmhd: symmetry and conservation-law verification for cylindrical "
      "MHD in mass Lagrangian coordinates"};
  app.require_subcommand(1);

  uint64_t seed = kDefaultSeed;
  double tolerance = 1e-9;
  int jobs = 1;
  std::string out_path, config_path, selector = "*", corrupt_id;

  auto* verify = app.add_subcommand("verify", "run symbolic checks by id");
  verify->add_option("selector", selector,
                     "glob over check ids, e.g. 'kern01.*'");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--seed", seed, "seed for randomized zero tests");
  verify->add_option("--tolerance", tolerance, "numeric pass tolerance");
  verify->add_option("--out", out_path, "write JSON lines here");
  verify
      ->add_option("--corrupt", corrupt_id,
                   "perturb the named entry (failure-path testing)")
      ->group("");

  std::string out_prefix = "run";
  auto* simulate = app.add_subcommand("simulate", "run the solver");
  simulate->add_option("--config", config_path, "run configuration")
      ->required();
  simulate->add_option("--out", out_prefix, "output file prefix");

  std::string snapshots, series_path;
  double audit_tol = 1e-2;
  auto* audit = app.add_subcommand("audit", "discrete conservation audit");
  audit->add_option("--config", config_path, "run configuration")->required();
  audit->add_option("--snapshots", snapshots, "solver .jsonl output")
      ->required();
  audit->add_option("--out", out_path, "write the report here");
  audit->add_option("--series", series_path,
                    "write per-law density integrals (CSV)");
  audit->add_option("--tolerance", audit_tol, "drift tolerance");

  std::string list_pattern = "*";
  auto* list = app.add_subcommand("list", "list catalog check ids");
  list->add_option("pattern", list_pattern, "glob over ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return cmd_verify(selector, jobs, resolve_seed(seed), tolerance,
                        out_path, corrupt_id);
    if (simulate->parsed()) return cmd_simulate(config_path, out_prefix);
    if (audit->parsed())
      return cmd_audit(config_path, snapshots, out_path, series_path,
                       audit_tol);
    if (list->parsed()) return cmd_list(list_pattern);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
