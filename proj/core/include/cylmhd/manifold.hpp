#pragma once

#include "cylmhd/eval.hpp"
#include "cylmhd/expr_ops.hpp"

namespace cylmhd {

// A PDE system in solved form.  `solved` maps every leading derivative (and
// algebraically eliminated field) to its right-hand side; `nonlocal` holds
// gauge-dependent relations that only specific checks may assume.
struct PdeSystem {
  std::string name;
  std::vector<Expr> residuals;
  JetRules solved;
  JetRules nonlocal;
  // derivative closures for opaque profile factors appearing in the system
  std::vector<std::pair<std::string, Expr>> fn_closures;

  PdeSystem with_extra_keys(JetRules extra) const {
    PdeSystem s = *this;
    for (auto& r : extra) s.solved.push_back(std::move(r));
    return s;
  }
  Expr close(Expr e) const;
};

struct ReductionDiverged : ExprError {
  using ExprError::ExprError;
};

struct InconclusiveZeroTest : std::runtime_error {
  double residual;
  explicit InconclusiveZeroTest(double r)
      : std::runtime_error("zero test inconclusive, residual " +
                           std::to_string(r)),
        residual(r) {}
};

struct ZeroTestOptions {
  uint64_t seed = kDefaultSeed;
  int samples = 200;
  double lo = 0.2, hi = 2.0;
  double pass_tol = 1e-9;
  double fail_tol = 1e-6;
  double den_tol = 1e-6;
  bool use_nonlocal = false;
  int max_passes = 200;
  bool allow_numeric = true;
  std::map<Sym, Rat> bind_syms;  // constants pinned before reduction
};

enum class ZeroMethod { Symbolic, Numeric };

struct ZeroResult {
  bool zero = false;
  ZeroMethod method = ZeroMethod::Symbolic;
  double max_residual = 0;  // numeric path only
};

// Substitutes the solved form (and its differentiated consequences) until no
// leading derivative remains.
Expr reduce_on_manifold(const Expr& e, const PdeSystem& sys,
                        const ZeroTestOptions& opt = {});

ZeroResult is_zero_on_manifold_detail(const Expr& e, const PdeSystem& sys,
                                      const ZeroTestOptions& opt = {});

bool is_zero_on_manifold(const Expr& e, const PdeSystem& sys,
                         const ZeroTestOptions& opt = {});

// Max cancellation-aware relative residual of a reduced expression over
// `samples` random jet points (used directly by checks that pin their own
// tolerance).
double max_numeric_residual(const Expr& reduced, uint64_t seed, int samples,
                            double lo = 0.2, double hi = 2.0,
                            double den_tol = 1e-6);

}  // namespace cylmhd
