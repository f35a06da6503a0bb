#pragma once

#include <bitset>
#include <functional>
#include <map>

#include "cylmhd/expr.hpp"

namespace cylmhd {

struct EvalError : ExprError {
  using ExprError::ExprError;
};
struct UnboundSymbol : EvalError {
  using EvalError::EvalError;
};
struct DomainError : EvalError {
  using EvalError::EvalError;
};
// Thrown during randomized zero testing when a sample lands too close to a
// denominator zero and must be redrawn.
struct RejectSample : EvalError {
  using EvalError::EvalError;
};

inline constexpr uint64_t kDefaultSeed = 0x8f1bbcdcbfa53e0bULL;

// Deterministic splitmix64 stream (used everywhere randomness is needed so
// runs are reproducible across platforms).
struct SplitMix {
  uint64_t state;
  explicit SplitMix(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

struct EvalContext {
  std::map<JetVar, double> jets;
  bool has_t = false, has_x = false;
  double t = 0, x = 0;
  std::array<double, kNumSyms> syms{};
  std::bitset<kNumSyms> syms_bound;
  // Evaluator for opaque applications; receives the application and its
  // argument values.  Defaults to seeded polynomial stand-ins whose partial
  // derivatives are exact derivatives of the stand-in.
  std::function<double(const FnApp&, const std::vector<double>&)> fn_eval;
  uint64_t standin_seed = kDefaultSeed;
  // When positive, samples within this distance of a denominator zero are
  // rejected (RejectSample) instead of raising DomainError.
  double reject_tol = 0;

  void bind(const JetVar& v, double val) { jets[v] = val; }
  void bind_t(double v) {
    has_t = true;
    t = v;
  }
  void bind_x(double v) {
    has_x = true;
    x = v;
  }
  void bind(Sym s, double v) {
    syms[int(s)] = v;
    syms_bound.set(int(s));
  }
};

// IEEE double evaluation of an expression at a point binding every free
// symbol.
double eval_numeric(const Expr& e, const EvalContext& ctx);

struct TermEvalResult {
  double value = 0;         // full expression value
  double num_sum = 0;       // numerator sum
  double max_abs_term = 0;  // largest |numerator term|
  double den = 1;
};
// Evaluation that also reports per-term magnitudes of the numerator, used
// for cancellation-aware relative residuals.
TermEvalResult eval_parts(const Expr& e, const EvalContext& ctx);

// Value of a polynomial stand-in for an opaque application (degree-3
// polynomial in the arguments with coefficients seeded from the function
// name).  Partials are exact derivatives of the same polynomial.
double standin_value(const std::string& name, const std::vector<int>& orders,
                     const std::vector<double>& args, uint64_t seed);

}  // namespace cylmhd
