#pragma once

#include <functional>

#include "cylmhd/claw.hpp"

namespace cylmhd {

struct NoMatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckOptions {
  uint64_t seed = kDefaultSeed;
  double tolerance = 1e-9;  // numeric pass tolerance
  // Perturb the named entry before running (testing hook for the failure
  // path: a perturbed check must come back red).
  std::string corrupt_id;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  ZeroMethod method = ZeroMethod::Symbolic;
  double residual = 0;
  std::string note;
};

struct CheckDef {
  std::string id;
  std::function<CheckResult(const CheckOptions&)> fn;
};

// Every symbolic check in the toolkit, addressable by string id:
// kern01.*, kern02.*, table1.*, table2.*, classify.*, inf_A.*, inf_A0.*,
// var_*.*, table3.*, table4.*, equiv.*, noether.*, claw.*.
const std::vector<CheckDef>& check_catalog();

// Glob-style id selection ('*' matches any run of characters).
std::vector<const CheckDef*> select_checks(const std::string& pattern);

bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace cylmhd
