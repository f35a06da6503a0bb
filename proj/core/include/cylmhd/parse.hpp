#pragma once

#include <string>

#include "cylmhd/expr.hpp"

namespace cylmhd {

struct ParseError : ExprError {
  using ExprError::ExprError;
};

// Textual expression syntax: infix arithmetic with `^` for powers, jet
// variables `u_t`, `u_ts`, `rho_ss`, fields `u`..`chi`, independent
// variables `t` and `s`, model constants `gamma`, `A`, `alpha`, ...,
// opaque calls `sigma(rho,p)` and their partials `D(sigma,[1,0])(rho,p)`.
Expr parse_expr(const std::string& text);

// Inverse of parse_expr on canonical forms: parse(print(e)) == e.
std::string print_expr(const Expr& e);

std::string print_scalar(const Scalar& s);

}  // namespace cylmhd
