#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cylmhd/rational.hpp"

namespace cylmhd {

// Symbolic constants of the model equations.  They appear in term
// coefficients and in exponents (e.g. rho^(1-gamma)), never as dynamical
// fields.
enum class Sym : uint8_t {
  Gamma, A, C, Alpha, Beta, Q, Q1, Q2, Q3, Q4, S0, F0, G0, R0
};
inline constexpr int kNumSyms = 14;

const char* sym_name(Sym s);
std::optional<Sym> sym_from_name(const std::string& name);

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Monomial in the symbolic constants, packed as one nibble of degree per
// constant.  Degrees above 15 are rejected; nothing in the equations gets
// anywhere close.
struct SymMono {
  uint64_t bits = 0;

  int deg(Sym s) const { return int((bits >> (4 * int(s))) & 0xF); }
  void set_deg(Sym s, int d);
  int total_degree() const;
  bool is_unit() const { return bits == 0; }
  SymMono operator*(const SymMono& o) const;
  // Division; nullopt if any exponent would go negative.
  std::optional<SymMono> divide(const SymMono& o) const;
  auto operator<=>(const SymMono&) const = default;
};

// Expanded multivariate polynomial over Q in the symbolic constants.
// Terms are kept sorted by monomial, descending; no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c);
  explicit Poly(Sym s);
  static Poly term(SymMono m, Rat c);

  const std::vector<std::pair<SymMono, Rat>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value; requires is_constant().
  Rat constant() const;
  int total_degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Exact division: returns q with *this == q * d, or nullopt.
  std::optional<Poly> divide_exact(const Poly& d) const;

  // Splits into (content, primitive part): content is rational, primitive
  // part has coprime integer coefficients and positive leading coefficient.
  std::pair<Rat, Poly> primitive() const;

  Poly derivative(Sym s) const;
  Poly substituted(Sym s, const Rat& value) const;
  bool depends_on(Sym s) const;
  double eval(const std::array<double, kNumSyms>& vals) const;

  std::size_t hash() const;
  std::string str() const;

  static int compare(const Poly& a, const Poly& b);

 private:
  std::vector<std::pair<SymMono, Rat>> terms_;
  void prune();
  friend class Scalar;
};

// Element of the field Q(gamma, A, C, alpha, ...): an expanded numerator
// polynomial over a product of primitive denominator factors.  All the
// denominators the equations produce are affine (gamma-1, 2*alpha-beta-1,
// ...), so greedy cancellation by exact division keeps the representation
// canonical in practice.
class Scalar {
 public:
  Scalar() : num_(Rat(0)) {}
  Scalar(int v) : num_(Rat(v)) {}
  Scalar(const Rat& v) : num_(v) {}
  explicit Scalar(Sym s) : num_(Poly(s)) {}
  static Scalar from_poly(Poly p);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational().
  Rat rational() const;
  bool is_integer() const;
  long long small_int() const;  // requires is_integer() and small magnitude

  const Poly& num() const { return num_; }
  const std::vector<std::pair<Poly, int>>& den() const { return den_; }
  Poly den_poly() const;  // expanded product of denominator factors

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long long n) const;

  bool operator==(const Scalar& o) const;
  // Total order used for canonical sorting of exponents.
  static int compare(const Scalar& a, const Scalar& b);

  Scalar derivative(Sym s) const;
  Scalar substituted(Sym s, const Rat& value) const;  // throws on 0 denominator
  bool depends_on(Sym s) const;
  bool depends_on_syms() const { return !is_rational(); }
  double eval(const std::array<double, kNumSyms>& vals) const;
  // Smallest |denominator factor| at the given values (1 if none).
  double min_den_magnitude(const std::array<double, kNumSyms>& vals) const;

  std::size_t hash() const;
  std::string str() const;

 private:
  Poly num_;
  std::vector<std::pair<Poly, int>> den_;  // primitive factors, multiplicity
  void push_den(const Poly& f, int mult);
  void cancel();
};

inline Scalar operator+(int a, const Scalar& b) { return Scalar(a) + b; }
inline Scalar operator*(int a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace cylmhd
