#include "cylmhd/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cylmhd {

namespace {
const char* kSymNames[kNumSyms] = {"gamma", "A",  "C",  "alpha", "beta",
                                   "q",     "q1", "q2", "q3",    "q4",
                                   "S0",    "F0", "G0", "R0"};
}

const char* sym_name(Sym s) { return kSymNames[int(s)]; }

std::optional<Sym> sym_from_name(const std::string& name) {
  for (int i = 0; i < kNumSyms; ++i)
    if (name == kSymNames[i]) return Sym(i);
  return std::nullopt;
}

void SymMono::set_deg(Sym s, int d) {
  if (d < 0 || d > 15) throw ScalarError("SymMono: degree out of range");
  bits = (bits & ~(uint64_t(0xF) << (4 * int(s)))) |
         (uint64_t(d) << (4 * int(s)));
}

int SymMono::total_degree() const {
  int t = 0;
  for (int i = 0; i < kNumSyms; ++i) t += deg(Sym(i));
  return t;
}

SymMono SymMono::operator*(const SymMono& o) const {
  SymMono r;
  for (int i = 0; i < kNumSyms; ++i) {
    int d = deg(Sym(i)) + o.deg(Sym(i));
    r.set_deg(Sym(i), d);
  }
  return r;
}

std::optional<SymMono> SymMono::divide(const SymMono& o) const {
  SymMono r;
  for (int i = 0; i < kNumSyms; ++i) {
    int d = deg(Sym(i)) - o.deg(Sym(i));
    if (d < 0) return std::nullopt;
    r.set_deg(Sym(i), d);
  }
  return r;
}

Poly::Poly(Rat c) {
  if (c != 0) terms_.push_back({SymMono{}, std::move(c)});
}

Poly::Poly(Sym s) {
  SymMono m;
  m.set_deg(s, 1);
  terms_.push_back({m, Rat(1)});
}

Poly Poly::term(SymMono m, Rat c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

Rat Poly::constant() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw ScalarError("Poly::constant on non-constant");
  return terms_[0].second;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Poly::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](auto& t) { return t.second == 0; }),
               terms_.end());
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first > b->first)
      r.terms_.push_back(*a++);
    else if (b->first > a->first)
      r.terms_.push_back(*b++);
    else {
      Rat c = a->second + b->second;
      if (c != 0) r.terms_.push_back({a->first, std::move(c)});
      ++a, ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Rat& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [ma, ca] : terms_) {
    Poly partial;
    partial.terms_.reserve(o.terms_.size());
    for (auto& [mb, cb] : o.terms_) partial.terms_.push_back({ma * mb, ca * cb});
    std::sort(partial.terms_.begin(), partial.terms_.end(),
              [](auto& x, auto& y) { return x.first > y.first; });
    r = r + partial;
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw ScalarError("Poly division by zero");
  Poly rem = *this, q;
  const auto& dl = d.terms_.front();
  while (!rem.is_zero()) {
    auto& rl = rem.terms_.front();
    auto m = rl.first.divide(dl.first);
    if (!m) return std::nullopt;
    Rat c = rl.second / dl.second;
    Poly t = Poly::term(*m, c);
    q = q + t;
    rem = rem - t * d;
  }
  return q;
}

std::pair<Rat, Poly> Poly::primitive() const {
  if (is_zero()) return {Rat(0), Poly()};
  // content = gcd of numerators / lcm of denominators, signed by lead.
  Int num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : terms_) {
    num_gcd = gcd(num_gcd, numerator(c) < 0 ? Int(-numerator(c)) : numerator(c));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  Rat content(num_gcd, den_lcm);
  if (terms_.front().second < 0) content = -content;
  Poly prim = scaled(Rat(1) / content);
  return {content, prim};
}

Poly Poly::derivative(Sym s) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    int d = m.deg(s);
    if (d == 0) continue;
    SymMono m2 = m;
    m2.set_deg(s, d - 1);
    r = r + Poly::term(m2, c * d);
  }
  return r;
}

Poly Poly::substituted(Sym s, const Rat& value) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    int d = m.deg(s);
    SymMono m2 = m;
    m2.set_deg(s, 0);
    Rat scale = c;
    for (int i = 0; i < d; ++i) scale *= value;
    r = r + Poly::term(m2, scale);
  }
  return r;
}

bool Poly::depends_on(Sym s) const {
  for (auto& [m, c] : terms_)
    if (m.deg(s) > 0) return true;
  return false;
}

double Poly::eval(const std::array<double, kNumSyms>& vals) const {
  double acc = 0;
  for (auto& [m, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < kNumSyms; ++i) {
      int d = m.deg(Sym(i));
      for (int k = 0; k < d; ++k) t *= vals[i];
    }
    acc += t;
  }
  return acc;
}

std::size_t Poly::hash() const {
  std::size_t h = 0x1234;
  for (auto& [m, c] : terms_) {
    h = hash_combine(h, std::hash<uint64_t>()(m.bits));
    h = hash_combine(h, hash_rat(c));
  }
  return h;
}

int Poly::compare(const Poly& a, const Poly& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first)
      return a.terms_[i].first > b.terms_[i].first ? 1 : -1;
    if (a.terms_[i].second != b.terms_[i].second)
      return a.terms_[i].second > b.terms_[i].second ? 1 : -1;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() > b.terms_.size() ? 1 : -1;
  return 0;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (!first)
      out << (c < 0 ? " - " : " + ");
    else if (c < 0)
      out << "-";
    first = false;
    bool coef_one = (ac == 1) && !m.is_unit();
    if (!coef_one) out << to_string(ac);
    bool lead = coef_one;
    for (int i = 0; i < kNumSyms; ++i) {
      int d = m.deg(Sym(i));
      if (d == 0) continue;
      if (!lead) out << "*";
      lead = false;
      out << kSymNames[i];
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Scalar Scalar::from_poly(Poly p) {
  Scalar s;
  s.num_ = std::move(p);
  return s;
}

bool Scalar::is_one() const {
  return den_.empty() && num_.is_constant() && !num_.is_zero() &&
         num_.constant() == 1;
}

bool Scalar::is_rational() const {
  return den_.empty() && num_.is_constant();
}

Rat Scalar::rational() const {
  if (!is_rational()) throw ScalarError("Scalar::rational on symbolic value");
  return num_.constant();
}

bool Scalar::is_integer() const {
  return is_rational() && cylmhd::is_integer(num_.constant());
}

long long Scalar::small_int() const {
  Rat r = rational();
  if (!cylmhd::is_integer(r)) throw ScalarError("not an integer");
  Int n = numerator(r);
  if (n > 1'000'000'000 || n < -1'000'000'000)
    throw ScalarError("integer too large");
  return n.template convert_to<long long>();
}

Poly Scalar::den_poly() const {
  Poly d(Rat(1));
  for (auto& [f, m] : den_)
    for (int i = 0; i < m; ++i) d = d * f;
  return d;
}

void Scalar::push_den(const Poly& f, int mult) {
  if (mult == 0) return;
  auto [content, prim] = f.primitive();
  if (prim.is_zero()) throw ScalarError("Scalar: division by zero");
  // rational content of the factor folds into the numerator
  Rat scale(1);
  for (int i = 0; i < mult; ++i) scale /= content;
  num_ = num_.scaled(scale);
  if (prim.is_constant()) return;
  for (auto& [g, m] : den_) {
    if (g == prim) {
      m += mult;
      return;
    }
  }
  den_.push_back({prim, mult});
}

void Scalar::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [f, m] : den_) {
    while (m > 0) {
      auto q = num_.divide_exact(f);
      if (!q) break;
      num_ = std::move(*q);
      --m;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(),
                            [](auto& p) { return p.second == 0; }),
             den_.end());
  std::sort(den_.begin(), den_.end(), [](auto& a, auto& b) {
    return Poly::compare(a.first, b.first) > 0;
  });
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Scalar r;
  // num = a*D2 + b*D1, den = D1*D2 with shared factors handled by cancel().
  r.num_ = num_ * o.den_poly() + o.num_ * den_poly();
  for (auto& [f, m] : den_) r.push_den(f, m);
  for (auto& [f, m] : o.den_) r.push_den(f, m);
  r.cancel();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.num_ = num_ * o.num_;
  if (r.num_.is_zero()) return r;
  for (auto& [f, m] : den_) r.push_den(f, m);
  for (auto& [f, m] : o.den_) r.push_den(f, m);
  r.cancel();
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ScalarError("Scalar: division by zero");
  Scalar r;
  r.num_ = den_poly();
  r.push_den(num_, 1);
  r.cancel();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long long n) const {
  if (n == 0) return Scalar(1);
  Scalar base = n < 0 ? inv() : *this;
  long long k = n < 0 ? -n : n;
  Scalar r(1);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (num_ == o.num_ && den_.size() == o.den_.size()) {
    bool same = true;
    for (size_t i = 0; i < den_.size(); ++i)
      if (!(den_[i].first == o.den_[i].first) ||
          den_[i].second != o.den_[i].second) {
        same = false;
        break;
      }
    if (same) return true;
  }
  // Fall back to cross multiplication for differently-factored forms.
  return (num_ * o.den_poly() - o.num_ * den_poly()).is_zero();
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a == b) return 0;
  int c = Poly::compare(a.num_, b.num_);
  if (c != 0) return c;
  return Poly::compare(a.den_poly(), b.den_poly());
}

Scalar Scalar::derivative(Sym s) const {
  bool den_dep = false;
  for (auto& [f, m] : den_)
    if (f.depends_on(s)) den_dep = true;
  if (!den_dep) {
    Scalar r;
    r.num_ = num_.derivative(s);
    if (!r.num_.is_zero()) {
      for (auto& [f, m] : den_) r.push_den(f, m);
      r.cancel();
    }
    return r;
  }
  // quotient rule on num / prod(f_i^m_i)
  Poly d = den_poly();
  Poly dden;  // derivative of the expanded denominator
  for (size_t i = 0; i < den_.size(); ++i) {
    Poly part = den_[i].first.derivative(s).scaled(Rat(den_[i].second));
    for (size_t j = 0; j < den_.size(); ++j) {
      int m = den_[j].second - (i == j ? 1 : 0);
      for (int k = 0; k < m; ++k) part = part * den_[j].first;
    }
    dden = dden + part;
  }
  Scalar r;
  r.num_ = num_.derivative(s) * d - num_ * dden;
  for (auto& [f, m] : den_) r.push_den(f, 2 * m);
  r.cancel();
  return r;
}

Scalar Scalar::substituted(Sym s, const Rat& value) const {
  Scalar r;
  r.num_ = num_.substituted(s, value);
  for (auto& [f, m] : den_) {
    Poly f2 = f.substituted(s, value);
    if (f2.is_zero())
      throw ScalarError("Scalar: substitution makes a denominator vanish");
    r.push_den(f2, m);
  }
  r.cancel();
  return r;
}

bool Scalar::depends_on(Sym s) const {
  if (num_.depends_on(s)) return true;
  for (auto& [f, m] : den_)
    if (f.depends_on(s)) return true;
  return false;
}

double Scalar::eval(const std::array<double, kNumSyms>& vals) const {
  double v = num_.eval(vals);
  for (auto& [f, m] : den_) {
    double fv = f.eval(vals);
    for (int i = 0; i < m; ++i) v /= fv;
  }
  return v;
}

double Scalar::min_den_magnitude(const std::array<double, kNumSyms>& vals) const {
  double mn = 1.0;
  for (auto& [f, m] : den_) mn = std::min(mn, std::abs(f.eval(vals)));
  return mn;
}

std::size_t Scalar::hash() const {
  std::size_t h = num_.hash();
  for (auto& [f, m] : den_) {
    h = hash_combine(h, f.hash());
    h = hash_combine(h, std::hash<int>()(m));
  }
  return h;
}

std::string Scalar::str() const {
  if (den_.empty()) {
    if (num_.is_constant()) return to_string(num_.constant());
    if (num_.terms().size() == 1) return num_.str();
    return "(" + num_.str() + ")";
  }
  std::ostringstream out;
  out << "(" << num_.str() << ")/(";
  bool first = true;
  for (auto& [f, m] : den_) {
    if (!first) out << "*";
    first = false;
    out << "(" << f.str() << ")";
    if (m > 1) out << "^" << m;
  }
  out << ")";
  return out.str();
}

}  // namespace cylmhd
