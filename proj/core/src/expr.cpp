#include "cylmhd/expr.hpp"

#include <algorithm>

namespace cylmhd {

namespace {
const char* kFieldNames[kNumFields] = {"u",  "v",      "w",  "rho",    "p",
                                       "S",  "Htheta", "Hz", "Etheta", "Ez",
                                       "r",  "theta",  "z",  "phi",    "psi",
                                       "chi"};
}

const char* field_name(Field f) { return kFieldNames[int(f)]; }

std::optional<Field> field_from_name(const std::string& name) {
  for (int i = 0; i < kNumFields; ++i)
    if (name == kFieldNames[i]) return Field(i);
  return std::nullopt;
}

int Atom::compare(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return int(a.kind) < int(b.kind) ? -1 : 1;
  switch (a.kind) {
    case Kind::IndepT:
    case Kind::IndepX:
      return 0;
    case Kind::Jet:
      if (a.jet != b.jet) return a.jet < b.jet ? -1 : 1;
      return 0;
    case Kind::Const:
      if (a.cst != b.cst) return int(a.cst) < int(b.cst) ? -1 : 1;
      return 0;
    case Kind::Fn: {
      if (int c = a.fn->name.compare(b.fn->name)) return c < 0 ? -1 : 1;
      if (a.fn->args.size() != b.fn->args.size())
        return a.fn->args.size() < b.fn->args.size() ? -1 : 1;
      if (a.fn->orders != b.fn->orders)
        return a.fn->orders < b.fn->orders ? -1 : 1;
      for (size_t i = 0; i < a.fn->args.size(); ++i)
        if (int c = Expr::compare(a.fn->args[i], b.fn->args[i])) return c;
      return 0;
    }
  }
  return 0;
}

std::size_t Atom::hash() const {
  std::size_t h = std::hash<int>()(int(kind));
  switch (kind) {
    case Kind::Jet:
      h = hash_combine(h, std::hash<int>()(int(jet.field) * 64 + jet.dt * 8 +
                                           jet.dx));
      break;
    case Kind::Const:
      h = hash_combine(h, std::hash<int>()(int(cst)));
      break;
    case Kind::Fn: {
      h = hash_combine(h, std::hash<std::string>()(fn->name));
      for (int o : fn->orders) h = hash_combine(h, std::hash<int>()(o));
      for (auto& a : fn->args) h = hash_combine(h, a.hash());
      break;
    }
    default:
      break;
  }
  return h;
}

struct Expr::Impl {
  std::vector<Term> num;
  std::vector<Term> den;  // {Term(1)} unless a multi-term denominator exists
  std::size_t h = 0;
};

namespace {

int compare_mono(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (int c = Atom::compare(a[i].atom, b[i].atom)) return c;
    if (int c = Scalar::compare(a[i].exp, b[i].exp)) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int compare_term(const Term& a, const Term& b) {
  if (int c = compare_mono(a.mono, b.mono)) return c;
  return Scalar::compare(a.coef, b.coef);
}

std::size_t hash_term(const Term& t) {
  std::size_t h = t.coef.hash();
  for (auto& f : t.mono) {
    h = hash_combine(h, f.atom.hash());
    h = hash_combine(h, f.exp.hash());
  }
  return h;
}

// Normalizes a single term: sorts factors, merges repeated atoms, folds
// integer powers of symbolic constants into the coefficient, drops zero
// exponents.  Returns a zero-coefficient term if the coefficient vanishes.
Term normalize_term(Term t) {
  if (t.coef.is_zero()) return Term{Scalar(0), {}};
  std::sort(t.mono.begin(), t.mono.end(), [](const Factor& x, const Factor& y) {
    return Atom::compare(x.atom, y.atom) < 0;
  });
  std::vector<Factor> out;
  for (auto& f : t.mono) {
    if (!out.empty() && out.back().atom == f.atom)
      out.back().exp = out.back().exp + f.exp;
    else
      out.push_back(f);
  }
  std::vector<Factor> kept;
  for (auto& f : out) {
    if (f.exp.is_zero()) continue;
    if (f.atom.kind == Atom::Kind::Const && f.exp.is_integer()) {
      long long k = f.exp.small_int();
      Scalar s = Scalar(f.atom.cst).pow(k);
      t.coef = t.coef * s;
      continue;
    }
    kept.push_back(f);
  }
  if (t.coef.is_zero()) return Term{Scalar(0), {}};
  t.mono = std::move(kept);
  return t;
}

std::vector<Term> normalize_sum(std::vector<Term> terms) {
  std::vector<Term> ts;
  ts.reserve(terms.size());
  for (auto& t : terms) {
    Term n = normalize_term(std::move(t));
    if (!n.coef.is_zero()) ts.push_back(std::move(n));
  }
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return compare_mono(a.mono, b.mono) < 0; });
  std::vector<Term> out;
  for (auto& t : ts) {
    if (!out.empty() && compare_mono(out.back().mono, t.mono) == 0) {
      out.back().coef = out.back().coef + t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Term> mul_sums(const std::vector<Term>& a,
                           const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (auto& x : a)
    for (auto& y : b) {
      Term t;
      t.coef = x.coef * y.coef;
      t.mono = x.mono;
      t.mono.insert(t.mono.end(), y.mono.begin(), y.mono.end());
      out.push_back(std::move(t));
    }
  return normalize_sum(std::move(out));
}

std::vector<Term> add_sums(const std::vector<Term>& a,
                           const std::vector<Term>& b) {
  std::vector<Term> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalize_sum(std::move(out));
}

Term one_term() { return Term{Scalar(1), {}}; }

bool is_one_sum(const std::vector<Term>& s) {
  return s.size() == 1 && s[0].mono.empty() && s[0].coef.is_one();
}

// Divides every numerator term by the single denominator term.
std::vector<Term> fold_single_den(std::vector<Term> num, const Term& d) {
  for (auto& t : num) {
    t.coef = t.coef / d.coef;
    for (auto& f : d.mono) t.mono.push_back({f.atom, -f.exp});
  }
  return normalize_sum(std::move(num));
}

}  // namespace

Expr Expr::from_terms(std::vector<Term> num, std::vector<Term> den) {
  num = normalize_sum(std::move(num));
  den = normalize_sum(std::move(den));
  if (den.empty()) throw ExprError("division by zero expression");
  if (num.empty()) den = {one_term()};
  if (den.size() == 1 && !(den[0].mono.empty() && den[0].coef.is_one())) {
    num = fold_single_den(std::move(num), den[0]);
    den = {one_term()};
  }
  if (den.size() > 1) {
    if (num == den) {
      num = {one_term()};
      den = {one_term()};
    } else {
      // scale so the leading denominator coefficient is one
      Scalar lead = den[0].coef;
      if (!lead.is_one()) {
        for (auto& t : num) t.coef = t.coef / lead;
        for (auto& t : den) t.coef = t.coef / lead;
      }
      // cancel integer-exponent atom content shared by all terms
      std::vector<Factor> content;
      for (auto& f : den[0].mono) {
        if (!f.exp.is_integer()) continue;
        long long m = f.exp.small_int();
        for (auto list : {&num, &den}) {
          for (auto& t : *list) {
            long long here = 0;
            for (auto& g : t.mono)
              if (g.atom == f.atom && g.exp.is_integer())
                here = g.exp.small_int();
            m = std::min(m, here);
            if (m <= 0) break;
          }
        }
        if (m > 0) content.push_back({f.atom, Scalar(Rat(-m))});
      }
      if (!content.empty()) {
        for (auto list : {&num, &den})
          for (auto& t : *list)
            t.mono.insert(t.mono.end(), content.begin(), content.end());
        num = normalize_sum(std::move(num));
        den = normalize_sum(std::move(den));
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->num = std::move(num);
  impl->den = std::move(den);
  std::size_t h = 0xABCD;
  for (auto& t : impl->num) h = hash_combine(h, hash_term(t));
  h = hash_combine(h, 0x5e5e);
  for (auto& t : impl->den) h = hash_combine(h, hash_term(t));
  impl->h = h;
  return Expr(std::move(impl));
}

Expr Expr::from_terms(std::vector<Term> num) {
  return from_terms(std::move(num), {one_term()});
}

Expr Expr::zero() { return from_terms({}); }
Expr Expr::one() { return from_terms({one_term()}); }
Expr Expr::num(long long v) { return from_terms({Term{Scalar(Rat(v)), {}}}); }
Expr Expr::rational(const Rat& v) { return from_terms({Term{Scalar(v), {}}}); }
Expr Expr::scalar(const Scalar& s) { return from_terms({Term{s, {}}}); }
Expr Expr::constant(Sym s) { return from_terms({Term{Scalar(s), {}}}); }

Expr Expr::indep(Dir d) {
  Atom a;
  a.kind = d == Dir::T ? Atom::Kind::IndepT : Atom::Kind::IndepX;
  return atom_expr(a);
}

Expr Expr::jet(Field f, int dt, int dx) {
  if (dt < 0 || dx < 0 || dt + dx > kMaxJetOrder)
    throw JetOrderError("jet order beyond supported cap");
  Atom a;
  a.kind = Atom::Kind::Jet;
  a.jet = JetVar{f, uint8_t(dt), uint8_t(dx)};
  return atom_expr(a);
}

Expr Expr::jet(const JetVar& v) { return jet(v.field, v.dt, v.dx); }

Expr Expr::fn(const std::string& name, std::vector<Expr> args) {
  return fn_partial(name, std::move(args), {});
}

Expr Expr::fn_partial(const std::string& name, std::vector<Expr> args,
                      std::vector<int> orders) {
  orders.resize(args.size(), 0);
  auto app = std::make_shared<FnApp>();
  app->name = name;
  app->args = std::move(args);
  app->orders = std::move(orders);
  Atom a;
  a.kind = Atom::Kind::Fn;
  a.fn = std::move(app);
  return atom_expr(a);
}

Expr Expr::atom_expr(const Atom& a) {
  return from_terms({Term{Scalar(1), {Factor{a, Scalar(1)}}}});
}

bool Expr::is_zero() const { return impl_->num.empty(); }

bool Expr::is_one() const {
  return is_one_sum(impl_->num) && is_one_sum(impl_->den);
}

bool Expr::is_scalar() const {
  return is_one_sum(impl_->den) &&
         (impl_->num.empty() ||
          (impl_->num.size() == 1 && impl_->num[0].mono.empty()));
}

Scalar Expr::scalar_value() const {
  if (!is_scalar()) throw ExprError("expression is not a bare scalar");
  if (impl_->num.empty()) return Scalar(0);
  return impl_->num[0].coef;
}

const std::vector<Term>& Expr::num_terms() const { return impl_->num; }
const std::vector<Term>& Expr::den_terms() const { return impl_->den; }

Expr Expr::operator+(const Expr& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_one_sum(impl_->den) && is_one_sum(o.impl_->den))
    return from_terms(add_sums(impl_->num, o.impl_->num));
  auto num = add_sums(mul_sums(impl_->num, o.impl_->den),
                      mul_sums(o.impl_->num, impl_->den));
  auto den = mul_sums(impl_->den, o.impl_->den);
  return from_terms(std::move(num), std::move(den));
}

Expr Expr::operator-() const {
  std::vector<Term> num = impl_->num;
  for (auto& t : num) t.coef = -t.coef;
  return from_terms(std::move(num), impl_->den);
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return from_terms(mul_sums(impl_->num, o.impl_->num),
                    mul_sums(impl_->den, o.impl_->den));
}

Expr Expr::operator/(const Expr& o) const {
  if (o.is_zero()) throw ExprError("division by zero expression");
  if (is_zero()) return zero();
  return from_terms(mul_sums(impl_->num, o.impl_->den),
                    mul_sums(impl_->den, o.impl_->num));
}

Expr Expr::pow(const Scalar& e) const {
  if (e.is_zero()) {
    if (is_zero()) throw ExprError("0^0");
    return one();
  }
  if (e.is_one()) return *this;
  if (e.is_integer()) {
    long long n = e.small_int();
    if (is_zero()) {
      if (n < 0) throw ExprError("division by zero expression");
      return zero();
    }
    bool neg = n < 0;
    long long k = neg ? -n : n;
    // single-term fast path: scale exponents directly
    if (impl_->num.size() == 1 && is_one_sum(impl_->den)) {
      Term t = impl_->num[0];
      Term r;
      r.coef = t.coef.pow(n);
      for (auto& f : t.mono) r.mono.push_back({f.atom, f.exp * Scalar(Rat(n))});
      return from_terms({r});
    }
    Expr base = *this;
    Expr acc = one();
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    if (neg) return one() / acc;
    return acc;
  }
  // symbolic exponent: only a unit-coefficient monomial may be raised
  if (impl_->num.size() != 1 || !is_one_sum(impl_->den))
    throw ExprError("symbolic power of a sum is not supported");
  const Term& t = impl_->num[0];
  if (!t.coef.is_one())
    throw ExprError("symbolic power of a non-unit coefficient");
  Term r;
  r.coef = Scalar(1);
  for (auto& f : t.mono) {
    if (!f.exp.is_integer())
      throw ExprError("nested symbolic exponents are not supported");
    r.mono.push_back({f.atom, f.exp * e});
  }
  return from_terms({r});
}

bool Expr::operator==(const Expr& o) const {
  if (impl_ == o.impl_) return true;
  if (impl_->h != o.impl_->h) return false;
  return compare(*this, o) == 0;
}

int Expr::compare(const Expr& a, const Expr& b) {
  if (a.impl_ == b.impl_) return 0;
  auto cmp_sums = [](const std::vector<Term>& x, const std::vector<Term>& y) {
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i)
      if (int c = compare_term(x[i], y[i])) return c;
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  };
  if (int c = cmp_sums(a.impl_->num, b.impl_->num)) return c;
  return cmp_sums(a.impl_->den, b.impl_->den);
}

std::size_t Expr::hash() const { return impl_->h; }

void Expr::collect_atoms(std::set<Atom>& out) const {
  auto scan = [&](const std::vector<Term>& ts) {
    for (auto& t : ts)
      for (auto& f : t.mono) {
        out.insert(f.atom);
        if (f.atom.kind == Atom::Kind::Fn)
          for (auto& arg : f.atom.fn->args) arg.collect_atoms(out);
      }
  };
  scan(impl_->num);
  scan(impl_->den);
}

std::set<Atom> Expr::atoms() const {
  std::set<Atom> s;
  collect_atoms(s);
  return s;
}

bool Expr::depends_on_sym(Sym s) const {
  auto scan = [&](const std::vector<Term>& ts) {
    for (auto& t : ts) {
      if (t.coef.depends_on(s)) return true;
      for (auto& f : t.mono) {
        if (f.exp.depends_on(s)) return true;
        if (f.atom.kind == Atom::Kind::Const && f.atom.cst == s) return true;
        if (f.atom.kind == Atom::Kind::Fn)
          for (auto& arg : f.atom.fn->args)
            if (arg.depends_on_sym(s)) return true;
      }
    }
    return false;
  };
  return scan(impl_->num) || scan(impl_->den);
}

}  // namespace cylmhd
