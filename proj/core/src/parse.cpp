#include "cylmhd/parse.hpp"

#include <cctype>
#include <sstream>

namespace cylmhd {

namespace {

struct Lexer {
  std::string s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' at offset " +
                       std::to_string(pos) + " in: " + s);
  }
  std::string ident() {
    skip();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw ParseError("expected identifier in: " + s);
    return s.substr(start, pos - start);
  }
  Rat number() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    Int ip(s.substr(start, pos - start));
    Rat r(ip);
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      size_t fs = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      std::string frac = s.substr(fs, pos - fs);
      if (!frac.empty()) {
        Int den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        r += Rat(Int(frac), den);
      }
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      size_t save = pos;
      ++pos;
      bool neg = false;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
      }
      size_t es = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      if (es == pos) {
        pos = save;  // not an exponent after all
      } else {
        int ex = std::stoi(s.substr(es, pos - es));
        Rat p10(1);
        for (int i = 0; i < ex; ++i) p10 *= 10;
        if (neg)
          r /= p10;
        else
          r *= p10;
      }
    }
    return r;
  }
};

struct Parser {
  Lexer lx;

  Expr parse() {
    Expr e = sum();
    if (!lx.eof())
      throw ParseError("trailing input at offset " + std::to_string(lx.pos) +
                       " in: " + lx.s);
    return e;
  }

  Expr sum() {
    Expr e = lx.accept('-') ? -product() : (lx.accept('+'), product());
    while (true) {
      if (lx.accept('+'))
        e = e + product();
      else if (lx.accept('-'))
        e = e - product();
      else
        return e;
    }
  }

  Expr product() {
    Expr e = power();
    while (true) {
      if (lx.accept('*'))
        e = e * power();
      else if (lx.accept('/'))
        e = e / power();
      else
        return e;
    }
  }

  Expr power() {
    Expr base = unary();
    if (lx.accept('^')) {
      Expr e = power();  // right associative
      if (!e.is_scalar())
        throw ParseError("exponent is not a model constant expression");
      return base.pow(e.scalar_value());
    }
    return base;
  }

  Expr unary() {
    if (lx.accept('-')) return -unary();
    if (lx.accept('+')) return unary();
    return primary();
  }

  std::vector<Expr> arg_list() {
    std::vector<Expr> args;
    lx.expect('(');
    if (!lx.accept(')')) {
      args.push_back(sum());
      while (lx.accept(',')) args.push_back(sum());
      lx.expect(')');
    }
    return args;
  }

  Expr primary() {
    char c = lx.peek();
    if (c == '(') {
      lx.expect('(');
      Expr e = sum();
      lx.expect(')');
      return e;
    }
    if (std::isdigit((unsigned char)c)) return Expr::rational(lx.number());
    std::string id = lx.ident();
    if (id == "D" && lx.peek() == '(') {
      // D(name,[o1,o2,...])(args)
      lx.expect('(');
      std::string name = lx.ident();
      lx.expect(',');
      lx.expect('[');
      std::vector<int> orders;
      if (!lx.accept(']')) {
        orders.push_back(int(to_double(lx.number())));
        while (lx.accept(',')) orders.push_back(int(to_double(lx.number())));
        lx.expect(']');
      }
      lx.expect(')');
      auto args = arg_list();
      if (orders.size() != args.size())
        throw ParseError("partial order vector does not match arguments");
      return Expr::fn_partial(name, std::move(args), std::move(orders));
    }
    if (lx.peek() == '(') return Expr::fn(id, arg_list());
    return resolve(id);
  }

  Expr resolve(const std::string& id) {
    if (id == "t") return Expr::indep(Dir::T);
    if (id == "s") return Expr::indep(Dir::X);
    if (auto f = field_from_name(id)) return Expr::jet(*f);
    if (auto s = sym_from_name(id)) return Expr::constant(*s);
    // jet variable: base name followed by a derivative suffix
    auto us = id.rfind('_');
    if (us != std::string::npos) {
      std::string base = id.substr(0, us), suf = id.substr(us + 1);
      auto f = field_from_name(base);
      if (f && !suf.empty()) {
        int dt = 0, dx = 0;
        bool ok = true;
        for (char ch : suf) {
          if (ch == 't')
            ++dt;
          else if (ch == 's')
            ++dx;
          else
            ok = false;
        }
        if (ok) return Expr::jet(*f, dt, dx);
      }
    }
    throw ParseError("unknown symbol '" + id + "'");
  }
};

void print_atom(std::ostringstream& out, const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::IndepT:
      out << "t";
      return;
    case Atom::Kind::IndepX:
      out << "s";
      return;
    case Atom::Kind::Const:
      out << sym_name(a.cst);
      return;
    case Atom::Kind::Jet: {
      out << field_name(a.jet.field);
      if (a.jet.dt || a.jet.dx) {
        out << "_";
        for (int i = 0; i < a.jet.dt; ++i) out << "t";
        for (int i = 0; i < a.jet.dx; ++i) out << "s";
      }
      return;
    }
    case Atom::Kind::Fn: {
      bool plain = true;
      for (int o : a.fn->orders) plain = plain && o == 0;
      if (!plain) {
        out << "D(" << a.fn->name << ",[";
        for (size_t i = 0; i < a.fn->orders.size(); ++i) {
          if (i) out << ",";
          out << a.fn->orders[i];
        }
        out << "])";
      } else {
        out << a.fn->name;
      }
      out << "(";
      for (size_t i = 0; i < a.fn->args.size(); ++i) {
        if (i) out << ",";
        out << print_expr(a.fn->args[i]);
      }
      out << ")";
      return;
    }
  }
}

void print_factor(std::ostringstream& out, const Factor& f) {
  print_atom(out, f.atom);
  if (f.exp.is_one()) return;
  out << "^";
  if (f.exp.is_integer() && f.exp.rational() >= 0) {
    out << to_string(f.exp.rational());
  } else {
    out << "(" << print_scalar(f.exp) << ")";
  }
}

// Prints a term without any leading sign; returns true when the term is
// "negative" (a rational negative coefficient), so the caller can emit '-'.
bool term_body(std::ostringstream& out, const Term& t) {
  Scalar c = t.coef;
  bool neg = false;
  if (c.is_rational() && c.rational() < 0) {
    neg = true;
    c = -c;
  }
  bool need_coef = !(c.is_one() && !t.mono.empty());
  bool first = true;
  if (need_coef) {
    out << print_scalar(c);
    first = false;
  }
  for (auto& f : t.mono) {
    if (!first) out << "*";
    first = false;
    print_factor(out, f);
  }
  return neg;
}

std::string print_sum(const std::vector<Term>& ts) {
  if (ts.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& t : ts) {
    std::ostringstream body;
    bool neg = term_body(body, t);
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    out << body.str();
  }
  return out.str();
}

}  // namespace

Expr parse_expr(const std::string& text) {
  Parser p;
  p.lx.s = text;
  return p.parse();
}

std::string print_scalar(const Scalar& s) {
  if (s.is_rational()) {
    Rat r = s.rational();
    if (is_integer(r)) return to_string(r);
    return "(" + to_string(r) + ")";
  }
  return s.str();
}

std::string print_expr(const Expr& e) {
  std::string num = print_sum(e.num_terms());
  if (!e.has_multiterm_den()) return num;
  return "(" + num + ")/(" + print_sum(e.den_terms()) + ")";
}

}  // namespace cylmhd
