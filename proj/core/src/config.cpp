#include "cylmhd/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cylmhd/parse.hpp"
#include "json.hpp"

namespace cylmhd {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

bool ConfigDoc::has(const std::string& sec, const std::string& key) const {
  auto it = sections.find(sec);
  return it != sections.end() && it->second.count(key);
}

std::string ConfigDoc::get(const std::string& sec, const std::string& key,
                           const std::string& fallback) const {
  auto it = sections.find(sec);
  if (it == sections.end()) return fallback;
  auto jt = it->second.find(key);
  return jt == it->second.end() ? fallback : jt->second;
}

double ConfigDoc::get_num(const std::string& sec, const std::string& key,
                          double fallback) const {
  if (!has(sec, key)) return fallback;
  const std::string v = get(sec, key, "");
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (trim(v.substr(pos)).empty()) return d;
  } catch (...) {
  }
  throw ConfigError("value of " + sec + "." + key + " is not a number: " + v);
}

ConfigDoc parse_config(const std::string& text) {
  ConfigDoc doc;
  std::string body = trim(text);
  if (!body.empty() && body[0] == '{') {
    nlohmann::json j = nlohmann::json::parse(body);
    for (auto& [sec, obj] : j.items()) {
      if (!obj.is_object())
        throw ConfigError("JSON config: section '" + sec +
                          "' must be an object");
      for (auto& [key, val] : obj.items()) {
        std::string sval;
        if (val.is_string())
          sval = val.get<std::string>();
        else
          sval = val.dump();
        doc.sections[sec][key] = sval;
      }
    }
    return doc;
  }
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(t.substr(1, t.size() - 2));
      doc.sections[section];
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
    if (section.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": key outside any [section]");
    doc.sections[section][key] = val;
  }
  return doc;
}

ConfigDoc load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

RunConfig run_config_from(const ConfigDoc& doc) {
  static const std::map<std::string, std::set<std::string>> kKnown = {
      {"run",
       {"regime", "A", "gamma", "N", "s_min", "s_max", "cfl", "t_end",
        "max_steps", "bc_left", "bc_right", "p_ext", "p_ext_left",
        "p_ext_right", "viscosity", "viscosity_on", "output_every",
        "r_inner"}},
      {"conductivity", {"kind", "C"}},
      {"init", {"rho", "u", "v", "w", "p", "S", "ftheta", "fz"}},
  };
  for (auto& [sec, keys] : doc.sections) {
    auto it = kKnown.find(sec);
    if (it == kKnown.end()) throw ConfigError("unknown section [" + sec + "]");
    for (auto& [k, v] : keys)
      if (!it->second.count(k))
        throw ConfigError("unknown key '" + k + "' in section [" + sec + "]");
  }

  RunConfig cfg;
  std::string regime = doc.get("run", "regime", "infinite");
  if (regime != "finite" && regime != "infinite")
    throw ConfigError("run.regime must be finite or infinite");
  cfg.A = doc.get_num("run", "A", 0.0);
  cfg.regime.cond =
      regime == "finite" ? Conductivity::Finite : Conductivity::Infinite;
  cfg.regime.aclass = cfg.A == 0.0 ? AClass::Zero : AClass::NonZero;
  cfg.gamma = doc.get_num("run", "gamma", 1.4);
  cfg.regime.gamma2 = cfg.gamma == 2.0;
  cfg.N = int(doc.get_num("run", "N", 200));
  cfg.s_min = doc.get_num("run", "s_min", 0.0);
  cfg.s_max = doc.get_num("run", "s_max", 1.0);
  cfg.cfl = doc.get_num("run", "cfl", 0.4);
  cfg.t_end = doc.get_num("run", "t_end", 1.0);
  cfg.max_steps = long(doc.get_num("run", "max_steps", 1e6));
  cfg.r_inner = doc.get_num("run", "r_inner", 1.0);
  cfg.viscosity = doc.get_num("run", "viscosity", 2.0);
  std::string von = doc.get("run", "viscosity_on", "false");
  cfg.viscosity_on = von == "true" || von == "1" || von == "yes";
  cfg.output_every = int(doc.get_num("run", "output_every", 1));

  auto bc = [&](const std::string& key) {
    std::string v = doc.get("run", key, "free");
    if (v == "free") return BoundaryKind::Free;
    if (v == "rigid") return BoundaryKind::Rigid;
    throw ConfigError("run." + key + " must be free or rigid");
  };
  cfg.bc_left = bc("bc_left");
  cfg.bc_right = bc("bc_right");
  double pext = doc.get_num("run", "p_ext",
                            std::numeric_limits<double>::quiet_NaN());
  cfg.p_ext_left = doc.get_num("run", "p_ext_left", pext);
  cfg.p_ext_right = doc.get_num("run", "p_ext_right", pext);

  std::string kind = doc.get("conductivity", "kind",
                             regime == "finite" ? "c_rho" : "infinite");
  if (kind == "infinite")
    cfg.sigma_kind = SigmaKind::Infinite;
  else if (kind == "c_rho")
    cfg.sigma_kind = SigmaKind::CRho;
  else if (kind == "c_sqrt_rho")
    cfg.sigma_kind = SigmaKind::CSqrtRho;
  else
    throw ConfigError(
        "conductivity.kind must be infinite, c_rho or c_sqrt_rho "
        "(other classification models are symbolic-only)");
  cfg.sigma_C = doc.get_num("conductivity", "C", 1.0);

  auto prof = [&](const std::string& key, const Expr& fallback) {
    if (!doc.has("init", key)) return fallback;
    Expr e = parse_expr(doc.get("init", key, ""));
    for (const Atom& a : e.atoms()) {
      if (a.kind == Atom::Kind::Jet || a.kind == Atom::Kind::IndepT ||
          a.kind == Atom::Kind::Const)
        throw ConfigError("init." + key +
                          " must be a function of s and math functions only");
    }
    return e;
  };
  cfg.init.rho = prof("rho", Expr::one());
  cfg.init.u = prof("u", Expr::zero());
  cfg.init.v = prof("v", Expr::zero());
  cfg.init.w = prof("w", Expr::zero());
  cfg.init.p = prof("p", Expr::one());
  if (doc.has("init", "S")) cfg.init.S = prof("S", Expr::one());
  cfg.init.ftheta = prof("ftheta", Expr::zero());
  cfg.init.fz = prof("fz", Expr::zero());
  return cfg;
}

}  // namespace cylmhd
