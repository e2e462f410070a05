#include "valext/scenario.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "valext/errors.hpp"
#include "valext/tower.hpp"

namespace valext {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

long long parse_integer(const std::string& v, int line, long long lo) {
  std::size_t used = 0;
  long long n = 0;
  try {
    n = std::stoll(v, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + v + "'", line);
  }
  if (used != v.size() || n < lo) throw ParseError("expected an integer >= " + std::to_string(lo) + ", got '" + v + "'", line);
  return n;
}

int line_of(const ScenarioFile& s, const std::string& key) {
  auto it = s.lines.find(key);
  return it == s.lines.end() ? 0 : it->second;
}

// Runs a construction step, turning input errors into parse errors at the given line.
template <class Fn>
auto at_line(int line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), line);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line);
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), line);
  }
}

FieldPtr base_tower(const ScenarioFile& s) {
  FieldPtr k = at_line(line_of(s, "base"), [&] { return parse_tower("base=" + s.base); });
  if (s.base_gens.empty()) return k;
  return at_line(line_of(s, "base.gens"), [&] { return extend_tower(k, join(s.base_gens, "; ")); });
}

FieldPtr field_tower(const ScenarioFile& s, const FieldPtr& k) {
  if (s.field_gens.empty()) return k;
  return at_line(line_of(s, "valuation.gens"), [&] { return extend_tower(k, join(s.field_gens, "; ")); });
}

FieldPtr kprime_tower(const ScenarioFile& s, const FieldPtr& k) {
  if (s.kprime_gens.empty()) return k;
  return at_line(line_of(s, "kprime-gens"), [&] { return extend_tower(k, join(s.kprime_gens, "; ")); });
}

int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const CapabilityError& e) {
    err << "capability exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
  ScenarioFile s;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool seen_base = false;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string l = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') throw ParseError("unterminated section header", line);
      section = trim(l.substr(1, l.size() - 2));
      if (section != "base" && section != "valuation" && section != "extension" && section != "options")
        throw ParseError("unknown section [" + section + "]", line);
      continue;
    }
    auto colon = l.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line);
    std::string key = trim(l.substr(0, colon));
    std::string value = trim(l.substr(colon + 1));
    if (section.empty()) throw ParseError("key '" + key + "' outside a section", line);
    std::string full = section + "." + key;
    auto once = [&](const std::string& name) {
      if (s.lines.count(name)) throw ParseError("duplicate key '" + key + "'", line);
      s.lines[name] = line;
    };
    auto steps = [&](std::vector<std::string>& dst, const std::string& name) {
      if (!s.lines.count(name)) s.lines[name] = line;
      for (auto& st : split(value, ';'))
        if (!st.empty()) dst.push_back(st);
    };
    if (full == "base.base") {
      once("base");
      s.base = value;
      seen_base = true;
    } else if (full == "base.gens") {
      steps(s.base_gens, "base.gens");
    } else if (full == "valuation.gens") {
      steps(s.field_gens, "valuation.gens");
    } else if (full == "valuation.vars") {
      once("vars");
      for (auto& v : split(value, ',')) {
        if (v.empty()) throw ParseError("empty variable name", line);
        s.vars.push_back(v);
      }
    } else if (full == "valuation.order") {
      once("order");
      if (value != "lex") throw ParseError("only lex order is supported", line);
      s.order = value;
    } else if (full == "extension.kprime-gens") {
      steps(s.kprime_gens, "kprime-gens");
    } else if (full == "options.truncation-N") {
      once("truncation-N");
      s.truncation = static_cast<int>(parse_integer(value, line, 0));
    } else if (full == "options.point-index") {
      once("point-index");
      s.point_index = static_cast<int>(parse_integer(value, line, 0));
    } else if (full == "options.seed") {
      once("seed");
      s.seed = static_cast<std::uint64_t>(parse_integer(value, line, 0));
    } else {
      throw ParseError("unknown key '" + key + "' in section [" + section + "]", line);
    }
  }
  if (!seen_base) throw ParseError("missing 'base' in section [base]", 0);
  return s;
}

ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string ScenarioFile::print() const {
  std::string out = "[base]\nbase: " + base + "\n";
  if (!base_gens.empty()) out += "gens: " + join(base_gens, "; ") + "\n";
  if (!field_gens.empty() || !vars.empty()) {
    out += "[valuation]\n";
    if (!field_gens.empty()) out += "gens: " + join(field_gens, "; ") + "\n";
    if (!vars.empty()) out += "vars: " + join(vars, ", ") + "\norder: " + order + "\n";
  }
  if (!kprime_gens.empty()) out += "[extension]\nkprime-gens: " + join(kprime_gens, "; ") + "\n";
  out += "[options]\n";
  if (truncation) out += "truncation-N: " + std::to_string(*truncation) + "\n";
  out += "point-index: " + std::to_string(point_index) + "\nseed: " + std::to_string(seed) + "\n";
  return out;
}

bool operator==(const ScenarioFile& a, const ScenarioFile& b) {
  return a.base == b.base && a.base_gens == b.base_gens && a.field_gens == b.field_gens && a.vars == b.vars &&
         a.order == b.order && a.kprime_gens == b.kprime_gens && a.truncation == b.truncation &&
         a.point_index == b.point_index && a.seed == b.seed;
}

CompositumTriple to_triple(const ScenarioFile& s) {
  FieldPtr k = base_tower(s);
  return {k, kprime_tower(s, k), field_tower(s, k)};
}

ExtensionScenario to_extension(const ScenarioFile& s) {
  if (!s.has_valuation()) throw ParseError("an extension scenario needs 'vars' in [valuation]");
  FieldPtr k = base_tower(s);
  FieldPtr F = field_tower(s, k);
  MonomialValuation V = at_line(line_of(s, "vars"), [&] { return MonomialValuation(F, s.vars); });
  FieldPtr kp = kprime_tower(s, k);
  ExtensionScenario scn{k, V, kp};
  scn.truncation = s.truncation.value_or(-1);
  scn.point_index = s.point_index;
  scn.seed = s.seed;
  return scn;
}

int cmd_decompose(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ScenarioFile s = load_scenario(path);
    CompositumTriple t = to_triple(s);
    FactorOptions fo;
    auto points = tensor_decompose(t.K, t.L, t.M, fo);
    std::ostringstream o;
    o << "K: " << print_tower(t.K) << "\n";
    o << "L: " << print_tower(t.L) << "\n";
    o << "M: " << print_tower(t.M) << "\n";
    o << "points: " << points.size() << "\n";
    int strict = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      o << "[point " << i << "]\n" << points[i].report();
      if (points[i].strictly_maximal) ++strict;
    }
    o << "summary: points=" << points.size() << " strictly-maximal=" << strict << "\n";
    out << o.str();
  });
}

int cmd_extend(const std::string& path, const ExtendOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ScenarioFile s = load_scenario(path);
    ExtensionScenario scn = to_extension(s);
    if (opts.point) scn.point_index = *opts.point;
    if (opts.truncate) scn.truncation = *opts.truncate;
    BuiltExtension b = scn.truncation >= 0 ? build_general(scn, scn.truncation) : build_strictly_maximal(scn);
    std::ostringstream o;
    o << b.report();
    bool wu = b.delta() == b.gamma;
    bool spec_ok = true;
    if (opts.verify) {
      std::mt19937_64 rng(scn.seed);
      WeakUnramifiedReport w = verify_weakly_unramified(b, scn.V, rng);
      SpecReport sp = spec_correspondence(b, scn, rng);
      o << w.report() << sp.report();
      wu = w.weakly_unramified();
      spec_ok = sp.ok;
    }
    o << "summary: delta=\"" << b.delta().to_string() << "\" residue=\"" << b.residue_field()->short_name()
      << "\" path=" << (b.general ? "general" : "strict") << " weakly-unramified=" << (wu ? "yes" : "no");
    if (opts.verify) o << " spec=" << (spec_ok ? "yes" : "no");
    o << "\n";
    out << o.str();
  });
}

}  // namespace valext
