#include "hilbres/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hilbres {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) p = s.size();
    std::string t = trim(s.substr(start, p - start));
    if (!t.empty()) out.push_back(t);
    start = p + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

struct Raw {
  std::map<std::string, std::vector<std::string>> sections;
  std::map<std::string, int> line_of;
};

Raw read_sections(std::string_view text) {
  Raw raw;
  std::string current;
  int lineno = 0;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      auto close = t.find(']');
      if (close == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": unterminated section header");
      current = trim(std::string_view(t).substr(1, close - 1));
      if (raw.sections.contains(current))
        throw ParseError("line " + std::to_string(lineno) + ": duplicate section [" + current + "]");
      raw.sections[current];
      raw.line_of[current] = lineno;
      std::string rest = trim(std::string_view(t).substr(close + 1));
      if (!rest.empty()) raw.sections[current].push_back(rest);
      continue;
    }
    if (current.empty())
      throw ParseError("line " + std::to_string(lineno) + ": content outside a section");
    raw.sections[current].push_back(t);
  }
  return raw;
}

std::map<std::string, std::string> options(const std::vector<std::string>& lines) {
  std::map<std::string, std::string> out;
  for (const auto& l : lines)
    for (const auto& w : words(l)) {
      auto eq = w.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value, got '" + w + "'");
      out[w.substr(0, eq)] = w.substr(eq + 1);
    }
  return out;
}

SurfaceModel read_surface(const std::vector<std::string>& lines) {
  if (lines.empty()) return SurfaceModel::preset("generic-surface");
  auto head = words(lines[0]);
  if (head.empty()) throw ParseError("empty [surface] section");
  if (head[0] != "custom") return SurfaceModel::preset(head[0]);
  SurfaceModel X;
  X.name = "custom";
  bool have_segre = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto w = words(lines[i]);
    if (w.empty()) continue;
    if (w[0] == "dim") {
      if (w.size() != 2) throw ParseError("expected 'dim n'");
      X.dim = std::stoi(w[1]);
    } else if (w[0] == "segre") {
      X.segre = split(trim(std::string_view(lines[i]).substr(5)), ';');
      have_segre = true;
    } else {
      throw ParseError("unknown [surface] entry '" + w[0] + "'");
    }
  }
  X.chern.clear();
  for (int i = 1; i <= X.dim; ++i) X.chern.push_back("c" + std::to_string(i));
  if (!have_segre) X = X.with_inverse_segre();
  if (static_cast<int>(X.segre.size()) > X.dim) throw ParseError("more Segre classes than dim");
  return X;
}

/// Splits a trailing `^n` off a denominator factor.
std::pair<std::string, int> base_and_power(const std::string& s) {
  auto caret = s.rfind('^');
  if (caret == std::string::npos) return {s, 1};
  std::string exp = trim(std::string_view(s).substr(caret + 1));
  if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(c); }))
    return {s, 1};
  std::string base = trim(std::string_view(s).substr(0, caret));
  // `a*z^2` binds the power to z only; accept only whole-factor powers.
  bool whole = base.front() == '(' && base.back() == ')';
  bool ident = std::all_of(base.begin(), base.end(),
                           [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  if (!whole && !ident) return {s, 1};
  return {base, std::stoi(exp)};
}

}  // namespace

Assembled parse_problem_config(std::string_view text) {
  Raw raw = read_sections(text);
  if (raw.sections.empty()) throw ParseError("empty problem config");
  static const std::vector<std::string> known{"vars",  "bundle",    "surface", "numerator",
                                              "denominator", "segre", "prefactor"};
  for (const auto& [name, _] : raw.sections)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw ParseError("unknown section [" + name + "]");
  if (!raw.sections.contains("vars")) throw ParseError("missing [vars] section");

  ContextSpec spec;
  std::vector<int> weights;
  for (const auto& l : raw.sections["vars"]) {
    auto w = words(l);
    if (w.size() > 2) throw ParseError("expected 'name [weight]' in [vars], got '" + l + "'");
    spec.residue_vars.push_back(w[0]);
    if (w.size() == 2) weights.push_back(std::stoi(w[1]));
  }
  if (!weights.empty()) {
    if (weights.size() != spec.residue_vars.size())
      throw ParseError("either every variable has a weight or none does");
    spec.weights = weights;
  }

  BundleModel F;
  if (raw.sections.contains("bundle")) {
    F.roots.clear();
    for (const auto& l : raw.sections["bundle"])
      for (const auto& w : words(l)) F.roots.push_back(w);
  }
  SurfaceModel X = read_surface(raw.sections["surface"]);
  for (const auto& r : F.roots) spec.geometry_symbols.push_back({r, 1});
  for (const auto& s : X.symbols()) spec.geometry_symbols.push_back(s);
  spec.geometry_cap = X.dim;
  auto ctx = VariableContext::make(spec);

  Assembled a(ctx);
  a.surface = X;
  a.blocks.push_back({});
  for (std::size_t i = 0; i < ctx->num_residue(); ++i) a.blocks[0].push_back(i);
  a.monomial_power.assign(ctx->num_residue(), 0);
  a.symbol_copy.assign(ctx->size() - ctx->num_residue(), 0);

  MPoly num(ctx, Rational(1));
  for (const auto& l : raw.sections["numerator"]) {
    auto w = words(l);
    if (!w.empty() && w[0] == "chern") {
      if (w.size() < 2) throw ParseError("expected 'chern m'");
      std::vector<MPoly> offsets;
      std::vector<std::string> names;
      if (w.size() >= 3) {
        if (w[2].rfind("vars=", 0) != 0) throw ParseError("expected vars= in chern clause");
        names = split(w[2].substr(5), ',');
      } else {
        for (std::size_t i = 0; i < ctx->num_residue(); ++i) names.push_back((*ctx)[i].name);
      }
      for (const auto& n : names) offsets.push_back(MPoly::variable(ctx, n));
      auto roots = twisted_roots(F, ctx, offsets);
      num *= elementary_symmetric(std::stoi(w[1]), roots, ctx);
    } else {
      num *= parse_poly(ctx, l);
    }
  }
  a.problem.numerator = num;

  for (const auto& l : raw.sections["denominator"]) {
    auto [base, power] = base_and_power(l);
    MPoly p = parse_poly(ctx, base);
    LinearForm f = LinearForm::from_poly(p, power);
    if (f.z_coeffs().size() == 1 && f.constant_part().is_zero()) {
      a.monomial_power[f.z_coeffs()[0].first] += power;
      Rational c = f.z_coeffs()[0].second;
      for (int i = 0; i < power; ++i) a.problem.prefactor /= c;
    } else {
      a.problem.denominator.push_back(f);
    }
  }

  if (raw.sections.contains("segre")) {
    auto opt = options(raw.sections["segre"]);
    SurfaceModel Xs = X;
    if (opt.contains("order")) {
      int order = std::stoi(opt["order"]);
      if (order > X.dim) throw ParseError("Segre order exceeds the surface dimension");
      Xs.dim = order;
    }
    std::vector<std::string> names;
    if (opt.contains("vars")) {
      names = split(opt["vars"], ',');
    } else {
      for (std::size_t i = 0; i < ctx->num_residue(); ++i) names.push_back((*ctx)[i].name);
    }
    for (const auto& n : names) {
      std::size_t v = ctx->index(n);
      a.segre_vars.push_back(v);
      a.problem.laurent_prefactors.push_back(segre_factor(ctx, v, Xs));
    }
  }

  if (raw.sections.contains("prefactor")) {
    const auto& lines = raw.sections["prefactor"];
    if (lines.size() != 1) throw ParseError("[prefactor] takes one rational");
    a.problem.prefactor *= parse_rational(trim(lines[0]));
  }

  std::vector<Monomial::Entry> es;
  for (std::size_t v = 0; v < a.monomial_power.size(); ++v)
    if (a.monomial_power[v] != 0) es.push_back({static_cast<std::uint32_t>(v), -a.monomial_power[v]});
  a.problem.laurent_prefactors.insert(a.problem.laurent_prefactors.begin(),
                                      MPoly::monomial(ctx, Monomial::from_entries(std::move(es)), Rational(1)));
  return a;
}

Assembled load_problem_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_problem_config(os.str());
}

}  // namespace hilbres
