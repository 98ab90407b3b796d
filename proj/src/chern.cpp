#include "hilbres/chern.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hilbres {

SurfaceModel SurfaceModel::generic(int n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  SurfaceModel X;
  X.name = "generic";
  X.dim = n;
  for (int i = 1; i <= n; ++i) X.chern.push_back("c" + std::to_string(i));
  return X.with_inverse_segre();
}

SurfaceModel SurfaceModel::preset(std::string_view name) {
  SurfaceModel X;
  X.dim = 2;
  X.chern = {"c1", "c2"};
  X.segre = {"c1", "c1^2 - c2"};
  if (name == "generic-surface") {
    X.name = "generic-surface";
  } else if (name == "P2") {
    X.name = "P2";
    X.projective_plane = true;
  } else if (name == "point") {
    X.name = "point";
    X.dim = 0;
    X.chern.clear();
    X.segre.clear();
  } else {
    throw std::invalid_argument("unknown surface preset '" + std::string(name) + "'");
  }
  return X;
}

std::vector<std::pair<std::string, int>> SurfaceModel::symbols() const {
  std::vector<std::pair<std::string, int>> out;
  for (std::size_t i = 0; i < chern.size(); ++i) out.push_back({chern[i], static_cast<int>(i) + 1});
  return out;
}

SurfaceModel SurfaceModel::with_inverse_segre() const {
  ContextSpec spec;
  spec.geometry_symbols = symbols();
  spec.geometry_cap = dim;
  auto ctx = VariableContext::make(spec);
  // s = 1 / (1 + c_1 + ... + c_n), truncated at degree n.
  MPoly c(ctx, Rational(1));
  for (const auto& name : chern) c += MPoly::variable(ctx, name);
  MPoly u = MPoly(ctx, Rational(1)) - c;
  MPoly s(ctx, Rational(1)), p(ctx, Rational(1));
  for (int i = 1; i <= dim; ++i) {
    p *= u;
    s += p;
  }
  SurfaceModel out = *this;
  out.segre.clear();
  for (int i = 1; i <= dim; ++i) out.segre.push_back(s.geometry_part(i).to_string());
  return out;
}

SurfaceModel SurfaceModel::renamed(const std::string& suffix) const {
  ContextSpec from, to;
  from.geometry_symbols = symbols();
  SurfaceModel out = *this;
  for (auto& c : out.chern) c += "_" + suffix;
  to.geometry_symbols = out.symbols();
  auto cf = VariableContext::make(from);
  auto ct = VariableContext::make(to);
  for (auto& s : out.segre) {
    MPoly p = parse_poly(cf, s);
    std::vector<MPoly::Term> ts(p.terms().begin(), p.terms().end());
    s = MPoly::from_terms(ct, std::move(ts)).to_string();
  }
  return out;
}

std::map<std::string, Rational> SurfaceModel::p2_numbers(int d) const {
  if (!projective_plane) throw std::invalid_argument(name + " has no numeric specialisation");
  const int c1 = convention == CanonicalConvention::canonical_class ? -3 : 3;
  return {{"L^2", Rational(d * d)}, {"L*c1", Rational(c1 * d)}, {"c1^2", Rational(9)},
          {"c2", Rational(3)}};
}

std::vector<MPoly> twisted_roots(const BundleModel& b, const ContextPtr& ctx,
                                 std::span<const MPoly> offsets) {
  std::vector<MPoly> out;
  for (const auto& r : b.roots) out.push_back(MPoly::variable(ctx, r));
  for (const auto& z : offsets)
    for (const auto& r : b.roots) out.push_back(MPoly::variable(ctx, r) + z.transfer(ctx));
  return out;
}

std::vector<MPoly> elementary_symmetric_all(int m, std::span<const MPoly> roots,
                                            const ContextPtr& ctx) {
  if (m < 0 || static_cast<std::size_t>(m) > roots.size())
    throw std::out_of_range("elementary symmetric degree out of range");
  std::vector<MPoly> e(m + 1, MPoly(ctx));
  e[0] = MPoly(ctx, Rational(1));
  for (const auto& r : roots) {
    MPoly rr = r.transfer(ctx);
    for (int j = m; j >= 1; --j) e[j] += rr * e[j - 1];
  }
  return e;
}

MPoly elementary_symmetric(int m, std::span<const MPoly> roots, const ContextPtr& ctx) {
  return elementary_symmetric_all(m, roots, ctx)[m];
}

MPoly segre_factor(const ContextPtr& ctx, std::size_t var, const SurfaceModel& X) {
  if (!ctx->is_residue(var)) throw std::invalid_argument("Segre factor needs a residue variable");
  MPoly out(ctx, Rational(1));
  for (std::size_t i = 0; i < X.segre.size() && static_cast<int>(i) < X.dim; ++i) {
    const int e = static_cast<int>(i) + 1;
    out += parse_poly(ctx, X.segre[i]) * MPoly::variable(ctx, var, -e);
  }
  return out;
}

namespace {

ContextPtr class_context(int max_class) {
  ContextSpec spec;
  for (int m = 1; m <= max_class; ++m) spec.geometry_symbols.push_back({"c" + std::to_string(m), m});
  return VariableContext::make(spec);
}

int class_index(const std::string& text) {
  int best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'c' || (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) ||
                                     text[i - 1] == '_')))
      continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i + 1) best = std::max(best, std::stoi(text.substr(i + 1, j - i - 1)));
  }
  return best;
}

}  // namespace

int ChernPolynomial::max_class() const { return class_index(text); }

MPoly ChernPolynomial::evaluate(std::span<const MPoly> roots, const ContextPtr& ctx) const {
  const int top = max_class();
  auto cctx = class_context(top);
  MPoly phi = parse_poly(cctx, text);
  if (static_cast<std::size_t>(top) > roots.size())
    throw std::invalid_argument("Chern class c" + std::to_string(top) + " exceeds the rank " +
                                std::to_string(roots.size()));
  auto e = elementary_symmetric_all(top, roots, ctx);
  MPoly out(ctx);
  for (const auto& t : phi.terms()) {
    MPoly term(ctx, t.coeff);
    for (const auto& en : t.mono.entries()) term *= e[en.var + 1].pow(en.exp);
    out += term;
  }
  return out;
}

Rational TopDegree::at(std::string_view key) const {
  for (const auto& [k, v] : coeffs)
    if (k == key) return v;
  throw std::out_of_range("no basis monomial '" + std::string(key) + "'");
}

std::string TopDegree::to_string() const {
  std::string s;
  for (const auto& [k, v] : coeffs) {
    if (!s.empty()) s += ", ";
    s += k + ": " + hilbres::to_string(v);
  }
  return "{" + s + "}";
}

std::vector<std::string> top_degree_basis(const ContextPtr& ctx, int n) {
  std::vector<std::size_t> geo;
  for (std::size_t i = ctx->num_residue(); i < ctx->size(); ++i) geo.push_back(i);
  std::vector<Monomial> monos;
  std::vector<Monomial::Entry> cur;
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (left == 0) {
      monos.push_back(Monomial::from_entries(cur));
      return;
    }
    if (pos == geo.size()) return;
    const int deg = (*ctx)[geo[pos]].degree;
    for (int e = left / deg; e >= 0; --e) {
      if (e > 0) cur.push_back({static_cast<std::uint32_t>(geo[pos]), e});
      self(self, pos + 1, left - e * deg);
      if (e > 0) cur.pop_back();
    }
  };
  rec(rec, 0, n);
  std::sort(monos.begin(), monos.end(), CanonicalLess{});
  std::vector<std::string> out;
  for (const auto& m : monos) out.push_back(m.is_one() ? "1" : to_string(*ctx, m));
  return out;
}

TopDegree select_top_degree(const MPoly& p, int n, std::span<const std::string> basis) {
  if (p.has_residue_variables())
    throw std::invalid_argument("degree selection needs a polynomial without residue variables");
  const auto& ctx = *p.context();
  TopDegree out{{}, MPoly(p.context())};
  for (const auto& b : basis) out.coeffs.push_back({b, Rational(0)});
  std::vector<MPoly::Term> rest;
  for (const auto& t : p.terms()) {
    if (geometry_degree(ctx, t.mono) != n) {
      rest.push_back(t);
      continue;
    }
    std::string key = t.mono.is_one() ? "1" : to_string(ctx, t.mono);
    auto it = std::find_if(out.coeffs.begin(), out.coeffs.end(),
                           [&](const auto& kv) { return kv.first == key; });
    if (it == out.coeffs.end())
      throw std::invalid_argument("monomial " + key + " is not in the degree-" + std::to_string(n) +
                                  " basis");
    it->second += t.coeff;
  }
  out.remainder = MPoly::from_terms(p.context(), std::move(rest));
  return out;
}

}  // namespace hilbres
