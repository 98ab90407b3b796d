#include "hilbres/multidegree.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace hilbres {

namespace {

bool divides(const MonomialIdeal::Exponents& a, const MonomialIdeal::Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Exponents> generators) : n_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("ideal needs at least one variable");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != num_vars)
      throw std::invalid_argument("generator has the wrong number of exponents");
    if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
      throw std::invalid_argument("negative exponent in generator");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      redundant = j != i && divides(generators[j], generators[i]);
    if (!redundant) gens_.push_back(generators[i]);
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Exponents& g) {
    return std::all_of(g.begin(), g.end(), [](int e) { return e == 0; });
  });
}

std::vector<int> MonomialIdeal::support(std::size_t g) const {
  std::vector<int> s;
  for (int i = 0; i < n_; ++i)
    if (gens_.at(g)[i] > 0) s.push_back(i);
  return s;
}

MonomialIdeal MonomialIdeal::parse(std::span<const std::string> var_names, std::string_view text) {
  ContextSpec spec;
  for (const auto& v : var_names) spec.geometry_symbols.push_back({v, 1});
  auto ctx = VariableContext::make(spec);
  std::vector<Exponents> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    MPoly p = parse_poly(ctx, text.substr(start, comma - start));
    if (p.size() != 1) throw ParseError("ideal generators must be single monomials");
    Exponents e(var_names.size(), 0);
    for (const auto& en : p.terms()[0].mono.entries()) e[en.var] = en.exp;
    gens.push_back(std::move(e));
    start = comma + 1;
  }
  return MonomialIdeal(static_cast<int>(var_names.size()), std::move(gens));
}

namespace {

std::vector<unsigned> support_masks(const MonomialIdeal& I) {
  if (I.num_vars() > 24) throw std::invalid_argument("too many variables for subset search");
  if (I.is_unit()) throw std::invalid_argument("unit ideal has no multidegree");
  std::vector<unsigned> masks;
  for (std::size_t g = 0; g < I.generators().size(); ++g) {
    unsigned m = 0;
    for (int v : I.support(g)) m |= 1U << v;
    masks.push_back(m);
  }
  return masks;
}

bool hits_all(unsigned S, const std::vector<unsigned>& masks) {
  return std::all_of(masks.begin(), masks.end(), [S](unsigned m) { return (m & S) != 0; });
}

}  // namespace

int codimension(const MonomialIdeal& I) {
  auto masks = support_masks(I);
  int best = I.num_vars();
  for (unsigned S = 0; S < (1U << I.num_vars()); ++S)
    if (hits_all(S, masks)) best = std::min(best, std::popcount(S));
  return best;
}

Integer local_multiplicity(const MonomialIdeal& I, std::span<const int> S) {
  // Variables outside S are units: restrict each generator to S.
  std::vector<MonomialIdeal::Exponents> gens;
  for (const auto& g : I.generators()) {
    MonomialIdeal::Exponents r;
    for (int v : S) r.push_back(g.at(v));
    gens.push_back(std::move(r));
  }
  const std::size_t k = S.size();
  if (k == 0) return 1;
  std::vector<int> bound(k, -1);
  for (const auto& g : gens) {
    int nz = -1, count = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (g[i] > 0) nz = static_cast<int>(i), ++count;
    if (count == 1 && (bound[nz] < 0 || g[nz] < bound[nz])) bound[nz] = g[nz];
  }
  for (int b : bound)
    if (b < 0) throw std::invalid_argument("ideal is not primary to the chosen prime");

  // Enumerate the exponent box and count monomials outside the ideal.
  Integer count = 0;
  std::vector<int> e(k, 0);
  while (true) {
    bool inside = std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return divides(g, e); });
    if (!inside) ++count;
    std::size_t i = 0;
    while (i < k && ++e[i] == bound[i]) e[i++] = 0;
    if (i == k) break;
  }
  return count;
}

MPoly multidegree(const MonomialIdeal& I, std::span<const MPoly> weights) {
  if (static_cast<int>(weights.size()) != I.num_vars())
    throw std::invalid_argument("need one weight per variable");
  auto masks = support_masks(I);
  const int c = codimension(I);
  MPoly out(weights[0].context());
  for (unsigned S = 0; S < (1U << I.num_vars()); ++S) {
    if (std::popcount(S) != c || !hits_all(S, masks)) continue;
    std::vector<int> vars;
    MPoly term(out.context(), Rational(1));
    for (int v = 0; v < I.num_vars(); ++v)
      if (S >> v & 1U) {
        vars.push_back(v);
        term *= weights[v];
      }
    out += term * Rational(local_multiplicity(I, vars));
  }
  return out;
}

std::optional<std::vector<int>> nakajima_dual(std::vector<int> d) {
  if (d.empty()) throw std::invalid_argument("empty Morin order list");
  std::sort(d.begin(), d.end());
  if (d.front() < 1) throw std::invalid_argument("Morin orders must be positive");
  if (std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); })) {
    std::vector<int> z;
    for (int i = 1; i < static_cast<int>(d.size()); ++i) z.push_back(i);
    return z;
  }
  static const std::map<std::vector<int>, std::optional<std::vector<int>>> table{
      {{1, 2}, std::vector<int>{2}},
      {{1, 3}, std::vector<int>{3}},
      {{1, 1, 2}, std::vector<int>{1, 2}},
      {{1, 4}, std::vector<int>{4}},
      {{2, 3}, std::vector<int>{1}},
      {{1, 2, 2}, std::vector<int>{1, 2}},
      {{1, 1, 3}, std::vector<int>{1, 3}},
      {{1, 1, 1, 2}, std::vector<int>{1, 2, 3}},
      {{1, 5}, std::vector<int>{1}},
      {{2, 4}, std::nullopt},
  };
  auto it = table.find(d);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<MPoly> nakajima_dual(std::vector<int> d, const ContextPtr& ctx,
                                   std::span<const std::size_t> vars) {
  auto z = nakajima_dual(std::move(d));
  if (!z) return std::nullopt;
  MPoly out(ctx, Rational(1));
  for (int i : *z) {
    if (i < 1 || static_cast<std::size_t>(i) > vars.size())
      throw std::invalid_argument("dual needs more residue variables than supplied");
    out *= MPoly::variable(ctx, vars[i - 1]);
  }
  return out;
}

}  // namespace hilbres
