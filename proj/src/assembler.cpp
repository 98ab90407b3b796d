#include "hilbres/assembler.hpp"

#include <algorithm>
#include <map>

#include "hilbres/multidegree.hpp"

namespace hilbres {

// ---------------------------------------------------------------------------
// Algebras

AlgebraSpec AlgebraSpec::trivial(int dim) {
  AlgebraSpec a;
  a.k = 1;
  std::vector<Diagram::Box> box{Diagram::Box(dim, 0)};
  a.diagram = Diagram::from_boxes(dim, box);
  return a;
}

AlgebraSpec AlgebraSpec::morin(int d, int dim) {
  if (d < 1) throw std::invalid_argument("Morin order must be positive");
  std::vector<Diagram::Box> boxes;
  for (int i = 0; i < d; ++i) {
    Diagram::Box b(dim, 0);
    b[0] = i;
    boxes.push_back(std::move(b));
  }
  return from_diagram(Diagram::from_boxes(dim, std::move(boxes)));
}

AlgebraSpec AlgebraSpec::from_diagram(const Diagram& d) {
  AlgebraSpec a;
  a.k = static_cast<int>(d.size());
  a.filtration = d.degree_profile();
  a.diagram = d;
  return a;
}

void AlgebraSpec::validate() const {
  if (k < 1) throw std::invalid_argument("algebra dimension must be positive");
  int sum = 0;
  for (int x : filtration) {
    if (x < 0) throw std::invalid_argument("negative filtration entry");
    sum += x;
  }
  if (sum != k - 1)
    throw std::invalid_argument("filtration sums to " + std::to_string(sum) + ", expected " +
                                std::to_string(k - 1));
  if (diagram && static_cast<int>(diagram->size()) != k)
    throw std::invalid_argument("diagram size does not match the algebra dimension");
}

namespace {

// ---------------------------------------------------------------------------
// Context layout

std::string copy_name(const std::string& base, int copy, int copies) {
  return copies == 1 ? base : base + "_" + std::to_string(copy + 1);
}

struct Layout {
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<int> block_copy;
};

ContextPtr build_context(const Layout& lay, const BundleModel& F, const SurfaceModel& X, int copies,
                         std::vector<int>& symbol_copy) {
  ContextSpec spec;
  spec.residue_vars = lay.names;
  if (std::is_sorted(lay.weights.begin(), lay.weights.end()) &&
      lay.weights.size() == lay.names.size())
    spec.weights = lay.weights;
  symbol_copy.clear();
  for (int c = 0; c < copies; ++c) {
    for (const auto& r : F.roots) {
      spec.geometry_symbols.push_back({copy_name(r, c, copies), 1});
      symbol_copy.push_back(c);
    }
    for (const auto& [name, deg] : X.symbols()) {
      spec.geometry_symbols.push_back({copy_name(name, c, copies), deg});
      symbol_copy.push_back(c);
    }
  }
  spec.geometry_cap = X.dim * copies;
  return VariableContext::make(std::move(spec));
}

BundleModel bundle_copy(const BundleModel& F, int c, int copies) {
  BundleModel out;
  out.roots.clear();
  for (const auto& r : F.roots) out.roots.push_back(copy_name(r, c, copies));
  return out;
}

SurfaceModel surface_copy(const SurfaceModel& X, int c, int copies) {
  return copies == 1 ? X : X.renamed(std::to_string(c + 1));
}

/// Polynomial written in z1..zm, moved onto the block's residue variables.
MPoly block_poly(const ContextPtr& ctx, std::span<const std::size_t> vars, const std::string& text) {
  ContextSpec spec;
  for (std::size_t i = 0; i < vars.size(); ++i) spec.residue_vars.push_back("z" + std::to_string(i + 1));
  for (std::size_t i = ctx->num_residue(); i < ctx->size(); ++i)
    spec.geometry_symbols.push_back({(*ctx)[i].name, (*ctx)[i].degree});
  auto local = VariableContext::make(spec);
  MPoly p = parse_poly(local, text);
  std::vector<MPoly::Term> ts;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Entry> es;
    for (const auto& e : t.mono.entries()) {
      std::uint32_t v = e.var < vars.size()
                            ? static_cast<std::uint32_t>(vars[e.var])
                            : static_cast<std::uint32_t>(e.var - vars.size() + ctx->num_residue());
      es.push_back({v, e.exp});
    }
    ts.push_back({Monomial::from_entries(std::move(es)), t.coeff});
  }
  return MPoly::from_terms(ctx, std::move(ts));
}

/// Factors of one block with weights w: numerator pair product over i != j
/// with w(i) <= w(j), denominators z_i + z_j - z_m over i <= j with
/// w(i) + w(j) <= w(m), monomial z^n and Segre factors.
void add_block(Assembled& a, std::span<const std::size_t> vars, std::span<const int> w,
               const std::string& epd, int power, const SurfaceModel& X) {
  const auto& ctx = a.problem.context;
  auto z = [&](std::size_t i) { return MPoly::variable(ctx, vars[i]); };
  MPoly num = a.problem.numerator;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (i != j && w[i] <= w[j]) num *= z(i) - z(j);
  num *= block_poly(ctx, vars, epd);
  a.problem.numerator = num;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i; j < vars.size(); ++j)
      for (std::size_t m = 0; m < vars.size(); ++m)
        if (w[i] + w[j] <= w[m])
          a.problem.denominator.push_back(LinearForm::from_poly(z(i) + z(j) - z(m)));
  for (std::size_t v : vars) {
    a.monomial_power[v] += power;
    a.segre_vars.push_back(v);
    a.problem.laurent_prefactors.push_back(segre_factor(ctx, v, X));
  }
}

void divide_by_block_dual(Assembled& a, std::span<const std::size_t> vars, const std::string& dual) {
  MPoly d = block_poly(a.problem.context, vars, dual);
  if (d.size() != 1) throw std::invalid_argument("block dual '" + dual + "' is not a monomial");
  const auto& t = d.terms()[0];
  for (const auto& e : t.mono.entries()) {
    if (!a.problem.context->is_residue(e.var))
      throw std::invalid_argument("block dual '" + dual + "' involves geometry symbols");
    a.monomial_power[e.var] += e.exp;
  }
  a.problem.prefactor /= t.coeff;
}

void finish(Assembled& a) {
  const auto& ctx = a.problem.context;
  std::vector<Monomial::Entry> es;
  for (std::size_t v = 0; v < a.monomial_power.size(); ++v)
    if (a.monomial_power[v] != 0)
      es.push_back({static_cast<std::uint32_t>(v), -a.monomial_power[v]});
  a.problem.laurent_prefactors.insert(
      a.problem.laurent_prefactors.begin(),
      MPoly::monomial(ctx, Monomial::from_entries(std::move(es)), Rational(1)));
}

MPoly chern_numerator(const ChernPolynomial& phi, const BundleModel& F, const ContextPtr& ctx,
                      const std::vector<std::vector<std::size_t>>& blocks,
                      const std::vector<int>& block_copy, int copies) {
  std::vector<MPoly> roots;
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    std::vector<MPoly> offsets;
    for (std::size_t v : blocks[l]) offsets.push_back(MPoly::variable(ctx, v));
    auto r = twisted_roots(bundle_copy(F, block_copy[l], copies), ctx, offsets);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  return phi.evaluate(roots, ctx);
}

std::string default_names(int i) { return "z" + std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------------------
// Assemblers

Assembled assemble_punctual(const AlgebraSpec& alg, const BundleModel& F, const SurfaceModel& X,
                            const ChernPolynomial& phi, const PunctualOptions& opts) {
  alg.validate();
  Layout lay;
  const int m = alg.k - 1;
  lay.weights = alg.weights();
  for (int i = 1; i <= m; ++i)
    lay.names.push_back(opts.names.empty() ? default_names(i) : opts.names.at(i - 1));
  if (static_cast<int>(lay.names.size()) != m) throw std::invalid_argument("wrong number of names");
  lay.blocks.push_back({});
  for (int i = 0; i < m; ++i) lay.blocks[0].push_back(i);
  lay.block_copy = {0};

  std::vector<int> symbol_copy;
  auto ctx = build_context(lay, F, X, 1, symbol_copy);
  Assembled a(ctx);
  a.surface = X;
  a.blocks = lay.blocks;
  a.symbol_copy = symbol_copy;
  a.monomial_power.assign(m, 0);
  a.problem.prefactor = opts.prefactor;
  a.problem.numerator = chern_numerator(phi, F, ctx, lay.blocks, lay.block_copy, 1);
  add_block(a, lay.blocks[0], lay.weights, alg.epd, X.dim, X);
  finish(a);
  return a;
}

namespace {

struct BlockAlgebra {
  int k;
  std::vector<int> weights;
  std::string epd;
  std::optional<std::string> dual;
};

BlockAlgebra resolve_block(const GeometricSubsetSpec& g, std::span<const int> members) {
  BlockAlgebra b;
  if (members.size() == 1) {
    const auto& a = g.algebras.at(members[0] - 1);
    a.validate();
    b.k = a.k;
    b.weights = a.weights();
    b.epd = a.epd;
    b.dual = "1";
    return b;
  }
  std::vector<Diagram> ds;
  bool morin = true;
  std::vector<int> orders;
  for (int i : members) {
    const auto& a = g.algebras.at(i - 1);
    a.validate();
    if (!a.diagram)
      throw std::invalid_argument("algebra " + std::to_string(i) +
                                  " has no diagram, its sum algebra is unresolved");
    ds.push_back(*a.diagram);
    morin = morin && a.diagram->is_row();
    orders.push_back(a.k);
  }
  Diagram sum = curvilinear_sum(ds);
  AlgebraSpec s = AlgebraSpec::from_diagram(sum);
  b.k = s.k;
  b.weights = s.weights();
  b.epd = g.block_epd ? g.block_epd(members) : "1";
  if (g.block_dual) {
    b.dual = g.block_dual(members);
  } else if (morin) {
    auto z = nakajima_dual(orders);
    if (z) {
      std::string t = "1";
      for (int i : *z) t += "*z" + std::to_string(i);
      b.dual = t;
    }
  }
  return b;
}

std::string members_text(std::span<const int> m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

}  // namespace

std::vector<GeometricTerm> assemble_geometric(const GeometricSubsetSpec& g, const BundleModel& F,
                                              const SurfaceModel& X, const ChernPolynomial& phi) {
  if (g.algebras.empty()) throw std::invalid_argument("geometric subset needs algebras");
  const int s = static_cast<int>(g.algebras.size());
  std::vector<GeometricTerm> out;
  for (auto& alpha : set_partitions(s)) {
    GeometricTerm term{alpha, std::nullopt, ""};
    const int t = static_cast<int>(alpha.size());
    std::vector<BlockAlgebra> blocks;
    for (const auto& members : alpha.blocks) {
      blocks.push_back(resolve_block(g, members));
      if (!blocks.back().dual) {
        term.note = "dual of block " + members_text(members) + " is unknown";
        break;
      }
    }
    if (!term.note.empty()) {
      out.push_back(std::move(term));
      continue;
    }

    Layout lay;
    for (int l = 0; l < t; ++l) {
      lay.blocks.push_back({});
      lay.block_copy.push_back(l);
      for (int i = 1; i < blocks[l].k; ++i) {
        lay.blocks.back().push_back(lay.names.size());
        lay.names.push_back(t == 1 ? default_names(i)
                                   : default_names(i) + "_" + std::to_string(l + 1));
        lay.weights.push_back(blocks[l].weights[i - 1]);
      }
    }
    std::vector<int> symbol_copy;
    auto ctx = build_context(lay, F, X, t, symbol_copy);
    Assembled a(ctx);
    a.surface = X;
    a.copies = t;
    a.blocks = lay.blocks;
    a.symbol_copy = symbol_copy;
    a.monomial_power.assign(lay.names.size(), 0);
    a.problem.numerator = chern_numerator(phi, F, ctx, lay.blocks, lay.block_copy, t);
    for (int l = 0; l < t; ++l) {
      add_block(a, a.blocks[l], blocks[l].weights, blocks[l].epd, X.dim, surface_copy(X, l, t));
      divide_by_block_dual(a, a.blocks[l], *blocks[l].dual);
    }
    finish(a);
    term.integrand = std::move(a);
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<GeometricTerm> assemble_ghilb(int k, const BundleModel& F, const SurfaceModel& X,
                                          const ChernPolynomial& phi, const QPolynomials& q) {
  if (k < 1) throw std::invalid_argument("ghilb needs k >= 1");
  std::vector<GeometricTerm> out;
  for (auto& alpha : set_partitions(k)) {
    const int t = static_cast<int>(alpha.size());
    Layout lay;
    for (int l = 0; l < t; ++l) {
      lay.blocks.push_back({});
      lay.block_copy.push_back(l);
      const int m = static_cast<int>(alpha.blocks[l].size());
      for (int i = 1; i < m; ++i) {
        lay.blocks.back().push_back(lay.names.size());
        lay.names.push_back(t == 1 ? default_names(i)
                                   : default_names(i) + "_" + std::to_string(l + 1));
        lay.weights.push_back(i);
      }
    }
    std::vector<int> symbol_copy;
    auto ctx = build_context(lay, F, X, t, symbol_copy);
    Assembled a(ctx);
    a.surface = X;
    a.copies = t;
    a.blocks = lay.blocks;
    a.symbol_copy = symbol_copy;
    a.monomial_power.assign(lay.names.size(), 0);
    a.problem.numerator = chern_numerator(phi, F, ctx, lay.blocks, lay.block_copy, t);
    for (int l = 0; l < t; ++l) {
      const int m = static_cast<int>(alpha.blocks[l].size());
      std::vector<int> w;
      for (int i = 1; i < m; ++i) w.push_back(i);
      add_block(a, a.blocks[l], w, q ? q(m - 1) : "1", X.dim + 1, surface_copy(X, l, t));
      if ((m - 1) % 2 == 1) a.problem.prefactor = -a.problem.prefactor;
    }
    finish(a);
    out.push_back({alpha, std::move(a), ""});
  }
  return out;
}

namespace {

std::string box_name(int a, int b) {
  return a < 10 ? "z" + std::to_string(a) + std::to_string(b)
                : "z" + std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace

Assembled assemble_severi(int r, const std::string& epd, const SurfaceModel& X) {
  if (r < 1) throw std::invalid_argument("severi needs r >= 1");
  BundleModel F;
  if (r == 1) {
    // Filtration (2) on m/(x^3, y, ...): one weight class holding both boxes.
    AlgebraSpec a;
    a.k = 3;
    a.filtration = {2};
    a.epd = epd;
    PunctualOptions opts;
    opts.prefactor = Rational(1, 2);
    opts.names = {"z10", "z01"};
    return assemble_punctual(a, F, X, ChernPolynomial::top(2), opts);
  }

  Layout lay;
  for (int a = 1; a <= 2 * r - 1; ++a) {
    lay.names.push_back(box_name(a, 0));
    lay.weights.push_back(a);
  }
  for (int b = 0; b <= r - 1; ++b) {
    lay.names.push_back(box_name(b, 1));
    lay.weights.push_back(b + 2 * r);
  }
  lay.blocks.push_back({});
  for (std::size_t i = 0; i < lay.names.size(); ++i) lay.blocks[0].push_back(i);
  lay.block_copy = {0};

  std::vector<int> symbol_copy;
  auto ctx = build_context(lay, F, X, 1, symbol_copy);
  Assembled out(ctx);
  out.surface = X;
  out.blocks = lay.blocks;
  out.symbol_copy = symbol_copy;
  out.monomial_power.assign(lay.names.size(), 2);
  auto z = [&](int a, int b) { return MPoly::variable(ctx, box_name(a, b)); };
  auto form = [&](const MPoly& p) { out.problem.denominator.push_back(LinearForm::from_poly(p)); };

  MPoly num = chern_numerator(ChernPolynomial::top(2 * r), F, ctx, lay.blocks, lay.block_copy, 1);
  const std::size_t nv = lay.names.size();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      num *= MPoly::variable(ctx, i) - MPoly::variable(ctx, j);

  if (r == 2) {
    out.problem.prefactor = Rational(1, 6);
    form(z(1, 0) * Rational(2) - z(2, 0));
    form(z(1, 0) + z(2, 0) - z(3, 0));
    form(z(1, 0) * Rational(2) - z(3, 0));
    form(z(1, 0) + z(0, 1) - z(3, 0));
    form(z(1, 0) + z(0, 1) - z(1, 1));
    form(z(1, 0) * Rational(2) - z(1, 1));
    out.monomial_power[0] += 1;
    num *= block_poly(ctx, lay.blocks[0], epd);
  } else {
    for (int a = 1; a <= 2 * r - 1; ++a)
      for (int b = a; b <= 2 * r - 1; ++b)
        for (int c = a + b; c <= 2 * r - 1; ++c) form(z(a, 0) + z(b, 0) - z(c, 0));
    for (int a = 1; a <= r - 1; ++a)
      for (int b = 0; b <= r - 1; ++b)
        for (int c = a + b; c <= r - 1; ++c) form(z(a, 0) + z(b, 1) - z(c, 1));
    for (int a = 1; a <= r - 1; ++a) out.monomial_power[ctx->index(box_name(a, 0))] += 1;
    num *= block_poly(ctx, lay.blocks[0], epd);
    out.warnings.push_back("conventions for r >= 3 are uncalibrated; prefactor left at 1");
  }
  out.problem.numerator = num;
  for (std::size_t v = 0; v < nv; ++v) {
    out.segre_vars.push_back(v);
    out.problem.laurent_prefactors.push_back(segre_factor(ctx, v, X));
  }
  finish(out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Evaluation evaluate(const Assembled& a, const ResidueOptions& opts) {
  Evaluation ev{iterated_residue(a.problem, opts), {{}, MPoly(a.problem.context)}, a.warnings};
  const auto& ctx = a.problem.context;
  const int n = a.surface.dim;
  if (a.copies == 1) {
    ev.top = select_top_degree(ev.residue, n, top_degree_basis(ctx, n));
  } else {
    // Keep monomials of degree exactly n on every copy of X.
    std::vector<MPoly::Term> rest;
    const std::size_t base = ctx->num_residue();
    for (const auto& t : ev.residue.terms()) {
      std::vector<int> deg(a.copies, 0);
      for (const auto& e : t.mono.entries())
        deg[a.symbol_copy[e.var - base]] += e.exp * (*ctx)[e.var].degree;
      if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == n; }))
        ev.top.coeffs.push_back({to_string(*ctx, t.mono), t.coeff});
      else
        rest.push_back(t);
    }
    ev.top.remainder = MPoly::from_terms(ctx, std::move(rest));
  }
  if (!ev.top.remainder.is_zero())
    ev.warnings.push_back("off-top-degree remainder: " + ev.top.remainder.to_string());
  return ev;
}

std::vector<std::optional<Evaluation>> evaluate_terms(const std::vector<GeometricTerm>& terms,
                                                      const ResidueOptions& opts) {
  std::vector<std::optional<Evaluation>> out(terms.size());
  std::vector<std::string> errors(terms.size());
  const long n = static_cast<long>(terms.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    if (!terms[i].integrand) continue;
    try {
      ResidueOptions o = opts;
      o.exec = Exec::serial;
      out[i] = evaluate(*terms[i].integrand, o);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (long i = 0; i < n; ++i)
    if (!errors[i].empty())
      throw std::runtime_error("term " + terms[i].alpha.to_string() + ": " + errors[i]);
  return out;
}

Rational p2_value(const TopDegree& top, const SurfaceModel& X, int d) {
  auto numbers = X.p2_numbers(d);
  Rational v = 0;
  for (const auto& [k, c] : top.coeffs) {
    auto it = numbers.find(k);
    if (it == numbers.end()) throw std::invalid_argument("no P2 value for " + k);
    v += c * it->second;
  }
  return v;
}

std::vector<std::string> block_denominator_signature(const Assembled& a, std::size_t block) {
  const auto& vars = a.blocks.at(block);
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < vars.size(); ++i) local[vars[i]] = i + 1;
  std::vector<std::string> out;
  for (const auto& f : a.problem.denominator) {
    if (!local.contains(f.z_coeffs().front().first)) continue;
    std::string s;
    for (const auto& [v, c] : f.z_coeffs()) {
      if (!local.contains(v)) throw std::logic_error("denominator form spans several blocks");
      s += (sgn(c) < 0 ? "-" : "+") + to_string(abs(c)) + "*z" + std::to_string(local[v]);
    }
    if (!f.constant_part().is_zero()) s += "+(" + f.constant_part().to_string() + ")";
    if (f.multiplicity() != 1) s += "^" + std::to_string(f.multiplicity());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hilbres
