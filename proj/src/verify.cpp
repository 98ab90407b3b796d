#include <chrono>
#include <random>
#include <sstream>

#include "hilbres/assembler.hpp"
#include "hilbres/multidegree.hpp"

namespace hilbres {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string diff_report(const TopDegree& got, const std::vector<std::pair<std::string, Rational>>& want) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : want) {
    Rational g = got.at(k);
    if (g == v) continue;
    os << (first ? "" : ", ") << k << ": got " << to_string(g) << " want " << to_string(v)
       << " (delta " << to_string(g - v) << ")";
    first = false;
  }
  return os.str();
}

CriterionResult severi_check(int id, int r, const SurfaceModel& X,
                             const std::vector<std::pair<std::string, Rational>>& want) {
  auto t0 = Clock::now();
  CriterionResult res{id, "a" + std::to_string(r) + " nodal coefficient", false, ""};
  try {
    Evaluation ev = evaluate(assemble_severi(r, "1", X));
    std::string diff = diff_report(ev.top, want);
    res.passed = diff.empty() && ev.top.remainder.is_zero();
    res.detail = ev.top.to_string() + (diff.empty() ? "" : "; " + diff);
    if (!ev.top.remainder.is_zero()) res.detail += "; remainder " + ev.top.remainder.to_string();
  } catch (const std::exception& e) {
    res.detail = e.what();
  }
  std::ostringstream os;
  os.precision(3);
  os << "; " << seconds_since(t0) << " s";
  res.detail += os.str();
  return res;
}

CriterionResult bell_check() {
  CriterionResult res{3, "exponential transform", false, ""};
  ContextSpec spec;
  spec.geometry_symbols = {{"a1", 1}, {"a2", 2}, {"a3", 3}};
  auto ctx = VariableContext::make(spec);
  std::vector<MPoly> a{MPoly::variable(ctx, "a1"), MPoly::variable(ctx, "a2"),
                       MPoly::variable(ctx, "a3")};
  auto P = bell_transform<MPoly>(a, MPoly(ctx, Rational(1)));
  MPoly p2 = parse_poly(ctx, "a1^2 + a2");
  MPoly p3 = parse_poly(ctx, "a1^3 + 3*a2*a1 + a3");
  res.passed = P[1] == p2 && P[2] == p3;
  res.detail = "P2 = " + P[1].to_string() + ", P3 = " + P[2].to_string();
  return res;
}

CriterionResult p2_check() {
  CriterionResult res{4, "classical one-nodal count on P2", true, ""};
  SurfaceModel X = SurfaceModel::preset("P2");
  Evaluation ev = evaluate(assemble_severi(1, "1", X));
  for (int d = 3; d <= 6; ++d) {
    Rational n1 = p2_value(ev.top, X, d);
    Rational want = 3 * (d - 1) * (d - 1);
    res.detail += (d > 3 ? ", " : "") + std::string("d=") + std::to_string(d) + ": " + to_string(n1);
    if (n1 != want) {
      res.passed = false;
      res.detail += " (want " + to_string(want) + ")";
    }
  }
  return res;
}

MPoly random_monomial(std::mt19937& rng, const ContextPtr& ctx, int vars, int degree) {
  std::uniform_int_distribution<int> pick(0, vars - 1);
  MPoly m(ctx, Rational(1));
  for (int i = 0; i < degree; ++i) m *= MPoly::variable(ctx, pick(rng));
  return m;
}

CriterionResult grassmann_check(unsigned seed) {
  auto t0 = Clock::now();
  CriterionResult res{5, "Grassmannian localisation", true, ""};
  std::mt19937 rng(seed);
  int count = 0;
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
    auto ctx = grassmann_context(n, d);
    for (int trial = 0; trial < 20; ++trial) {
      MPoly alpha = random_monomial(rng, ctx, d, d * (n - d));
      MPoly lhs = iterated_residue(grassmann_residue_problem(ctx, n, d, alpha));
      MPoly rhs = grassmann_fixed_point_sum(ctx, n, d, alpha);
      ++count;
      if (lhs != rhs) {
        res.passed = false;
        res.detail = "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) +
                     ") alpha=" + alpha.to_string() + ": " + lhs.to_string() + " vs " +
                     rhs.to_string();
        return res;
      }
    }
  }
  std::ostringstream os;
  os.precision(3);
  os << count << " cases; " << seconds_since(t0) << " s";
  res.detail = os.str();
  return res;
}

CriterionResult orientation_check() {
  CriterionResult res{6, "residue orientation", true, ""};
  for (int k = 1; k <= 4; ++k) {
    ContextSpec spec;
    for (int i = 1; i <= k; ++i) spec.residue_vars.push_back("z" + std::to_string(i));
    auto ctx = VariableContext::make(spec);
    ResidueProblem p(ctx);
    for (int i = 0; i < k; ++i) p.denominator.push_back(LinearForm::from_poly(MPoly::variable(ctx, i)));
    MPoly v = iterated_residue(p);
    MPoly want(ctx, Rational(k % 2 ? -1 : 1));
    res.detail += (k > 1 ? ", " : "") + std::string("k=") + std::to_string(k) + ": " + v.to_string();
    if (v != want) res.passed = false;
  }
  return res;
}

CriterionResult multidegree_check(unsigned seed) {
  CriterionResult res{7, "multidegree axioms", true, ""};
  std::mt19937 rng(seed + 7);
  auto fail = [&](const std::string& why) {
    if (res.passed) res.detail = why;
    res.passed = false;
  };
  for (int trial = 0; trial < 25; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    ContextSpec spec;
    for (int i = 1; i <= n; ++i) spec.geometry_symbols.push_back({"e" + std::to_string(i), 1});
    auto ctx = VariableContext::make(spec);
    std::vector<MPoly> eta;
    for (int i = 0; i < n; ++i) eta.push_back(MPoly::variable(ctx, i));
    // Split the variables into disjoint supports.
    std::vector<int> owner(n);
    const int gens = std::uniform_int_distribution<int>(1, n)(rng);
    for (int i = 0; i < n; ++i) owner[i] = i < gens ? i : std::uniform_int_distribution<int>(0, gens - 1)(rng);
    std::vector<std::vector<int>> g(gens, std::vector<int>(n, 0));
    MPoly want(ctx, Rational(1));
    for (int j = 0; j < gens; ++j) {
      MPoly deg(ctx);
      for (int i = 0; i < n; ++i)
        if (owner[i] == j) {
          g[j][i] = std::uniform_int_distribution<int>(1, 3)(rng);
          deg += eta[i] * Rational(g[j][i]);
        }
      want *= deg;
    }
    MPoly got = multidegree(MonomialIdeal(n, g), eta);
    if (got != want) fail("complete intersection: " + got.to_string() + " vs " + want.to_string());
  }

  ContextSpec spec;
  spec.geometry_symbols = {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}};
  auto ctx = VariableContext::make(spec);
  std::vector<MPoly> w{MPoly::variable(ctx, "a"), MPoly::variable(ctx, "b"), MPoly::variable(ctx, "c"),
                       MPoly::variable(ctx, "d")};
  // (x1, x2) meet (x3, x4) = (x1 x3, x1 x4, x2 x3, x2 x4).
  MPoly inter = multidegree(MonomialIdeal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}), w);
  MPoly sum = multidegree(MonomialIdeal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), w) +
              multidegree(MonomialIdeal(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}), w);
  if (inter != sum) fail("additivity: " + inter.to_string() + " vs " + sum.to_string());

  std::span<const MPoly> w2(w.data(), 2);
  MPoly m2 = multidegree(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}), w2);
  if (m2 != parse_poly(ctx, "3*a*b")) fail("mdeg(m^2) = " + m2.to_string());

  MPoly pos = multidegree(MonomialIdeal(3, {{2, 1, 0}, {0, 2, 0}, {1, 0, 3}}), std::span<const MPoly>(w.data(), 3));
  for (auto& x : w) x = MPoly(ctx, Rational(1));
  Rational deg = pos.substitute(0, w[0]).substitute(1, w[0]).substitute(2, w[0]).constant_term();
  if (sgn(deg) <= 0) fail("positivity: degree " + to_string(deg));

  if (res.passed) res.detail = "25 complete intersections, additivity, mdeg(m^2) = " + m2.to_string();
  return res;
}

CriterionResult partition_check(unsigned seed) {
  CriterionResult res{8, "curvilinear sums", true, ""};
  auto fail = [&](const std::string& why) {
    if (res.passed) res.detail = why;
    res.passed = false;
  };
  const std::vector<int> one{1};
  for (int s = 1; s <= 6; ++s) {
    std::vector<Diagram> xs(s, Diagram::from_partition(one));
    std::vector<int> row{s};
    if (curvilinear_sum(xs) != Diagram::from_partition(row)) fail("s*(1) for s=" + std::to_string(s));
  }
  const std::vector<int> p21{2, 1}, p42{4, 2};
  std::vector<Diagram> two(2, Diagram::from_partition(p21));
  if (curvilinear_sum(two) != Diagram::from_partition(p42)) fail("2*(2,1) = " + curvilinear_sum(two).to_string());

  std::mt19937 rng(seed + 8);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 2 + trial % 2;
    auto size = [&] { return std::uniform_int_distribution<int>(1, 6)(rng); };
    Diagram a = random_diagram(rng, dim, size());
    Diagram b = random_diagram(rng, dim, size());
    Diagram c = random_diagram(rng, dim, size());
    auto sum2 = [](const Diagram& x, const Diagram& y) {
      std::vector<Diagram> v{x, y};
      return curvilinear_sum(v);
    };
    if (sum2(a, b) != sum2(b, a)) fail("commutativity on " + a.to_string() + " + " + b.to_string());
    Diagram l = sum2(sum2(a, b), c);
    Diagram r = sum2(a, sum2(b, c));
    if (l != r) fail("associativity on " + a.to_string() + ", " + b.to_string() + ", " + c.to_string());
    if (l.size() != a.size() + b.size() + c.size()) fail("box count");
  }
  if (res.passed) res.detail = "s*(1), 2*(2,1) = (4,2), 50 random triples";
  return res;
}

CriterionResult sieve_check() {
  CriterionResult res{9, "partition lattice sieve", true, ""};
  for (int s = 1; s <= 6; ++s) {
    Integer total = 0;
    for (const auto& beta : set_partitions(s)) total += sieve_coefficient(beta);
    res.detail += (s > 1 ? ", " : "") + std::string("s=") + std::to_string(s) + ": " + total.get_str();
    if (total != (s == 1 ? 1 : 0)) res.passed = false;
  }
  return res;
}

CriterionResult specialization_check() {
  CriterionResult res{10, "geometric subset vs geometric component", true, ""};
  BundleModel F;
  SurfaceModel X = SurfaceModel::preset("generic-surface");
  for (int k = 1; k <= 4; ++k) {
    GeometricSubsetSpec g;
    g.algebras.assign(k, AlgebraSpec::trivial());
    ChernPolynomial phi{"c" + std::to_string(std::min(k, 2))};
    auto geo = assemble_geometric(g, F, X, phi);
    auto gh = assemble_ghilb(k, F, X, phi);
    if (geo.size() != gh.size()) {
      res.passed = false;
      res.detail = "term counts differ at k=" + std::to_string(k);
      return res;
    }
    for (std::size_t i = 0; i < geo.size(); ++i) {
      const auto& a = *geo[i].integrand;
      const auto& b = *gh[i].integrand;
      bool same = geo[i].alpha == gh[i].alpha && a.blocks.size() == b.blocks.size() &&
                  a.monomial_power == b.monomial_power && a.segre_vars == b.segre_vars;
      for (std::size_t l = 0; same && l < a.blocks.size(); ++l)
        same = a.blocks[l].size() == b.blocks[l].size() &&
               block_denominator_signature(a, l) == block_denominator_signature(b, l);
      if (!same) {
        res.passed = false;
        res.detail = "k=" + std::to_string(k) + " term " + geo[i].alpha.to_string();
        return res;
      }
    }
  }
  res.detail = "k = 1..4, all partition terms";
  return res;
}

}  // namespace

std::vector<CriterionResult> verify_suite(const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(severi_check(1, 1, opts.surface,
                             {{"L^2", 3}, {"L*c1", 2}, {"c1^2", 0}, {"c2", 1}}));
  out.push_back(severi_check(2, 2, opts.surface,
                             {{"L^2", -42}, {"L*c1", -39}, {"c1^2", -6}, {"c2", -7}}));
  out.push_back(bell_check());
  out.push_back(p2_check());
  out.push_back(grassmann_check(opts.seed));
  out.push_back(orientation_check());
  out.push_back(multidegree_check(opts.seed));
  out.push_back(partition_check(opts.seed));
  out.push_back(sieve_check());
  out.push_back(specialization_check());
  return out;
}

}  // namespace hilbres
