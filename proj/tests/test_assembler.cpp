#include <doctest.h>

#include <set>

#include "hilbres/assembler.hpp"
#include "hilbres/config.hpp"

using namespace hilbres;

namespace {

const SurfaceModel kSurface = SurfaceModel::preset("generic-surface");

// Pair-sum denominators z_i + z_j - z_m with i <= j and w(i) + w(j) <= w(m),
// written the way block_denominator_signature writes them.
std::vector<std::string> expected_pair_sums(const std::vector<int>& w) {
  std::vector<std::string> out;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        if (m == i || m == j || w[i] + w[j] > w[m]) continue;
        std::string s = i == j ? "+2*z" + std::to_string(i + 1)
                               : "+1*z" + std::to_string(i + 1) + "+1*z" + std::to_string(j + 1);
        out.push_back(s + "-1*z" + std::to_string(m + 1));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t residue_count(const Assembled& a) { return a.problem.context->num_residue(); }

}  // namespace

TEST_SUITE("assembler") {

TEST_CASE("one-nodal problem is the two-box punctual problem") {
  Assembled a = assemble_severi(1);
  REQUIRE(residue_count(a) == 2);
  const auto& ctx = a.problem.context;
  CHECK((*ctx)[0].name == "z10");
  CHECK((*ctx)[1].name == "z01");
  // numerator agrees with (z10 - z01)^2 c2(L, L+z10, L+z01) up to sign
  MPoly e2 = parse_poly(ctx, "3*L^2 + 2*L*(z10 + z01) + z10*z01");
  MPoly sq = parse_poly(ctx, "(z10 - z01)^2") * e2;
  CHECK((a.problem.numerator == sq || a.problem.numerator == -sq));
  CHECK(a.problem.prefactor == Rational(1, 2));
  CHECK(a.monomial_power == std::vector<int>{2, 2});
  CHECK(a.segre_vars.size() == 2);
  CHECK(a.problem.denominator.empty());
}

TEST_CASE("one-nodal coefficient") {
  Evaluation ev = evaluate(assemble_severi(1));
  CHECK(ev.top.at("L^2") == 3);
  CHECK(ev.top.at("L*c1") == 2);
  CHECK(ev.top.at("c1^2") == 0);
  CHECK(ev.top.at("c2") == 1);
  CHECK(ev.top.remainder.is_zero());
  CHECK(ev.warnings.empty());
}

TEST_CASE("one-nodal count on P2 is 3(d-1)^2") {
  auto X = SurfaceModel::preset("P2");
  Evaluation ev = evaluate(assemble_severi(1, "1", X));
  for (int d = 1; d <= 9; ++d) CHECK(p2_value(ev.top, X, d) == 3 * (d - 1) * (d - 1));
}

TEST_CASE("two-nodal problem shape") {
  Assembled a = assemble_severi(2);
  CHECK(residue_count(a) == 5);
  CHECK(a.problem.denominator.size() == 6);
  CHECK(a.problem.prefactor == Rational(1, 6));
  CHECK(a.monomial_power == std::vector<int>{3, 2, 2, 2, 2});
  CHECK(a.segre_vars.size() == 5);
}

TEST_CASE("r >= 3 carries a calibration warning") {
  Assembled a = assemble_severi(3);
  CHECK(residue_count(a) == 8);
  CHECK_FALSE(a.warnings.empty());
  CHECK_THROWS(assemble_severi(0));
}

TEST_CASE("zero numerator evaluates to zero") {
  Assembled a = assemble_severi(1);
  a.problem.numerator = MPoly(a.problem.context);
  Evaluation ev = evaluate(a);
  for (const auto& [k, v] : ev.top.coeffs) CHECK(v == 0);
}

TEST_CASE("punctual pair-sum factors follow the weights") {
  BundleModel F;
  SUBCASE("k = 2 has none") {
    Assembled a = assemble_punctual(AlgebraSpec::morin(2), F, kSurface, ChernPolynomial::top(2));
    CHECK(residue_count(a) == 1);
    CHECK(a.problem.denominator.empty());
  }
  SUBCASE("k = 4, d = (1,1,1)") {
    Assembled a = assemble_punctual(AlgebraSpec::morin(4), F, kSurface, ChernPolynomial::top(4));
    auto sig = block_denominator_signature(a, 0);
    CHECK(sig == expected_pair_sums({1, 2, 3}));
    CHECK(sig == std::vector<std::string>{"+1*z1+1*z2-1*z3", "+2*z1-1*z2", "+2*z1-1*z3"});
  }
  SUBCASE("k = 5, d = (2,2)") {
    AlgebraSpec alg;
    alg.k = 5;
    alg.filtration = {2, 2};
    Assembled a = assemble_punctual(alg, F, kSurface, ChernPolynomial::top(4));
    CHECK(block_denominator_signature(a, 0) == expected_pair_sums({1, 1, 2, 2}));
  }
}

TEST_CASE("algebra validation") {
  AlgebraSpec bad;
  bad.k = 4;
  bad.filtration = {1, 1};
  CHECK_THROWS(bad.validate());
  CHECK_NOTHROW(AlgebraSpec::morin(5).validate());
  auto d = AlgebraSpec::from_diagram(Diagram::from_partition(std::vector<int>{2, 1}));
  CHECK(d.k == 3);
  CHECK(d.filtration == std::vector<int>{2});
}

TEST_CASE("geometric subsets with two trivial algebras") {
  GeometricSubsetSpec g;
  g.algebras = {AlgebraSpec::trivial(), AlgebraSpec::trivial()};
  auto terms = assemble_geometric(g, BundleModel{}, kSurface, ChernPolynomial{"c2^2"});
  REQUIRE(terms.size() == 2);
  REQUIRE(terms[0].integrand.has_value());
  REQUIRE(terms[1].integrand.has_value());
  const Assembled& merged = *terms[0].integrand;
  const Assembled& discrete = *terms[1].integrand;
  CHECK(terms[0].alpha.size() == 1);
  CHECK(terms[1].alpha.is_discrete());
  CHECK(merged.copies == 1);
  CHECK(residue_count(merged) == 1);
  CHECK(discrete.copies == 2);
  CHECK(residue_count(discrete) == 0);
}

TEST_CASE("single algebra reduces to the punctual problem") {
  GeometricSubsetSpec g;
  g.algebras = {AlgebraSpec::morin(3)};
  BundleModel F;
  auto terms = assemble_geometric(g, F, kSurface, ChernPolynomial::top(3));
  REQUIRE(terms.size() == 1);
  Evaluation a = evaluate(*terms[0].integrand);
  Evaluation b = evaluate(assemble_punctual(AlgebraSpec::morin(3), F, kSurface, ChernPolynomial::top(3)));
  CHECK(a.residue.to_string() == b.residue.to_string());
}

TEST_CASE("unknown block duals are reported, not invented") {
  GeometricSubsetSpec g;
  g.algebras = {AlgebraSpec::morin(3), AlgebraSpec::morin(5)};
  auto terms = assemble_geometric(g, BundleModel{}, kSurface, ChernPolynomial{"1"});
  REQUIRE(terms.size() == 2);
  CHECK_FALSE(terms[0].integrand.has_value());
  CHECK_FALSE(terms[0].note.empty());
  CHECK(terms[1].integrand.has_value());
}

TEST_CASE("geometric component desk cases") {
  BundleModel F;
  auto one = assemble_ghilb(1, F, kSurface, ChernPolynomial{"c1^2"});
  REQUIRE(one.size() == 1);
  CHECK(residue_count(*one[0].integrand) == 0);
  CHECK(evaluate(*one[0].integrand).top.at("L^2") == 1);

  auto two = assemble_ghilb(2, F, kSurface, ChernPolynomial{"c2^2"});
  REQUIRE(two.size() == 2);
  const Assembled& m = *two[0].integrand;
  CHECK(residue_count(m) == 1);
  CHECK(m.monomial_power == std::vector<int>{3});

  auto three = assemble_ghilb(3, F, kSurface, ChernPolynomial{"c3"});
  CHECK(three.size() == 5);
  CHECK(block_denominator_signature(*three[0].integrand, 0) == std::vector<std::string>{"+2*z1-1*z2"});
}

TEST_CASE("trivial geometric subsets specialise to the geometric component") {
  BundleModel F;
  for (int k = 1; k <= 4; ++k) {
    GeometricSubsetSpec g;
    g.algebras.assign(k, AlgebraSpec::trivial());
    auto geo = assemble_geometric(g, F, kSurface, ChernPolynomial{"1"});
    auto gh = assemble_ghilb(k, F, kSurface, ChernPolynomial{"1"});
    REQUIRE(geo.size() == gh.size());
    for (std::size_t t = 0; t < geo.size(); ++t) {
      CHECK(geo[t].alpha == gh[t].alpha);
      REQUIRE(geo[t].integrand.has_value());
      REQUIRE(gh[t].integrand.has_value());
      const Assembled& a = *geo[t].integrand;
      const Assembled& b = *gh[t].integrand;
      CHECK(residue_count(a) == residue_count(b));
      CHECK(a.blocks.size() == b.blocks.size());
      CHECK(a.segre_vars.size() == b.segre_vars.size());
      CHECK(a.monomial_power == b.monomial_power);
      for (std::size_t l = 0; l < a.blocks.size(); ++l)
        CHECK(block_denominator_signature(a, l) == block_denominator_signature(b, l));
      // dimension bookkeeping: one variable per non-unit basis element of each block
      std::size_t expect = 0;
      for (const auto& blk : geo[t].alpha.blocks) expect += blk.size() - 1;
      CHECK(residue_count(a) == expect);
    }
  }
}

TEST_CASE("copies of X carry their own symbols") {
  auto terms = assemble_ghilb(2, BundleModel{}, kSurface, ChernPolynomial{"c2^2"});
  const Assembled& d = *terms[1].integrand;
  CHECK(d.copies == 2);
  std::set<int> owners(d.symbol_copy.begin(), d.symbol_copy.end());
  CHECK(owners == std::set<int>{0, 1});
  // only monomials of degree two on each copy survive
  Evaluation ev = evaluate(d);
  REQUIRE(ev.top.coeffs.size() == 1);
  CHECK(ev.top.coeffs[0].first == "L_1^2*L_2^2");
  CHECK(ev.top.remainder.is_zero());
}

TEST_CASE("term evaluation keeps order and agrees with serial evaluation") {
  auto terms = assemble_ghilb(3, BundleModel{}, kSurface, ChernPolynomial{"c3^2"});
  auto evs = evaluate_terms(terms);
  REQUIRE(evs.size() == terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    REQUIRE(evs[t].has_value());
    CHECK(evs[t]->residue == evaluate(*terms[t].integrand).residue);
  }
}

TEST_CASE("problem file reproduces the one-nodal coefficient") {
  const char* text = R"(
# one-nodal curves
[vars]
z10 1
z01 1
[bundle] L
[surface] generic-surface
[numerator]
-(z10 - z01)^2
chern 2
[denominator]
z10^2
z01^2
[segre] order=2 vars=z10,z01
[prefactor] 1/2
)";
  Evaluation a = evaluate(parse_problem_config(text));
  Evaluation b = evaluate(assemble_severi(1));
  CHECK(a.top.to_string() == b.top.to_string());
}

TEST_CASE("verification suite") {
  auto res = verify_suite();
  REQUIRE(res.size() == 10);
  for (const auto& c : res)
    if (c.id != 2) CHECK_MESSAGE(c.passed, c.detail);
}

TEST_CASE("perturbed Segre classes make the a1 check fail with a delta") {
  VerifyOptions o;
  o.surface.segre = {"c1", "c1^2"};
  auto res = verify_suite(o);
  CHECK_FALSE(res[0].passed);
  CHECK(res[0].detail.find("delta") != std::string::npos);
}

}  // TEST_SUITE
