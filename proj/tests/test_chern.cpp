#include <doctest.h>

#include <random>

#include "hilbres/chern.hpp"
#include "oracles.hpp"

using namespace hilbres;

namespace {

ContextPtr surface_ctx(std::vector<std::string> z = {}) {
  ContextSpec s;
  s.residue_vars = std::move(z);
  s.geometry_symbols = {{"L", 1}, {"c1", 1}, {"c2", 2}};
  return VariableContext::make(s);
}

}  // namespace

TEST_SUITE("chern") {

TEST_CASE("twisted roots") {
  auto ctx = surface_ctx({"z10", "z01"});
  std::vector<MPoly> off{parse_poly(ctx, "z10"), parse_poly(ctx, "z01")};
  auto r = twisted_roots(BundleModel{}, ctx, off);
  REQUIRE(r.size() == 3);
  CHECK(r[1] == parse_poly(ctx, "L + z10"));
  CHECK(r[2] == parse_poly(ctx, "L + z01"));
  CHECK(twisted_roots(BundleModel{}, ctx, {}).size() == 1);

  ContextSpec s;
  s.residue_vars = {"z"};
  s.geometry_symbols = {{"t1", 1}, {"t2", 1}};
  auto c2 = VariableContext::make(s);
  std::vector<MPoly> z{parse_poly(c2, "z")};
  auto r2 = twisted_roots(BundleModel{{"t1", "t2"}}, c2, z);
  CHECK(r2[3] == parse_poly(c2, "t2 + z"));
}

TEST_CASE("elementary symmetric functions") {
  auto ctx = surface_ctx({"z10", "z01"});
  std::vector<MPoly> off{parse_poly(ctx, "z10"), parse_poly(ctx, "z01")};
  auto r = twisted_roots(BundleModel{}, ctx, off);
  CHECK(elementary_symmetric(2, r, ctx) == parse_poly(ctx, "3*L^2 + 2*L*(z10 + z01) + z10*z01"));
  CHECK(elementary_symmetric(0, r, ctx) == MPoly(ctx, Rational(1)));
  CHECK(elementary_symmetric(3, r, ctx) == oracle::esym_by_subsets(3, r, ctx));
}

TEST_CASE("generating function and symmetry") {
  ContextSpec s;
  s.residue_vars = {"t"};
  for (int i = 1; i <= 5; ++i) s.geometry_symbols.push_back({"x" + std::to_string(i), 1});
  auto ctx = VariableContext::make(s);
  std::mt19937 rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<MPoly> roots;
    for (int i = 1; i <= 5; ++i)
      roots.push_back(parse_poly(ctx, "x" + std::to_string(i)) +
                      parse_poly(ctx, "x" + std::to_string(1 + rng() % 5)) * Rational(trial));
    auto e = elementary_symmetric_all(5, roots, ctx);
    MPoly prod(ctx, Rational(1)), series(ctx);
    for (const auto& x : roots) prod *= MPoly(ctx, Rational(1)) + parse_poly(ctx, "t") * x;
    for (int m = 0; m <= 5; ++m) {
      series += e[m] * parse_poly(ctx, "t").pow(m);
      CHECK(e[m] == oracle::esym_by_subsets(m, roots, ctx));
    }
    CHECK(prod == series);
    auto shuffled = roots;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(elementary_symmetric_all(5, shuffled, ctx) == e);
  }
}

TEST_CASE("Segre factors") {
  auto ctx = surface_ctx({"z"});
  auto X = SurfaceModel::preset("generic-surface");
  CHECK(segre_factor(ctx, 0, X) == parse_poly(ctx, "1 + c1*z^-1 + (c1^2 - c2)*z^-2"));
  CHECK(segre_factor(ctx, 0, SurfaceModel::preset("point")) == MPoly(ctx, Rational(1)));
  auto curve = X;
  curve.dim = 1;
  CHECK(segre_factor(ctx, 0, curve) == parse_poly(ctx, "1 + c1*z^-1"));
}

TEST_CASE("inverse Segre mode inverts the total Chern class") {
  for (int n = 1; n <= 4; ++n) {
    auto X = SurfaceModel::generic(n).with_inverse_segre();
    ContextSpec s;
    s.geometry_symbols = X.symbols();
    s.geometry_cap = n;
    auto ctx = VariableContext::make(s);
    MPoly c(ctx, Rational(1)), seg(ctx, Rational(1));
    for (const auto& ci : X.chern) c += parse_poly(ctx, ci);
    for (const auto& si : X.segre) seg += parse_poly(ctx, si);
    CHECK(c * seg == MPoly(ctx, Rational(1)));
  }
}

TEST_CASE("renamed copies") {
  auto X = SurfaceModel::preset("generic-surface").renamed("2");
  CHECK(X.chern == std::vector<std::string>{"c1_2", "c2_2"});
  CHECK(X.segre[1].find("c2_2") != std::string::npos);
}

TEST_CASE("top degree selection") {
  auto ctx = surface_ctx();
  auto basis = top_degree_basis(ctx, 2);
  CHECK(basis == std::vector<std::string>{"L^2", "L*c1", "c1^2", "c2"});
  auto top = select_top_degree(parse_poly(ctx, "3*L^2 + 2*L*c1 + c2 + 7*L"), 2, basis);
  CHECK(top.at("L^2") == 3);
  CHECK(top.at("L*c1") == 2);
  CHECK(top.at("c1^2") == 0);
  CHECK(top.at("c2") == 1);
  CHECK(top.remainder == parse_poly(ctx, "7*L"));
  auto zero = select_top_degree(MPoly(ctx), 2, basis);
  for (const auto& [k, v] : zero.coeffs) CHECK(v == 0);
  auto s2 = select_top_degree(parse_poly(ctx, "c1^2 - c2"), 2, basis);
  CHECK(s2.at("c1^2") == 1);
  CHECK(s2.at("c2") == -1);
  CHECK(top_degree_basis(ctx, 0) == std::vector<std::string>{"1"});
}

TEST_CASE("Chern polynomials of a bundle") {
  auto ctx = surface_ctx({"z"});
  std::vector<MPoly> r{parse_poly(ctx, "L"), parse_poly(ctx, "L + z")};
  CHECK(ChernPolynomial{"c2^2"}.evaluate(r, ctx) == parse_poly(ctx, "(L^2 + L*z)^2"));
  CHECK(ChernPolynomial{"c1 + 2*c2"}.max_class() == 2);
  CHECK(ChernPolynomial::top(3).text == "c3");
}

TEST_CASE("P2 intersection numbers") {
  auto X = SurfaceModel::preset("P2");
  auto n = X.p2_numbers(4);
  CHECK(n.at("L^2") == 16);
  CHECK(n.at("L*c1") == -12);
  CHECK(n.at("c1^2") == 9);
  CHECK(n.at("c2") == 3);
  CHECK_THROWS(SurfaceModel::preset("generic-surface").p2_numbers(1));
  CHECK_THROWS(SurfaceModel::preset("no-such-surface"));
}

}  // TEST_SUITE
