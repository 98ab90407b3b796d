#include <doctest.h>

#include <numeric>
#include <random>

#include "hilbres/multidegree.hpp"
#include "oracles.hpp"

using namespace hilbres;

namespace {

struct Weights {
  ContextPtr ctx;
  std::vector<MPoly> eta;
};

Weights weights(int n) {
  ContextSpec s;
  for (int i = 1; i <= n; ++i) s.geometry_symbols.push_back({"e" + std::to_string(i), 1});
  Weights w{VariableContext::make(s), {}};
  for (int i = 1; i <= n; ++i) w.eta.push_back(MPoly::variable(w.ctx, "e" + std::to_string(i)));
  return w;
}

const std::vector<std::string> xy{"x", "y"};

}  // namespace

TEST_SUITE("multidegree") {

TEST_CASE("codimension") {
  CHECK(codimension(MonomialIdeal::parse(xy, "x, y")) == 2);
  CHECK(codimension(MonomialIdeal::parse(xy, "x^2")) == 1);
  CHECK(codimension(MonomialIdeal::parse(xy, "x^2, x*y, y^2")) == 2);
  CHECK_THROWS(codimension(MonomialIdeal::parse(xy, "1")));
}

TEST_CASE("desk multidegrees") {
  auto w = weights(2);
  CHECK(multidegree(MonomialIdeal::parse(xy, "x^3"), w.eta) == parse_poly(w.ctx, "3*e1"));
  CHECK(multidegree(MonomialIdeal::parse(xy, "x^2, y"), w.eta) == parse_poly(w.ctx, "2*e1*e2"));
  CHECK(multidegree(MonomialIdeal::parse(xy, "x^2, x*y, y^2"), w.eta) == parse_poly(w.ctx, "3*e1*e2"));
  CHECK(multidegree(MonomialIdeal::parse(xy, "x*y"), w.eta) == parse_poly(w.ctx, "e1 + e2"));
}

TEST_CASE("generators are minimised") {
  auto I = MonomialIdeal::parse(xy, "x^2, x^3*y, x*y^2, y^5");
  CHECK(I.generators().size() == 3);
  CHECK_THROWS_AS(MonomialIdeal(2, {{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialIdeal(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("complete intersections factor") {
  std::mt19937 rng(41);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto w = weights(n);
    std::vector<int> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    // split a subset of the variables into groups; each group carries one generator
    int used = 1 + static_cast<int>(rng() % n);
    std::vector<MonomialIdeal::Exponents> gens;
    MPoly expected(w.ctx, Rational(1));
    for (int i = 0; i < used;) {
      int len = 1 + static_cast<int>(rng() % (used - i));
      MonomialIdeal::Exponents g(n, 0);
      MPoly deg(w.ctx);
      for (int j = i; j < i + len; ++j) {
        g[vars[j]] = 1 + static_cast<int>(rng() % 3);
        deg += w.eta[vars[j]] * Rational(g[vars[j]]);
      }
      gens.push_back(g);
      expected *= deg;
      i += len;
    }
    MonomialIdeal I(n, gens);
    CHECK(codimension(I) == static_cast<int>(gens.size()));
    CHECK(multidegree(I, w.eta) == expected);
  }
}

TEST_CASE("additivity over components") {
  auto w = weights(4);
  std::vector<std::string> v{"x1", "x2", "x3", "x4"};
  auto I = MonomialIdeal::parse(v, "x1*x3, x1*x4, x2*x3, x2*x4");
  CHECK(multidegree(I, w.eta) == parse_poly(w.ctx, "e1*e2 + e3*e4"));
}

TEST_CASE("positivity and symmetry") {
  std::mt19937 rng(43);
  auto w = weights(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<MonomialIdeal::Exponents> gens;
    for (int g = 0; g < 3; ++g) {
      MonomialIdeal::Exponents e(3);
      for (auto& x : e) x = static_cast<int>(rng() % 3);
      if (std::accumulate(e.begin(), e.end(), 0) == 0) e[g] = 1;
      gens.push_back(e);
    }
    MonomialIdeal I(3, gens);
    MPoly m = multidegree(I, w.eta);
    for (const auto& term : m.terms()) CHECK(term.coeff > 0);
    // swap variables 0 and 1 in the ideal and in the weights
    auto swapped = gens;
    for (auto& e : swapped) std::swap(e[0], e[1]);
    std::vector<MPoly> eta{w.eta[1], w.eta[0], w.eta[2]};
    CHECK(multidegree(MonomialIdeal(3, swapped), eta) == m);
  }
}

TEST_CASE("local multiplicity counts standard monomials") {
  std::mt19937 rng(47);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + t % 2;
    std::vector<MonomialIdeal::Exponents> gens;
    for (int i = 0; i < n; ++i) {
      MonomialIdeal::Exponents e(n, 0);
      e[i] = 1 + static_cast<int>(rng() % 4);
      gens.push_back(e);
    }
    for (int g = 0; g < 3; ++g) {
      MonomialIdeal::Exponents e(n);
      for (auto& x : e) x = static_cast<int>(rng() % 3);
      if (std::accumulate(e.begin(), e.end(), 0) > 0) gens.push_back(e);
    }
    MonomialIdeal I(n, gens);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(local_multiplicity(I, all) == oracle::standard_monomial_count(n, gens));
  }
}

TEST_CASE("Nakajima duals") {
  CHECK(nakajima_dual({1, 1}) == std::vector<int>{1});
  CHECK(nakajima_dual({1, 1, 2}) == std::vector<int>{1, 2});
  CHECK(nakajima_dual({2, 1, 1}) == std::vector<int>{1, 2});
  CHECK_FALSE(nakajima_dual({2, 4}).has_value());
  CHECK(nakajima_dual({3, 3, 3}) == std::vector<int>{1, 2});
  CHECK(nakajima_dual({1, 5}) == std::vector<int>{1});
}

TEST_CASE("Nakajima dual as a polynomial") {
  ContextSpec s;
  s.residue_vars = {"u", "v", "w"};
  auto ctx = VariableContext::make(s);
  std::vector<std::size_t> vars{1, 2};
  CHECK(nakajima_dual({1, 1, 2}, ctx, vars) == parse_poly(ctx, "v*w"));
}

}  // TEST_SUITE
