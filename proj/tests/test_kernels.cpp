#include <doctest.h>

#include <random>

#include "hilbres/kernels.hpp"
#include "oracles.hpp"

using namespace hilbres;

TEST_SUITE("kernels") {

TEST_CASE("parallel product equals the serial reference") {
  ContextSpec s;
  s.residue_vars = {"z1", "z2", "z3"};
  s.geometry_symbols = {{"L", 1}, {"c1", 1}, {"c2", 2}};
  auto ctx = VariableContext::make(s);
  std::mt19937 rng(61);
  for (int t = 0; t < 8; ++t) {
    MPoly a = oracle::random_poly(rng, ctx, 80 + 20 * t, 4, true);
    MPoly b = oracle::random_poly(rng, ctx, 90, 4, true);
    MPoly ser = multiply_serial(a, b);
    MPoly par = multiply_parallel(a, b);
    CHECK(ser == par);
    CHECK(ser.to_string() == par.to_string());
  }
}

TEST_CASE("small products fall back and still agree") {
  ContextSpec s;
  s.residue_vars = {"z"};
  auto ctx = VariableContext::make(s);
  MPoly a = parse_poly(ctx, "z + 1"), b = parse_poly(ctx, "z - 1");
  CHECK(multiply_parallel(a, b) == parse_poly(ctx, "z^2 - 1"));
  CHECK(multiply(a, MPoly(ctx), Exec::parallel).is_zero());
}

TEST_CASE("capped products agree") {
  ContextSpec s;
  s.residue_vars = {"z1", "z2"};
  s.geometry_symbols = {{"L", 1}, {"c1", 1}};
  s.geometry_cap = 2;
  auto ctx = VariableContext::make(s);
  std::mt19937 rng(67);
  MPoly a = oracle::random_poly(rng, ctx, 150, 3, true);
  MPoly b = oracle::random_poly(rng, ctx, 150, 3, true);
  CHECK(multiply_serial(a, b) == multiply_parallel(a, b));
}

TEST_CASE("thread count") { CHECK(max_threads() >= 1); }

}  // TEST_SUITE
