#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hilbres/diagram.hpp"

using namespace hilbres;

namespace {

Diagram part(std::vector<int> p) { return Diagram::from_partition(p); }

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("lengths") {
  CHECK(Diagram::parse("(0,0)").lengths() == std::vector<int>{0, 0});
  CHECK(part({2, 1}).lengths() == std::vector<int>{1, 1});
  for (int s = 1; s <= 4; ++s) CHECK(part({2 * s, s}).lengths() == std::vector<int>{2 * s - 1, 1});
  CHECK_THROWS(Diagram(2).lengths());
}

TEST_CASE("French convention") {
  Diagram d = part({2, 1});
  CHECK(d.contains({1, 0}));
  CHECK(d.contains({0, 1}));
  CHECK_FALSE(d.contains({1, 1}));
  CHECK(d.partition() == std::vector<int>{2, 1});
  CHECK(Diagram::parse("(0,0) (1,0) (0,1)") == d);
  CHECK(Diagram::parse("(2,1)") == d);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Diagram::from_boxes(2, {{0, 0}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::from_boxes(2, {{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::from_boxes(2, {{0, -1}}), std::invalid_argument);
  CHECK_THROWS(Diagram::parse("(0,0) (1,0,0)"));
}

TEST_CASE("orient_well") {
  Diagram col = Diagram::from_boxes(2, {{0, 0}, {0, 1}, {0, 2}});
  Diagram row = Diagram::from_boxes(2, {{0, 0}, {1, 0}, {2, 0}});
  CHECK(orient_well(col) == row);
  CHECK(orient_well(row) == row);
  Diagram d3 = Diagram::from_boxes(3, {{0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(d3.lengths() == std::vector<int>{0, 2, 1});
  CHECK(orient_well(d3).lengths() == std::vector<int>{2, 1, 0});
}

TEST_CASE("orient_well is idempotent and keeps the size") {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    Diagram d = random_diagram(rng, 2 + t % 2, 1 + t % 7);
    Diagram o = orient_well(d);
    CHECK(orient_well(o) == o);
    CHECK(o.size() == d.size());
    auto r = o.lengths();
    CHECK(std::is_sorted(r.rbegin(), r.rend()));
  }
}

TEST_CASE("curvilinear sums") {
  for (int s = 1; s <= 5; ++s) {
    std::vector<Diagram> ones(s, part({1}));
    CHECK(curvilinear_sum(ones) == part({s}));
  }
  std::vector<Diagram> two{part({2, 1}), part({2, 1})};
  CHECK(curvilinear_sum(two) == part({4, 2}));
  std::vector<Diagram> mixed{part({3}), part({2, 1})};
  CHECK(curvilinear_sum(mixed) == part({5, 1}));
  std::vector<Diagram> bad{Diagram::parse("(1)"), Diagram::parse("(0,0,0)")};
  CHECK_THROWS(curvilinear_sum(bad));
}

TEST_CASE("curvilinear sum is commutative and associative") {
  std::mt19937 rng(29);
  for (int t = 0; t < 50; ++t) {
    int dim = 2 + t % 2;
    Diagram a = random_diagram(rng, dim, 1 + rng() % 5);
    Diagram b = random_diagram(rng, dim, 1 + rng() % 5);
    Diagram c = random_diagram(rng, dim, 1 + rng() % 5);
    std::vector<Diagram> ab{a, b}, ba{b, a};
    CHECK(curvilinear_sum(ab) == curvilinear_sum(ba));
    std::vector<Diagram> ab_c{curvilinear_sum(ab), c};
    std::vector<Diagram> bc{b, c};
    std::vector<Diagram> a_bc{a, curvilinear_sum(bc)};
    CHECK(curvilinear_sum(ab_c) == curvilinear_sum(a_bc));
    CHECK(curvilinear_sum(ab_c).size() == a.size() + b.size() + c.size());
  }
}

TEST_CASE("weight map") {
  CHECK(weight_map(std::vector<int>{1, 1, 1}) == std::vector<int>{1, 2, 3});
  CHECK(weight_map(std::vector<int>{2, 1}) == std::vector<int>{1, 1, 2});
  CHECK(weight_map(std::vector<int>{1, 2}) == std::vector<int>{1, 2, 2});
}

TEST_CASE("degree profile") {
  CHECK(part({2, 1}).degree_profile() == std::vector<int>{2});
  CHECK(part({3}).degree_profile() == std::vector<int>{1, 1});
  CHECK(part({3}).is_row());
  CHECK_FALSE(part({2, 1}).is_row());
}

}  // TEST_SUITE
