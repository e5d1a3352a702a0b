#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slip/hilbert.hpp"
#include "slip/parse.hpp"

using namespace slip;

TEST_CASE("target Hilbert function") {
  auto p2 = make_projective(2);
  CHECK(h_target(*p2, 6, MultiDegree{3}) == 6);
  CHECK(h_target(*p2, 6, MultiDegree{1}) == 3);
  CHECK(h_target(*p2, 17, MultiDegree{0}) == 1);
  auto p1p1 = make_product_projective({1, 1});
  CHECK(h_target(*p1p1, 2, MultiDegree{0, 1}) == 2);
  CHECK_THROWS(h_target(*p2, 0, MultiDegree{1}));
}

TEST_CASE("quotient Hilbert function through the initial ideal") {
  auto p2 = make_projective(2);
  PolyParser p(p2);
  Ideal zero(p2, {});
  for (long k = 0; k <= 4; ++k)
    CHECK(hf_quotient(zero, MultiDegree{k}) == p2->dim_graded_piece(MultiDegree{k}));

  Ideal I(p2, {p.parse("a0^2 - a1*a2"), p.parse("a1^3")});
  for (long k = 0; k <= 6; ++k)
    CHECK(hf_quotient(I, MultiDegree{k}, MonomialOrder::lex({0, 1, 2})) ==
          hf_quotient(I, MultiDegree{k}, p2->default_order()));
}

TEST_CASE("window comparison against the target") {
  auto p2 = make_projective(2);
  PolyParser p(p2);
  Ideal unit(p2, {p.parse("1")});
  auto rep = hf_matches_target(unit, 1, DegreeBox::cube(1, 0, 2));
  CHECK(!rep.ok);
  REQUIRE(rep.first_failure);
  CHECK((*rep.first_failure)[0] == 0);
}

TEST_CASE("degree boxes iterate lexicographically") {
  DegreeBox box({0, 0}, {1, 2});
  auto ds = box.degrees();
  REQUIRE(ds.size() == 6);
  CHECK(ds.front() == MultiDegree{0, 0});
  CHECK(ds[1] == MultiDegree{0, 1});
  CHECK(ds.back() == MultiDegree{1, 2});
  CHECK_THROWS(DegreeBox({1, 0}, {0, 2}));
}

TEST_CASE("r random points stabilize at r") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coord(1, 19);

  // P^2: points as ideals of two independent linear forms
  auto p2 = make_projective(2);
  RingPtr r2 = p2;
  auto point_ideal_p2 = [&](long x, long y, long z) {
    // forms vanishing at (x:y:z)
    PolyParser p(r2);
    auto f1 = p.parse(std::to_string(y) + "*a0 - " + std::to_string(x) + "*a1");
    auto f2 = p.parse(std::to_string(z) + "*a1 - " + std::to_string(y) + "*a2");
    return Ideal(r2, {f1, f2});
  };
  for (int r = 1; r <= 4; ++r) {
    std::optional<Ideal> acc;
    for (int i = 0; i < r; ++i) {
      Ideal pt = point_ideal_p2(coord(rng), coord(rng), coord(rng));
      acc = acc ? intersect(*acc, pt) : pt;
    }
    for (long k = 3; k <= 5; ++k)
      CHECK(hf_quotient(*acc, MultiDegree{k}) == r);
  }

  // P^1 x P^1
  auto p1p1 = make_product_projective({1, 1});
  RingPtr r11 = p1p1;
  auto point_ideal_p1p1 = [&](long a, long b, long c, long d) {
    PolyParser p(r11);
    auto f1 = p.parse(std::to_string(b) + "*a0 - " + std::to_string(a) + "*a1");
    auto f2 = p.parse(std::to_string(d) + "*b0 - " + std::to_string(c) + "*b1");
    return Ideal(r11, {f1, f2});
  };
  for (int r = 1; r <= 4; ++r) {
    std::optional<Ideal> acc;
    for (int i = 0; i < r; ++i) {
      Ideal pt = point_ideal_p1p1(coord(rng), coord(rng), coord(rng), coord(rng));
      acc = acc ? intersect(*acc, pt) : pt;
    }
    for (long a = 2; a <= 4; ++a)
      for (long b = 2; b <= 4; ++b)
        CHECK(hf_quotient(*acc, MultiDegree{a, b}) == r);
  }
}
