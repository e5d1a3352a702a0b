#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slip/constructions.hpp"
#include "slip/parse.hpp"
#include "slip/registry.hpp"
#include "slip/ringmaps.hpp"

using namespace slip;

TEST_CASE("preimage under the identity map") {
  auto p2 = make_projective(2);
  PolyParser p(p2);
  Ideal I(p2, {p.parse("a0*a1 - a2^2"), p.parse("a0^3")});
  auto pre = preimage(identity_map(p2), I);
  CHECK(ideal_equal(pre, I));
}

TEST_CASE("preimage of the blow-down fiber ideal") {
  auto bl = hirzebruch_blowdown_lift();
  RingPtr hr = bl.map.target;
  RingPtr p2 = bl.map.source;
  PolyParser ph(hr), pp(p2);
  PreimageReport rep;
  Ideal pre = preimage(bl.map, make_ideal(hr, {ph.parse("a3^2"), ph.parse("a2")}), &rep, true);
  CHECK(ideal_equal(pre, make_ideal(p2, {pp.parse("b0^2"), pp.parse("b2")})));
  CHECK(rep.saturation_rechecked);
  CHECK(rep.saturation_ok);
  for (const auto& [deg, ok] : rep.surjectivity) CHECK(ok);
}

TEST_CASE("preimage matches the dense degreewise kernel") {
  auto bl = hirzebruch_blowdown_lift();
  RingPtr hr = bl.map.target;
  RingPtr p2 = bl.map.source;
  PolyParser ph(hr);
  Ideal I = make_ideal(hr, {ph.parse("a1*a4"), ph.parse("a2^2")});
  Ideal pre = preimage(bl.map, I);
  auto apply = [&](const Polynomial& f) { return bl.map.apply(f); };
  auto push = [&](const MultiDegree& d) { return bl.map.push_degree(d); };
  for (long d = 0; d <= 4; ++d) {
    GradedFrame fs = GradedFrame::make(p2, MultiDegree{d}, p2->default_order());
    CHECK(graded_piece_dim(pre.generators(), fs) ==
          oracle::preimage_piece_dim(I.generators(), p2, hr, apply, push, MultiDegree{d}));
  }
}

TEST_CASE("preimage is inclusion monotone and preserves squarefree restriction") {
  auto x = make_product_projective({1, 1});
  auto inc = factor_inclusion(x, {0});
  RingPtr full = x;
  PolyParser p(full);
  Ideal small = make_ideal(full, {p.parse("a0*b0")});
  Ideal big = make_ideal(full, {p.parse("a0*b0"), p.parse("a1*b1")});
  CHECK(ideal_contains(preimage(inc, big), preimage(inc, small)));

  // squarefree monomial (radical) restriction stays squarefree
  Ideal rad = make_ideal(full, {p.parse("a0*b0"), p.parse("a0*b1"), p.parse("a1*a0")});
  Ideal pre = preimage(inc, rad);
  for (const auto& g : pre.generators()) {
    REQUIRE(g.is_single_term());
    for (int e : g.terms()[0].mono) CHECK(e <= 1);
  }
}

TEST_CASE("restriction of the big worked example") {
  auto x = make_product_projective({3, 3, 3});
  Ideal I = fixtures::explicit_ideal(x);
  CoxPtr sub;
  Ideal iprime = restrict_to_factors(I, {0}, &sub);
  RingPtr sr = sub;
  PolyParser p(sr);
  CHECK(ideal_equal(iprime,
                    make_ideal(sr, parse_polys(sr, {"a2^2", "a1*a2", "a0*a2", "a1^2",
                                                    "a0*a1", "a0^2"}))));
  CoxPtr sub2;
  Ideal j = restrict_to_factors(I, {0, 1}, &sub2);
  RingPtr sr2 = sub2;
  CHECK(ideal_equal(j, make_ideal(sr2, parse_polys(sr2, fixtures::explicit_projection_strings()))));
  // the other two single-factor projections, as listed
  CoxPtr subb;
  Ideal i2 = restrict_to_factors(I, {1}, &subb);
  RingPtr srb = subb;
  CHECK(ideal_equal(i2, make_ideal(srb, parse_polys(srb, {"a2*a3", "a1*a3", "a0*a3", "a2^2",
                                                          "a1*a2", "a0*a2", "a1^3"}))));
  CoxPtr sub3;
  Ideal i3 = restrict_to_factors(I, {2}, &sub3);
  RingPtr sr3 = sub3;
  CHECK(ideal_equal(i3, make_ideal(sr3, parse_polys(sr3, {"a2*a3", "a1*a3", "a2^2", "a1*a2",
                                                          "a0*a2", "a1^2", "a0^2*a3"}))));
}

TEST_CASE("restriction round-trips the product lift") {
  auto x = make_projective(1);
  auto y = make_projective(1);
  PolyParser p(x);
  Ideal ix(x, {p.parse("a0^2")});
  auto res = product_lift(ix, y, 2, MonomialOrder::lex({0, 1}), MonomialOrder::lex({0, 1}),
                          MultiDegree{4}, MultiDegree{4});
  Ideal back = restrict_to_factors(res.harvested, {0});
  CHECK(ideal_equal(back, ix));
}

TEST_CASE("segre maps") {
  auto c = construct_p1p1_ideal(4);
  auto map = segre_map(c.ring, MultiDegree{1, 4}, 4, c.order);
  CHECK(map.source->nvars() == 10);
  CHECK(map.images.front().str() == "a0*b0^4");
  CHECK(map.images.back().str() == "a1*b1^4");

  // t_{ijk} -> a_i b_j g_k on a threefold product
  auto abc = make_product_projective({1, 2, 1});
  auto m3 = segre_map(abc, MultiDegree{1, 1, 1}, 2, abc->default_order());
  CHECK(m3.source->nvars() == 2 * 3 * 2);
  RingPtr ar = abc;
  for (const auto& img : m3.images) {
    REQUIRE(img.is_monomial());
    CHECK(total_degree(img.terms()[0].mono) == 3);
  }

  auto p1 = make_projective(1);
  auto idlike = segre_map(p1, MultiDegree{1}, 2, p1->default_order());
  CHECK(idlike.source->nvars() == 2);
  CHECK_THROWS(segre_map(p1, MultiDegree{1}, 3, p1->default_order()));  // dim S_u < r
}

TEST_CASE("embedding criterion reports") {
  auto p1p1 = make_product_projective({1, 1});
  auto good = check_embedding_conditions(p1p1, MultiDegree{1, 4}, 4);
  CHECK(good.all_hold());

  // On products every nonzero effective degree passes the radical condition:
  // the block zero loci absorb V((S_u)).  A genuine failure needs the
  // Hirzebruch surface, where the fiber degree misses two of the B(X) pairs.
  auto proj = check_embedding_conditions(p1p1, MultiDegree{1, 0}, 4);
  CHECK(proj.all_hold());
  auto h1 = make_hirzebruch(1);
  auto fib = check_embedding_conditions(h1, MultiDegree{0, 1}, 2);
  CHECK(!fib.irrelevant_in_radical);

  auto p3 = make_projective(3);
  auto triv = check_embedding_conditions(p3, MultiDegree{1}, 4);
  CHECK(triv.all_hold());
}

TEST_CASE("lift conditions") {
  auto bl = hirzebruch_blowdown_lift();
  CHECK(check_lift_B_condition(bl.map));

  auto x = make_product_projective({1, 1});
  CHECK(check_lift_B_condition(factor_inclusion(x, {0})));

  // all images zero: the image ideal cannot reach B(target)
  GradedRingMap zero;
  zero.source = make_projective(1);
  zero.target = x;
  RingPtr full = x;
  zero.images = {Polynomial(full), Polynomial(full)};
  zero.degree_map = {{1}, {1}};
  zero.validate();
  CHECK(!check_lift_B_condition(zero));
}

TEST_CASE("toric lift identity") {
  auto bl = hirzebruch_blowdown_lift();
  CHECK(toric_lift_identity_check(bl.map, bl.data));

  GradedRingMap swapped = bl.map;
  std::swap(swapped.images[0], swapped.images[1]);
  CHECK(!toric_lift_identity_check(swapped, bl.data));

  // identity on P^2 with the standard fan
  auto p2 = make_projective(2);
  ToricLiftData data;
  data.source_rays = {{1, 0}, {0, 1}, {-1, -1}};
  data.target_rays = data.source_rays;
  data.delta = {{1, 0}, {0, 1}};
  CHECK(toric_lift_identity_check(identity_map(p2), data));

  // non-monomial images are rejected
  GradedRingMap badmap = identity_map(p2);
  RingPtr r2 = p2;
  PolyParser p(r2);
  badmap.images[0] = p.parse("a0 + a1");
  CHECK_THROWS(toric_lift_identity_check(badmap, data));
}

TEST_CASE("graded map validation") {
  auto x = make_product_projective({1, 1});
  RingPtr full = x;
  PolyParser p(full);
  GradedRingMap bad;
  bad.source = make_projective(1);
  bad.target = x;
  bad.images = {p.parse("a0"), p.parse("b0")};  // degrees (1,0) and (0,1) disagree
  bad.degree_map = {{1}, {0}};
  CHECK_THROWS(bad.validate());
}
