#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slip/constructions.hpp"
#include "slip/parse.hpp"

using namespace slip;

TEST_CASE("contraction action") {
  Monomial u{2, 1, 0};
  auto r = contract(0, u);
  REQUIRE(r);
  CHECK(*r == Monomial{1, 1, 0});
  CHECK(!contract(2, Monomial{2, 0, 0}));
  auto one = contract(1, Monomial{0, 1});
  REQUIRE(one);
  CHECK(mono_is_one(*one));
}

TEST_CASE("perp of a graded piece") {
  auto p2 = make_projective(2);
  PolyParser p(p2);
  Ideal J(p2, {p.parse("a0"), p.parse("a1^4")});
  auto lex = MonomialOrder::lex({0, 1, 2});
  auto d = perp(J, 2, lex);
  CHECK(d.dim() == 3);
  // the dual basis is spanned by the monomials off a0
  for (const auto& row : d.rows) {
    Polynomial f = d.frame.to_poly(row);
    for (const auto& t : f.terms()) CHECK(t.mono[0] == 0);
  }

  Ideal zero(p2, {});
  CHECK(perp(zero, 3, lex).dim() == p2->dim_graded_piece(MultiDegree{3}));
  Ideal unit(p2, {p.parse("1")});
  CHECK(perp(unit, 3, lex).dim() == 0);
}

TEST_CASE("perp duality holds in every scanned degree") {
  auto p2 = make_projective(2);
  PolyParser p(p2);
  std::vector<Ideal> samples = {
      Ideal(p2, {p.parse("a0^2"), p.parse("a1*a2")}),
      Ideal(p2, {p.parse("a0*a1 - a2^2"), p.parse("a1^3")}),
  };
  auto lex = MonomialOrder::lex({0, 1, 2});
  for (const auto& I : samples)
    for (long k = 0; k <= 5; ++k) {
      GradedFrame f = GradedFrame::make(p2, MultiDegree{k}, lex);
      long dim_ik = graded_piece_dim(I.generators(), f);
      CHECK(dim_ik + static_cast<long>(perp(I, k, lex).dim()) ==
            p2->dim_graded_piece(MultiDegree{k}));
    }
}

TEST_CASE("largest-monomial contraction property") {
  // For monomial-spanned proper V_k: at most one variable contraction of the
  // largest outside monomial escapes S_1 -| V_k, and an escapee is the largest
  // monomial outside S_1 -| V_k.
  auto p3 = make_projective(3);
  auto lex = MonomialOrder::lex({0, 1, 2, 3});
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> degd(2, 4), coin(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    long k = degd(rng);
    auto ms = p3->monomials_of_degree(MultiDegree{k}, lex);  // descending
    std::vector<Monomial> v, outside;
    for (const auto& m : ms)
      (coin(rng) ? v : outside).push_back(m);
    if (outside.empty()) continue;
    const Monomial& largest_out = outside.front();

    auto contracted = [&](const std::vector<Monomial>& set) {
      std::set<Monomial> out;
      for (const auto& m : set)
        for (int var = 0; var < 4; ++var)
          if (auto c = contract(var, m)) out.insert(*c);
      return out;
    };
    auto sv = contracted(v);
    int escapes = 0;
    Monomial escapee;
    for (int var = 0; var < 4; ++var) {
      auto c = contract(var, largest_out);
      if (c && !sv.count(*c)) {
        ++escapes;
        escapee = *c;
      }
    }
    CHECK(escapes <= 1);
    if (escapes == 1) {
      // escapee is the largest degree-(k-1) monomial outside S_1 -| V
      for (const auto& m : p3->monomials_of_degree(MultiDegree{k - 1}, lex)) {
        if (m == escapee) break;
        CHECK(sv.count(m));
      }
    }
  }
}

TEST_CASE("apolarity lift of (a0, a1^4) at r = 4") {
  auto p2 = make_projective(2);
  PolyParser p(p2);
  Ideal J(p2, {p.parse("a0"), p.parse("a1^4")});
  auto lift = apolarity_lift(J, 4);
  CHECK(lift.a == 2);
  CHECK(lift.b == 2);
  GradedFrame f2 = GradedFrame::make(p2, MultiDegree{2}, p2->default_order());
  CHECK(graded_piece_dim(lift.ideal.generators(), f2) == 2);
  CHECK(membership(p.parse("a0*a1"), lift.ideal));
  CHECK(membership(p.parse("a0*a2"), lift.ideal));
  CHECK(!membership(p.parse("a0^2"), lift.ideal));
  CHECK(hf_matches_target(lift.ideal, 4, DegreeBox::cube(1, 0, 6)).ok);
  // (c): agreement with J from degree b+1 on
  for (long k = lift.b + 1; k <= 6; ++k) {
    GradedFrame fk = GradedFrame::make(p2, MultiDegree{k}, p2->default_order());
    CHECK(graded_piece_dim(lift.ideal.generators(), fk) ==
          graded_piece_dim(J.generators(), fk));
  }
}

TEST_CASE("apolarity lift returns J when J already has the target function") {
  auto p2 = make_projective(2);
  PolyParser p(p2);
  // 2 distinct points: HF (1,2,2,...) = h_{2,P^2}
  Ideal pt1(p2, {p.parse("a0"), p.parse("a1")});
  Ideal pt2(p2, {p.parse("a0 - a2"), p.parse("a1 - a2")});
  Ideal J = intersect(pt1, pt2);
  auto lift = apolarity_lift(J, 2);
  CHECK(ideal_equal(lift.ideal, J));
}

TEST_CASE("apolarity lift rejects non-saturated input") {
  auto p2 = make_projective(2);
  PolyParser p(p2);
  Ideal notsat(p2, {p.parse("a0^2"), p.parse("a0*a1"), p.parse("a0*a2")});
  CHECK_THROWS(apolarity_lift(notsat, 4));
}

TEST_CASE("classification witnesses avoid a0^{r-2}") {
  struct Case {
    int n;
    long r;
  };
  for (auto [n, r] : {Case{2, 4}, Case{2, 5}, Case{3, 4}}) {
    auto pn = make_projective(n);
    RingPtr ring = pn;
    std::vector<Polynomial> jg;
    for (int i = 0; i + 1 < n; ++i) jg.push_back(Polynomial::variable(ring, i));
    Monomial last(ring->nvars(), 0);
    last[n - 1] = static_cast<int>(r);
    jg.push_back(Polynomial::monomial(ring, last));
    Ideal J(ring, jg);
    auto lift = apolarity_lift(J, r);
    Monomial witness(ring->nvars(), 0);
    witness[0] = static_cast<int>(r - 2);
    CHECK(!membership(Polynomial::monomial(ring, witness), lift.ideal));
    CHECK(hf_matches_target(lift.ideal, r, DegreeBox::cube(1, 0, r + 2)).ok);

    // windowed ideal closure: S_1 * I_k inside I_{k+1}
    for (long k = lift.a; k <= lift.b; ++k) {
      GradedFrame fk = GradedFrame::make(ring, MultiDegree{k}, ring->default_order());
      GradedFrame fk1 = GradedFrame::make(ring, MultiDegree{k + 1}, ring->default_order());
      QMat up = graded_piece_matrix(lift.ideal.generators(), fk1);
      std::vector<int> piv;
      {
        QMat tmp = up;
        piv = rref(tmp);
      }
      for (const auto& b : graded_piece_basis(lift.ideal.generators(), fk))
        for (std::size_t v = 0; v < ring->nvars(); ++v)
          CHECK(in_row_span(up, piv,
                            fk1.to_row(b * Polynomial::variable(ring, static_cast<int>(v)))));
    }
    // nothing below degree a
    for (long k = 0; k < lift.a; ++k) {
      GradedFrame fk = GradedFrame::make(ring, MultiDegree{k}, ring->default_order());
      CHECK(graded_piece_dim(lift.ideal.generators(), fk) == 0);
    }
  }
}

TEST_CASE("rank-2 construction at r = 4") {
  auto c = construct_p1p1_ideal(4);
  CHECK_THROWS(construct_p1p1_ideal(3));

  // harvested generators match the degreewise formula on a window
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b) {
      GradedFrame f = GradedFrame::make(c.ring, MultiDegree{a, b}, c.order);
      auto expect = p1p1_degree_basis(c, a, b);
      CHECK(graded_piece_dim(c.ideal.generators(), f) ==
            static_cast<long>(expect.size()));
    }
  CHECK(hf_matches_target(c.ideal, 4, DegreeBox::cube(2, 0, 6)).ok);

  // I = J from a >= r-1 on (checked in a strip)
  PolyParser p(c.ring);
  for (long b = 0; b <= 3; ++b) {
    GradedFrame f = GradedFrame::make(c.ring, MultiDegree{3, b}, c.order);
    CHECK(graded_piece_dim(c.ideal.generators(), f) ==
          graded_piece_dim(c.saturation.generators(), f));
  }
  CHECK(ideal_contains(c.saturation, c.ideal));
}

TEST_CASE("product lift over two lines") {
  auto x = make_projective(1);
  auto y = make_projective(1);
  PolyParser p(x);
  Ideal ix(x, {p.parse("a0^2")});
  auto ox = MonomialOrder::lex({0, 1});
  auto res = product_lift(ix, y, 2, ox, ox, MultiDegree{4}, MultiDegree{4});
  CHECK(res.closure_ok);

  auto f02 = res.plan.frame(MultiDegree{0}, MultiDegree{2});
  auto rows02 = res.plan.degree_rows(MultiDegree{0}, MultiDegree{2});
  REQUIRE(rows02.size() == 1);
  CHECK(f02.to_poly(rows02[0]).str() == "b0^2");

  auto rows11 = res.plan.degree_rows(MultiDegree{1}, MultiDegree{1});
  auto f11 = res.plan.frame(MultiDegree{1}, MultiDegree{1});
  std::set<std::string> got;
  for (const auto& r : rows11) got.insert(f11.to_poly(r).str());
  CHECK(got == std::set<std::string>{"a0*b0", "a1*b0"});

  // restriction to pure X-degrees equals I_X
  for (long d = 0; d <= 4; ++d) {
    GradedFrame fx = GradedFrame::make(x, MultiDegree{d}, ox);
    CHECK(static_cast<long>(res.plan.degree_rows(MultiDegree{d}, MultiDegree{0}).size()) ==
          graded_piece_dim(ix.generators(), fx));
  }

  CHECK(hf_matches_target(res.harvested, 2, DegreeBox::cube(2, 0, 4)).ok);

  // wrong Hilbert function is rejected
  Ideal bad(x, {p.parse("a0")});
  CHECK_THROWS(product_lift(bad, y, 2, ox, ox, MultiDegree{3}, MultiDegree{3}));
}

TEST_CASE("degree classes follow the case definitions pointwise") {
  auto x = make_projective(1);
  auto y = make_projective(2);
  PolyParser p(x);
  Ideal ix(x, {p.parse("a0^2")});
  auto res = product_lift(ix, y, 2, MonomialOrder::lex({0, 1}), y->default_order(),
                          MultiDegree{3}, MultiDegree{3});
  const long r = 2;
  for (long dx = 0; dx <= 3; ++dx)
    for (long dy = 0; dy <= 3; ++dy) {
      long hx = std::min(x->dim_graded_piece(MultiDegree{dx}), r);
      long hxy = std::min(
          x->dim_graded_piece(MultiDegree{dx}) * y->dim_graded_piece(MultiDegree{dy}), r);
      auto cls = res.plan.classify(MultiDegree{dx}, MultiDegree{dy});
      if (hx == r)
        CHECK(cls == ProductLift::DegreeClass::A);
      else if (hxy == r)
        CHECK(cls == ProductLift::DegreeClass::B);
      else
        CHECK(cls == ProductLift::DegreeClass::C);
    }
}
