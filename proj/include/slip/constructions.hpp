#ifndef SLIP_CONSTRUCTIONS_HPP
#define SLIP_CONSTRUCTIONS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slip/dualspace.hpp"
#include "slip/graded.hpp"
#include "slip/groebner.hpp"
#include "slip/hilbert.hpp"

namespace slip {

// ---------------------------------------------------------------------------
// Apolarity lift: extends a saturated ideal of a length-r subscheme of P^n to
// an ideal with the Hilbert function of r general points, by completing the
// dual spaces J^perp_k with the largest dual monomials.
// ---------------------------------------------------------------------------

struct ApolarityLift {
  Ideal ideal;
  long a = 0;  // first degree with dim S_a >= r
  long b = 0;  // last degree where H_{S/J} != r
  std::vector<long> added;  // monomials appended per degree a..b
};

inline ApolarityLift apolarity_lift(const Ideal& J, long r,
                                    std::optional<MonomialOrder> order_opt = std::nullopt) {
  const RingPtr& ring = J.ring();
  if (ring->pic_rank != 1)
    throw std::invalid_argument("apolarity lift requires a standard-graded ring");
  MonomialOrder order = order_opt ? *order_opt
                                  : MonomialOrder::lex([&] {
                                      std::vector<int> p(ring->nvars());
                                      for (std::size_t i = 0; i < p.size(); ++i)
                                        p[i] = static_cast<int>(i);
                                      return p;
                                    }());
  {
    Ideal sat = saturate_irrelevant(J);
    if (!ideal_equal(sat, J))
      throw std::invalid_argument("apolarity lift requires a saturated ideal");
  }

  long maxgen = 0;
  for (const auto& g : J.generators()) {
    auto d = g.homogeneous_degree();
    if (d) maxgen = std::max(maxgen, (*d)[0]);
  }
  const long kmax = std::max(r, maxgen) + 2;

  std::vector<long> hf(kmax + 1);
  for (long k = 0; k <= kmax; ++k) hf[k] = hf_quotient(J, MultiDegree{k});
  for (long k = 0; k < kmax; ++k)
    if (hf[k] > hf[k + 1])
      throw std::invalid_argument("Hilbert function of S/J must be nondecreasing");
  if (hf[kmax] != r)
    throw std::invalid_argument("S/J does not have Hilbert polynomial r on the window");

  long a = 0;
  while (ring->dim_graded_piece(MultiDegree{a}) < r) ++a;
  long b = -1;
  for (long k = 0; k <= kmax; ++k)
    if (hf[k] != r) b = k;
  if (b + 1 >= r)
    throw std::invalid_argument("lift range violates b+1 < r");

  std::vector<Polynomial> gens;
  std::vector<long> added;
  for (long k = a; k <= b; ++k) {
    DualSpaceBasis w = perp(J, k, order);
    QMat rows = w.rows;
    auto pivots = rref(rows);
    long n_added = 0;
    for (const auto& m : w.frame.monomials) {  // descending
      if (static_cast<long>(rows.size()) >= r) break;
      QRow cand(w.frame.dim(), Rat(0));
      cand[w.frame.index.at(m)] = 1;
      if (in_row_span(rows, pivots, cand)) {
        ++n_added;  // counts toward the prefix, span unchanged
        continue;
      }
      rows.push_back(std::move(cand));
      pivots = rref(rows);
      ++n_added;
    }
    if (static_cast<long>(rows.size()) != r)
      throw std::logic_error("could not complete dual space to dimension r");
    added.push_back(n_added);
    DualSpaceBasis wk;
    wk.degree = k;
    wk.frame = w.frame;
    wk.rows = std::move(rows);
    for (auto& f : perp_of_dual(wk)) gens.push_back(std::move(f));
  }
  // degrees > b: the lift agrees with J, generated by J_{b+1} and the higher
  // generators of J
  GradedFrame fb = GradedFrame::make(ring, MultiDegree{b + 1}, order);
  for (auto& f : graded_piece_basis(J.generators(), fb)) gens.push_back(std::move(f));
  for (const auto& g : J.generators()) {
    auto d = g.homogeneous_degree();
    if (d && (*d)[0] > b + 1) gens.push_back(g);
  }
  ApolarityLift out{Ideal(ring, std::move(gens)), a, b, std::move(added)};
  return out;
}

// ---------------------------------------------------------------------------
// The P^1 x P^1 family with saturation (b0, a0^r): degreewise spans of the
// smallest monomials of the saturated ideal, together with the degree-(1,r)
// embedding data.
// ---------------------------------------------------------------------------

struct P1P1Construction {
  CoxPtr ring;                  // P^1 x P^1, blocks a then b
  long r = 0;
  MonomialOrder order;          // lex b0 > b1 > a0 > a1
  Ideal ideal;                  // harvested minimal generators
  Ideal saturation;             // (b0, a0^r)
  std::vector<Monomial> basis_of_l;  // degree-(1,r) monomials, descending
};

namespace detail {

// Monomials of J_{(a,b)} for J = (b0, a0^r), descending under `order`.
inline std::vector<Monomial> p1p1_j_monomials(const CoxRing& ring, long r, long a,
                                              long b, const MonomialOrder& order) {
  std::vector<Monomial> out;
  for (const auto& m : ring.monomials_of_degree(MultiDegree{a, b}, order)) {
    // variables: 0 = a0, 1 = a1, 2 = b0, 3 = b1
    if (m[2] >= 1 || m[0] >= r) out.push_back(m);
  }
  return out;
}

inline bool p1p1_member(const CoxRing& ring, long r, const Monomial& m,
                        const MonomialOrder& order) {
  MultiDegree d = ring.degree_of(m);
  long dim_s = (d[0] + 1) * (d[1] + 1);
  if (dim_s <= r) return false;
  auto js = p1p1_j_monomials(ring, r, d[0], d[1], order);
  long keep = dim_s - r;  // that many smallest
  long from = static_cast<long>(js.size()) - keep;
  for (long i = std::max(from, 0L); i < static_cast<long>(js.size()); ++i)
    if (js[i] == m) return true;
  return false;
}

}  // namespace detail

inline P1P1Construction construct_p1p1_ideal(long r) {
  if (r < 4)
    throw std::invalid_argument("construction needs r >= 4 (criterion vacuous below)");
  auto ring = make_product_projective({1, 1});
  MonomialOrder order = MonomialOrder::lex({2, 3, 0, 1});  // b0 > b1 > a0 > a1

  // harvest minimal monomial generators: m in I with every m/v outside I;
  // generators of this family live in degrees (a,b) <= (r,r), verified by the
  // wide scan below
  std::vector<Monomial> gens;
  for (long a = 0; a <= 2 * r + 2; ++a) {
    for (long b = 0; b <= 2 * r + 2; ++b) {
      if ((a + 1) * (b + 1) <= r) continue;
      auto js = detail::p1p1_j_monomials(*ring, r, a, b, order);
      long keep = (a + 1) * (b + 1) - r;
      long from = static_cast<long>(js.size()) - keep;
      for (long i = std::max(from, 0L); i < static_cast<long>(js.size()); ++i) {
        const Monomial& m = js[i];
        bool minimal = true;
        for (std::size_t v = 0; v < 4 && minimal; ++v) {
          if (m[v] == 0) continue;
          Monomial q = m;
          --q[v];
          if (detail::p1p1_member(*ring, r, q, order)) minimal = false;
        }
        if (minimal) {
          if (a > r || b > r)
            throw std::logic_error("p1p1 generator outside the expected range");
          gens.push_back(m);
        }
      }
    }
  }

  P1P1Construction c;
  c.ring = ring;
  c.r = r;
  c.order = order;
  c.ideal = monomial_ideal(ring, gens);
  c.saturation = Ideal(ring, {Polynomial::variable(ring, 2),
                              Polynomial::monomial(ring, [&] {
                                Monomial m(4, 0);
                                m[0] = static_cast<int>(r);
                                return m;
                              }())});
  c.basis_of_l = ring->monomials_of_degree(MultiDegree{1, r}, order);
  return c;
}

// Degreewise oracle for the construction (independent of the harvested
// generators): the span of the (a+1)(b+1) - r smallest monomials of J.
inline std::vector<Monomial> p1p1_degree_basis(const P1P1Construction& c, long a, long b) {
  long dim_s = (a + 1) * (b + 1);
  if (dim_s <= c.r) return {};
  auto js = detail::p1p1_j_monomials(*c.ring, c.r, a, b, c.order);
  long keep = dim_s - c.r;
  long from = std::max<long>(static_cast<long>(js.size()) - keep, 0);
  return std::vector<Monomial>(js.begin() + from, js.end());
}

// ---------------------------------------------------------------------------
// Product lift: the degreewise ideal J on X x Y restricting to I_X, built from
// the three-case formula over the product monomial order (Y-part dominates).
// ---------------------------------------------------------------------------

struct ProductLift {
  CoxPtr x, y, xy;
  long r = 0;
  MonomialOrder order_x, order_y, order_xy;
  Ideal ix;

  enum class DegreeClass { A, B, C };

  DegreeClass classify(const MultiDegree& dx, const MultiDegree& dy) const {
    long hx = std::min(x->dim_graded_piece(dx), r);
    if (hx == r) return DegreeClass::A;
    long dim_xy = x->dim_graded_piece(dx) * y->dim_graded_piece(dy);
    if (std::min(dim_xy, r) == r) return DegreeClass::B;
    return DegreeClass::C;
  }

  // Memoized degreewise basis of J_{(dx,dy)} (RREF rows over the product
  // frame).  Concurrent evaluation is idempotent under the lock.
  const QMat& degree_rows(const MultiDegree& dx, const MultiDegree& dy) const {
    std::lock_guard<std::mutex> lk(memo_->mu);
    auto key = std::make_pair(dx, dy);
    auto it = memo_->rows.find(key);
    if (it != memo_->rows.end()) return it->second;
    return memo_->rows.emplace(key, compute_rows(dx, dy)).first->second;
  }

  GradedFrame frame(const MultiDegree& dx, const MultiDegree& dy) const {
    return GradedFrame::make(xy, combine_degree(dx, dy), order_xy);
  }

  MultiDegree combine_degree(const MultiDegree& dx, const MultiDegree& dy) const {
    std::vector<long> v = dx.v;
    v.insert(v.end(), dy.v.begin(), dy.v.end());
    return MultiDegree(std::move(v));
  }

  Monomial combine(const Monomial& mx, const Monomial& my) const {
    Monomial m = mx;
    m.insert(m.end(), my.begin(), my.end());
    return m;
  }

  struct Memo {
    std::mutex mu;
    std::map<std::pair<MultiDegree, MultiDegree>, QMat> rows;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

 private:
  QMat compute_rows(const MultiDegree& dx, const MultiDegree& dy) const {
    GradedFrame fr = frame(dx, dy);
    QMat rows;
    switch (classify(dx, dy)) {
      case DegreeClass::C:
        break;
      case DegreeClass::B: {
        // all monomials except the r smallest under the product order
        const auto& ms = fr.monomials;  // descending
        for (std::size_t i = 0; i + r < ms.size(); ++i) {
          QRow row(fr.dim(), Rat(0));
          row[fr.index.at(ms[i])] = 1;
          rows.push_back(std::move(row));
        }
        break;
      }
      case DegreeClass::A: {
        // L([E],1)·S[X]_[D] + S[Y]_[E]·(I_X)_[D]
        auto ymons = y->monomials_of_degree(dy, order_y);  // descending
        auto xmons = x->monomials_of_degree(dx, order_x);
        for (std::size_t i = 0; i + 1 < ymons.size(); ++i)  // drop the smallest
          for (const auto& mx : xmons) {
            QRow row(fr.dim(), Rat(0));
            row[fr.index.at(combine(mx, ymons[i]))] = 1;
            rows.push_back(std::move(row));
          }
        GradedFrame fx = GradedFrame::make(x, dx, order_x);
        for (const auto& p : graded_piece_basis(ix.generators(), fx))
          for (const auto& my : ymons) {
            QRow row(fr.dim(), Rat(0));
            for (const auto& t : p.terms())
              row[fr.index.at(combine(t.mono, my))] = t.coeff;
            rows.push_back(std::move(row));
          }
        break;
      }
    }
    rref(rows);
    return rows;
  }
};

struct ProductLiftResult {
  ProductLift plan;
  Ideal harvested;  // generators found in the harvest box
  bool closure_ok = true;  // v·J_D ⊆ J_{D+deg v} throughout the box
};

// Builds the plan and harvests a generating set inside the box
// [0, bound_x] x [0, bound_y] (componentwise).  The construction needs
// H_{S[X]/I_X} = h_{r,X} on the scan window, which is verified first.
inline ProductLiftResult product_lift(const Ideal& ix, const CoxPtr& yring, long r,
                                      const MonomialOrder& order_x,
                                      const MonomialOrder& order_y,
                                      const MultiDegree& bound_x,
                                      const MultiDegree& bound_y) {
  auto xring = as_cox(ix.ring());
  if (xring->family == Family::Hirzebruch || yring->family == Family::Hirzebruch)
    throw std::invalid_argument("product lift supports products of projective spaces");

  {
    DegreeBox bx(MultiDegree::zero(bound_x.size()), bound_x);
    for (const auto& d : bx.degrees()) {
      if (hf_quotient(ix, d) != h_target(*xring, r, d))
        throw std::invalid_argument(
            "I_X does not have the Hilbert function of r points on the window");
    }
  }

  ProductLift plan;
  plan.x = xring;
  plan.y = yring;
  std::vector<int> ns = xring->ns;
  ns.insert(ns.end(), yring->ns.begin(), yring->ns.end());
  plan.xy = make_product_projective(ns);
  plan.r = r;
  plan.order_x = order_x;
  plan.order_y = order_y;
  plan.order_xy = MonomialOrder::product(static_cast<int>(xring->nvars()), order_x, order_y);
  plan.ix = ix;

  // harvest new generators degreewise: complete the span of all
  // variable-multiples from one step below to a basis of J_D
  std::vector<Polynomial> gens;
  bool closure_ok = true;
  DegreeBox box(MultiDegree::zero(bound_x.size() + bound_y.size()),
                plan.combine_degree(bound_x, bound_y));
  const int px = static_cast<int>(bound_x.size());
  for (const auto& d : box.degrees()) {
    MultiDegree dx(std::vector<long>(d.v.begin(), d.v.begin() + px));
    MultiDegree dy(std::vector<long>(d.v.begin() + px, d.v.end()));
    GradedFrame fr = plan.frame(dx, dy);
    QMat multiples;
    for (std::size_t var = 0; var < plan.xy->nvars(); ++var) {
      MultiDegree dv = plan.xy->degrees[var];
      MultiDegree prev = d - dv;
      if (!prev.nonneg()) continue;
      MultiDegree pdx(std::vector<long>(prev.v.begin(), prev.v.begin() + px));
      MultiDegree pdy(std::vector<long>(prev.v.begin() + px, prev.v.end()));
      GradedFrame pfr = plan.frame(pdx, pdy);
      for (const auto& row : plan.degree_rows(pdx, pdy)) {
        Polynomial p = pfr.to_poly(row);
        QRow lifted = fr.to_row(p * Polynomial::variable(plan.xy, static_cast<int>(var)));
        multiples.push_back(std::move(lifted));
      }
    }
    const QMat& here = plan.degree_rows(dx, dy);  // RREF already
    std::vector<int> here_pivots;
    {
      QMat tmp = here;
      here_pivots = rref(tmp);
    }
    for (const auto& row : multiples)
      if (!in_row_span(here, here_pivots, row)) {
        closure_ok = false;
        break;
      }
    QMat span = multiples;
    auto pivots = rref(span);
    for (const auto& row : here) {
      if (!in_row_span(span, pivots, row)) {
        gens.push_back(fr.to_poly(row));
        span.push_back(row);
        pivots = rref(span);
      }
    }
  }

  ProductLiftResult res{plan, Ideal(plan.xy, std::move(gens)), closure_ok};
  return res;
}

}  // namespace slip

#endif
