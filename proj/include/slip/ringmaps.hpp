#ifndef SLIP_RINGMAPS_HPP
#define SLIP_RINGMAPS_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "slip/graded.hpp"
#include "slip/groebner.hpp"
#include "slip/ring.hpp"

namespace slip {

// Graded ring homomorphism φ: S[source] -> S[target] with respect to the
// Z-linear degree map Pic(source) -> Pic(target): one homogeneous image per
// source variable, deg(image of v) = degree_map(deg v).
struct GradedRingMap {
  CoxPtr source, target;
  std::vector<Polynomial> images;            // in the target ring
  std::vector<std::vector<long>> degree_map;  // p_target x p_source

  MultiDegree push_degree(const MultiDegree& d) const {
    if (static_cast<int>(d.size()) != source->pic_rank)
      throw std::invalid_argument("degree rank mismatch in ring map");
    MultiDegree out = MultiDegree::zero(target->pic_rank);
    for (int i = 0; i < target->pic_rank; ++i)
      for (int j = 0; j < source->pic_rank; ++j) out[i] += degree_map[i][j] * d[j];
    return out;
  }

  void validate() const {
    if (images.size() != source->nvars())
      throw std::invalid_argument("ring map needs one image per source variable");
    for (std::size_t j = 0; j < images.size(); ++j) {
      auto d = images[j].homogeneous_degree();
      if (!d && !images[j].is_zero())
        throw std::invalid_argument("variable image is not homogeneous");
      if (d && *d != push_degree(source->degrees[j]))
        throw std::invalid_argument("variable image degree disagrees with the degree map");
    }
  }

  Polynomial apply(const Polynomial& p) const {
    Polynomial out(std::static_pointer_cast<const Ring>(target));
    RingPtr tring = std::static_pointer_cast<const Ring>(target);
    for (const auto& t : p.terms()) {
      Polynomial term = Polynomial::monomial(tring, mono_one(target->nvars()), t.coeff);
      for (std::size_t j = 0; j < t.mono.size(); ++j)
        for (int e = 0; e < t.mono[j]; ++e) term = term * images[j];
      out = out + term;
    }
    return out;
  }
};

struct PreimageReport {
  // per source degree of a returned generator: wasphi_a: S_a -> T_{phi(a)}
  // surjective (rank-checked, not assumed)?
  std::vector<std::pair<MultiDegree, bool>> surjectivity;
  bool saturation_rechecked = false;
  bool saturation_ok = false;
};

// phi^{-1}(I) for a homogeneous ideal I of the target, via the graph ideal
// (y_j - phi(y_j)) in target ⊗ source with the target block eliminated first.
inline Ideal preimage(const GradedRingMap& map, const Ideal& I,
                      PreimageReport* report = nullptr, bool recheck_saturation = false) {
  map.validate();
  if (I.ring()->signature() != map.target->signature())
    throw std::invalid_argument("ideal lives in the wrong ring for this map");
  const std::size_t nt = map.target->nvars(), ns = map.source->nvars();

  auto graph = std::make_shared<Ring>();
  graph->pic_rank = map.target->pic_rank;
  for (std::size_t i = 0; i < nt; ++i) {
    graph->names.push_back("T_" + map.target->names[i]);
    graph->aliases.push_back("");
    graph->block.push_back(0);
    graph->degrees.push_back(map.target->degrees[i]);
  }
  for (std::size_t j = 0; j < ns; ++j) {
    graph->names.push_back("Y_" + map.source->names[j]);
    graph->aliases.push_back("");
    graph->block.push_back(1);
    graph->degrees.push_back(map.push_degree(map.source->degrees[j]));
  }
  RingPtr gring = graph;

  auto lift_target = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = t.mono;
      m.resize(nt + ns, 0);
      ts.push_back({t.coeff, std::move(m)});
    }
    return Polynomial(gring, std::move(ts));
  };

  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(lift_target(f));
  for (std::size_t j = 0; j < ns; ++j) {
    Monomial yj(nt + ns, 0);
    yj[nt + j] = 1;
    gens.push_back(Polynomial::monomial(gring, yj) - lift_target(map.images[j]));
  }

  std::vector<bool> elim(nt + ns, false);
  for (std::size_t i = 0; i < nt; ++i) elim[i] = true;
  auto raw = eliminate_raw(gring, gens, elim);

  std::vector<int> keep(ns);
  for (std::size_t j = 0; j < ns; ++j) keep[j] = static_cast<int>(nt + j);
  std::vector<Polynomial> out;
  for (const auto& p : raw)
    out.push_back(workspace::project(p, keep, std::static_pointer_cast<const Ring>(map.source)));
  Ideal res = make_ideal_split(std::static_pointer_cast<const Ring>(map.source), out);

  if (report) {
    std::set<std::vector<long>> seen;
    for (const auto& g : res.generators()) {
      MultiDegree a = *g.homogeneous_degree();
      if (!seen.insert(a.v).second) continue;
      // rank of phi on S_a against T_{phi(a)}
      GradedFrame ft = GradedFrame::make(std::static_pointer_cast<const Ring>(map.target),
                                         map.push_degree(a), map.target->default_order());
      QMat rows;
      for (const auto& m : map.source->enumerate_monomials(a))
        rows.push_back(ft.to_row(map.apply(
            Polynomial::monomial(std::static_pointer_cast<const Ring>(map.source), m))));
      bool surj = rank(std::move(rows)) == ft.dim();
      report->surjectivity.emplace_back(a, surj);
    }
    if (recheck_saturation) {
      report->saturation_rechecked = true;
      report->saturation_ok = ideal_equal(saturate_irrelevant(res), res);
    }
  }
  return res;
}

// I ∩ S[X] for a marked subset of factors of a product of projective spaces.
inline Ideal restrict_to_factors(const Ideal& I, const std::vector<int>& factors,
                                 CoxPtr* out_ring = nullptr) {
  auto cox = as_cox(I.ring());
  if (cox->family != Family::ProductProjective && cox->family != Family::Projective)
    throw std::invalid_argument("restriction needs a product of projective spaces");
  std::vector<bool> keep_factor(cox->ns.size(), false);
  std::vector<int> ns;
  for (int f : factors) {
    if (f < 0 || f >= static_cast<int>(cox->ns.size()))
      throw std::invalid_argument("factor index out of range");
    keep_factor[f] = true;
  }
  for (std::size_t i = 0; i < cox->ns.size(); ++i)
    if (keep_factor[i]) ns.push_back(cox->ns[i]);
  CoxPtr sub = make_product_projective(ns);

  std::vector<bool> elim(cox->nvars(), false);
  std::vector<int> keep_vars;
  for (std::size_t v = 0; v < cox->nvars(); ++v) {
    if (keep_factor[cox->block[v]])
      keep_vars.push_back(static_cast<int>(v));
    else
      elim[v] = true;
  }
  auto raw = eliminate_raw(I.ring(), I.generators(), elim);
  std::vector<Polynomial> out;
  for (const auto& p : raw)
    out.push_back(workspace::project(p, keep_vars, std::static_pointer_cast<const Ring>(sub)));
  // degrees restrict to the kept coordinates
  if (out_ring) *out_ring = sub;
  return make_ideal_split(std::static_pointer_cast<const Ring>(sub), out);
}

// t_i -> g_i for the descending monomial basis (g_1, ..., g_{k+1}) of S[X]_u.
inline GradedRingMap segre_map(const CoxPtr& x, const MultiDegree& u, long r,
                               const MonomialOrder& order) {
  if (!x->effective(u) || u == MultiDegree::zero(x->pic_rank))
    throw std::invalid_argument("segre map needs an effective nonzero degree");
  auto basis = x->monomials_of_degree(u, order);
  if (static_cast<long>(basis.size()) < r)
    throw std::invalid_argument("dim S_u < r: no Hilbert scheme map");
  GradedRingMap map;
  map.source = make_projective_t(static_cast<int>(basis.size()) - 1);
  map.target = x;
  for (const auto& m : basis)
    map.images.push_back(Polynomial::monomial(std::static_pointer_cast<const Ring>(x), m));
  map.degree_map.assign(x->pic_rank, std::vector<long>(1, 0));
  for (int i = 0; i < x->pic_rank; ++i) map.degree_map[i][0] = u[i];
  map.validate();
  return map;
}

struct EmbeddingReport {
  bool algebra_generated = true;    // Sym^d S_u -> S_{du} surjective on the window
  bool hilbert_matches = true;      // dim S_{du} = C(k+d,d) whenever dim < r
  bool irrelevant_in_radical = true;  // B(X) ⊆ √((S_u))
  long window = 0;
  std::vector<long> failed_degrees;

  bool all_hold() const {
    return algebra_generated && hilbert_matches && irrelevant_in_radical;
  }
};

inline EmbeddingReport check_embedding_conditions(const CoxPtr& x, const MultiDegree& u,
                                                  long r, long d_window = 5) {
  EmbeddingReport rep;
  rep.window = d_window;
  RingPtr ring = std::static_pointer_cast<const Ring>(x);
  const MonomialOrder order = ring->default_order();

  // (i) incremental spans: V_d = S_u · V_{d-1} must fill S_{du}
  GradedFrame f1 = GradedFrame::make(ring, u, order);
  std::vector<Polynomial> v;
  for (const auto& m : f1.monomials) v.push_back(Polynomial::monomial(ring, m));
  MultiDegree du = u;
  for (long d = 2; d <= d_window; ++d) {
    du = du + u;
    GradedFrame fd = GradedFrame::make(ring, du, order);
    QMat rows;
    std::vector<Polynomial> next;
    for (const auto& p : v)
      for (const auto& m : f1.monomials) {
        Polynomial q = p * Polynomial::monomial(ring, m);
        rows.push_back(fd.to_row(q));
      }
    rref(rows);
    if (rows.size() != fd.dim()) {
      rep.algebra_generated = false;
      rep.failed_degrees.push_back(d);
    }
    next.clear();
    for (const auto& row : rows) next.push_back(fd.to_poly(row));
    v = std::move(next);
  }

  // (ii) for the finitely many d with dim S_{du} < r compare against P^k
  const long k = x->dim_graded_piece(u) - 1;
  MultiDegree acc = MultiDegree::zero(x->pic_rank);
  for (long d = 1; d <= std::max(d_window, r + 1); ++d) {
    acc = acc + u;
    long dim = x->dim_graded_piece(acc);
    if (dim >= r) break;
    if (dim != CoxRing::binom(k + d, d)) rep.hilbert_matches = false;
  }

  // (iii) every generator of B(X) against √((S_u))
  std::vector<Polynomial> su;
  for (const auto& m : f1.monomials) su.push_back(Polynomial::monomial(ring, m));
  Ideal su_ideal(ring, su);
  for (const auto& b : x->irrelevant_generators)
    if (!radical_membership(Polynomial::monomial(ring, b), su_ideal)) {
      rep.irrelevant_in_radical = false;
      break;
    }
  return rep;
}

// Lift condition (ii): B(target) ⊆ √(phi(B(source)) · S[target]).
inline bool check_lift_B_condition(const GradedRingMap& map) {
  map.validate();
  RingPtr tring = std::static_pointer_cast<const Ring>(map.target);
  std::vector<Polynomial> image_gens;
  for (const auto& b : map.source->irrelevant_generators)
    image_gens.push_back(map.apply(
        Polynomial::monomial(std::static_pointer_cast<const Ring>(map.source), b)));
  Ideal img(tring, image_gens);
  for (const auto& b : map.target->irrelevant_generators)
    if (!radical_membership(Polynomial::monomial(tring, b), img)) return false;
  return true;
}

// Ray data for the toric lift identity: one ray per variable on each side and
// the dual map delta: M_source -> M_target of the lattice map of the morphism.
struct ToricLiftData {
  std::vector<std::vector<long>> source_rays;  // per source variable, in N_source
  std::vector<std::vector<long>> target_rays;  // per target variable, in N_target
  std::vector<std::vector<long>> delta;        // dim M_target x dim M_source
};

// Verifies prod_rho phi(beta_rho)^{<m,u_rho>} = prod_sigma alpha_sigma^{<delta(m),u_sigma>}
// as an identity of exponent linear forms, on a basis of M_source (linearity
// makes the basis check exact).  Variable images must be monic monomials.
inline bool toric_lift_identity_check(const GradedRingMap& map, const ToricLiftData& data) {
  map.validate();
  const std::size_t ns = map.source->nvars(), nt = map.target->nvars();
  if (data.source_rays.size() != ns || data.target_rays.size() != nt)
    throw std::invalid_argument("ray count does not match variable count");
  for (const auto& img : map.images)
    if (!img.is_monomial())
      throw std::invalid_argument("toric lift check needs monic monomial images");
  const std::size_t m_dim = data.source_rays[0].size();
  for (std::size_t t = 0; t < m_dim; ++t) {
    // LHS: sum over source rays of <e_t, u_rho> * exponents(phi(beta_rho))
    std::vector<long> lhs(nt, 0);
    for (std::size_t j = 0; j < ns; ++j) {
      long c = data.source_rays[j][t];
      const Monomial& e = map.images[j].terms()[0].mono;
      for (std::size_t s = 0; s < nt; ++s) lhs[s] += c * e[s];
    }
    // RHS: <delta(e_t), u_sigma> per target variable
    std::vector<long> dm(data.delta.size(), 0);
    for (std::size_t i = 0; i < data.delta.size(); ++i) dm[i] = data.delta[i][t];
    for (std::size_t s = 0; s < nt; ++s) {
      long rhs = 0;
      for (std::size_t i = 0; i < dm.size(); ++i) rhs += dm[i] * data.target_rays[s][i];
      if (lhs[s] != rhs) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Built-in maps
// ---------------------------------------------------------------------------

// Natural inclusion S[X] -> S[X x Y] for a projection X x Y -> X given by the
// kept factor indices of the product ring.
inline GradedRingMap factor_inclusion(const CoxPtr& full, const std::vector<int>& factors) {
  std::vector<bool> keep_factor(full->ns.size(), false);
  std::vector<int> ns;
  for (int f : factors) keep_factor[f] = true;
  for (std::size_t i = 0; i < full->ns.size(); ++i)
    if (keep_factor[i]) ns.push_back(full->ns[i]);
  GradedRingMap map;
  map.source = make_product_projective(ns);
  map.target = full;
  for (std::size_t v = 0; v < full->nvars(); ++v)
    if (keep_factor[full->block[v]])
      map.images.push_back(
          Polynomial::variable(std::static_pointer_cast<const Ring>(full), static_cast<int>(v)));
  map.degree_map.assign(full->pic_rank, std::vector<long>(ns.size(), 0));
  int col = 0;
  for (std::size_t i = 0; i < full->ns.size(); ++i)
    if (keep_factor[i]) map.degree_map[i][col++] = 1;
  map.validate();
  return map;
}

inline GradedRingMap identity_map(const CoxPtr& x) {
  GradedRingMap map;
  map.source = x;
  map.target = x;
  for (std::size_t v = 0; v < x->nvars(); ++v)
    map.images.push_back(
        Polynomial::variable(std::static_pointer_cast<const Ring>(x), static_cast<int>(v)));
  map.degree_map.assign(x->pic_rank, std::vector<long>(x->pic_rank, 0));
  for (int i = 0; i < x->pic_rank; ++i) map.degree_map[i][i] = 1;
  return map;
}

// Lift of the blow-down H_1 -> P^2: b0 -> a3 a4, b1 -> a1 a4, b2 -> a2, with
// pullback 1 -> (1,1) and the ray data of both fans.
struct BlowdownLift {
  GradedRingMap map;
  ToricLiftData data;
};

inline BlowdownLift hirzebruch_blowdown_lift() {
  BlowdownLift out;
  CoxPtr h1 = make_hirzebruch(1);
  CoxPtr p2 = make_projective(2);  // variables b0, b1, b2 aliased a0,a1,a2
  auto p2named = std::make_shared<CoxRing>(*p2);
  p2named->aliases = {"b0", "b1", "b2"};
  out.map.source = p2named;
  out.map.target = h1;
  RingPtr hr = std::static_pointer_cast<const Ring>(h1);
  auto mono = [&](std::initializer_list<int> vars) {
    Monomial m(4, 0);
    for (int v : vars) m[v] += 1;
    return Polynomial::monomial(hr, m);
  };
  out.map.images = {mono({2, 3}), mono({0, 3}), mono({1})};  // a3a4, a1a4, a2
  out.map.degree_map = {{1}, {1}};
  out.map.validate();
  out.data.source_rays = {{-1, 1}, {1, 0}, {0, -1}};                 // b0, b1, b2
  out.data.target_rays = {{1, 0}, {0, -1}, {-1, 1}, {0, 1}};         // a1..a4
  out.data.delta = {{1, 0}, {0, 1}};                                 // identity on Z^2
  return out;
}

}  // namespace slip

#endif
