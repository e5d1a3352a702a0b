#ifndef SLIP_CRITERIA_HPP
#define SLIP_CRITERIA_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "slip/degreeset.hpp"
#include "slip/graded.hpp"
#include "slip/groebner.hpp"
#include "slip/hilbert.hpp"
#include "slip/linalg.hpp"
#include "slip/syzygy.hpp"

namespace slip {

// ---------------------------------------------------------------------------
// Degree-zero Hom dimension: the tangent-space number driving the criteria.
// ---------------------------------------------------------------------------

namespace detail {

struct NfContext {
  RingPtr ring;
  MonomialOrder order;
  std::vector<gb::WPoly> basis;
  std::vector<Monomial> lms;

  explicit NfContext(const Ideal& I,
                     std::optional<MonomialOrder> ord = std::nullopt)
      : ring(I.ring()), order(ord ? *ord : I.ring()->default_order()) {
    for (const auto& g : I.groebner_basis(order)) {
      basis.push_back(gb::to_wpoly(g, order));
      lms.push_back(basis.back().lm());
    }
  }

  Polynomial nf(const Polynomial& f) const {
    return gb::from_wpoly(ring, gb::normal_form(gb::to_wpoly(f, order), basis, order));
  }

  std::vector<Monomial> standard_monomials_of(const MultiDegree& d) const {
    GradedFrame fr = GradedFrame::make(ring, d, order);
    return standard_monomials(lms, fr);
  }
};

inline MultiDegree row_degree(const SyzygyRow& row,
                              const std::vector<MultiDegree>& gen_degrees) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    auto d = row[j].homogeneous_degree();
    if (!d) throw std::logic_error("inhomogeneous syzygy row");
    return *d + gen_degrees[j];
  }
  throw std::logic_error("zero syzygy row");
}

// Index layout for ⊕_j N_{d_j} with N = S/J in standard-monomial coordinates.
struct HomBlocks {
  std::vector<std::vector<Monomial>> std_monos;  // per block
  std::vector<int> offset;
  int total = 0;

  void build(const NfContext& ctx, const std::vector<MultiDegree>& degrees) {
    for (const auto& d : degrees) {
      offset.push_back(total);
      std_monos.push_back(ctx.standard_monomials_of(d));
      total += static_cast<int>(std_monos.back().size());
    }
  }

  int index_of(int block, const Monomial& m) const {
    const auto& ms = std_monos[block];
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (ms[i] == m) return offset[block] + static_cast<int>(i);
    throw std::logic_error("monomial missing from standard basis");
  }
};

// Rank of the degree-zero map ⊕_j N_{a_j} -> ⊕_i N_{b_i} given by a matrix of
// homogeneous polynomials (rows[i][j]), each entry acting by multiplication
// followed by normal form mod J.
inline long graded_map_rank(const NfContext& ctx, const std::vector<SyzygyRow>& rows,
                            const HomBlocks& domain, const HomBlocks& codomain) {
  SparseReducer red;
  // feed the transpose: one sparse row per domain basis vector
  for (std::size_t j = 0; j < domain.std_monos.size(); ++j) {
    for (std::size_t t = 0; t < domain.std_monos[j].size(); ++t) {
      std::map<int, Rat> entries;
      Polynomial tm = Polynomial::monomial(ctx.ring, domain.std_monos[j][t]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Polynomial& a = rows[i][j];
        if (a.is_zero()) continue;
        Polynomial img = ctx.nf(a * tm);
        for (const auto& term : img.terms())
          entries[codomain.index_of(static_cast<int>(i), term.mono)] += term.coeff;
      }
      SparseReducer::Row r;
      for (auto& [c, v] : entries)
        if (!is_zero(v)) r.emplace_back(c, std::move(v));
      if (!r.empty()) red.add_row(std::move(r));
    }
  }
  return static_cast<long>(red.rank());
}

}  // namespace detail

// dim_Q Hom_S(J, S/J)_0: maps are determined by generator images subject to
// the first syzygies; independent of the chosen generating set.
inline long hom_dim_degree_zero(const Ideal& J_in,
                                std::optional<MonomialOrder> ord = std::nullopt) {
  Ideal J = minimalize(J_in);
  if (J.is_zero_ideal()) return 0;
  const MonomialOrder order = ord ? *ord : J.ring()->default_order();
  detail::NfContext ctx(J, order);

  std::vector<MultiDegree> gen_degrees;
  for (const auto& g : J.generators()) gen_degrees.push_back(*g.homogeneous_degree());
  detail::HomBlocks unknowns;
  unknowns.build(ctx, gen_degrees);
  if (unknowns.total == 0) return 0;

  auto rows = syzygy_rows(J.ring(), J.generators(), order);
  detail::HomBlocks targets;
  {
    std::vector<MultiDegree> row_degrees;
    for (const auto& r : rows) row_degrees.push_back(detail::row_degree(r, gen_degrees));
    targets.build(ctx, row_degrees);
  }
  long rank = detail::graded_map_rank(ctx, rows, unknowns, targets);
  return unknowns.total - rank;
}

// dim_Q Ext^1_S(J/I, S/J)_0 from the two-step presentation of J/I.
inline long ext1_dim_degree_zero(const Ideal& I, const Ideal& J) {
  for (const auto& f : I.generators())
    if (!membership(f, J))
      throw std::invalid_argument("ext1 requires I contained in J");
  const RingPtr& ring = J.ring();
  const MonomialOrder order = ring->default_order();
  Ideal Jm = minimalize(J);

  // generators of M = J/I: images of J's generators outside I
  std::vector<Polynomial> kept;
  for (const auto& g : Jm.generators())
    if (!membership(g, I)) kept.push_back(g);
  if (kept.empty()) return 0;
  const int p = static_cast<int>(kept.size());

  // K = ker(F0 -> J/I): syzygies of (kept | gens I) projected to the kept part
  std::vector<Polynomial> combined = kept;
  for (const auto& f : I.generators()) combined.push_back(f);
  std::vector<SyzygyRow> krows;
  {
    std::set<std::string> seen;
    for (auto& row : syzygy_rows(ring, combined, order)) {
      SyzygyRow proj(row.begin(), row.begin() + p);
      bool zero = true;
      std::string key;
      for (const auto& e : proj) {
        if (!e.is_zero()) zero = false;
        key += e.str() + "|";
      }
      if (zero || !seen.insert(key).second) continue;
      krows.push_back(std::move(proj));
    }
  }

  detail::NfContext ctx(Jm);  // N = S/J
  std::vector<MultiDegree> d0;
  for (const auto& g : kept) d0.push_back(*g.homogeneous_degree());
  detail::HomBlocks hom_f0;
  hom_f0.build(ctx, d0);

  std::vector<MultiDegree> d1;
  for (const auto& r : krows) d1.push_back(detail::row_degree(r, d0));
  detail::HomBlocks hom_f1;
  hom_f1.build(ctx, d1);

  auto lrows = module_kernel(ring, krows, p, order);
  std::vector<MultiDegree> d2;
  for (const auto& r : lrows) d2.push_back(detail::row_degree(r, d1));
  detail::HomBlocks hom_f2;
  hom_f2.build(ctx, d2);

  long rank1 = detail::graded_map_rank(ctx, krows, hom_f0, hom_f1);
  long rank2 = detail::graded_map_rank(ctx, lrows, hom_f1, hom_f2);
  return (hom_f1.total - rank2) - rank1;
}

// ---------------------------------------------------------------------------
// Truncation ideal J = I_B + S_A
// ---------------------------------------------------------------------------

// Harvested generating set: bases of I_D for the finitely many D in B below
// the joins join(u, deg g), plus the monomial generators of (S_A).  For a
// degree D in B above every join there is a coordinate i with D_i > u_i and
// D_i > (deg g)_i for the relevant u and g, so every spanning product m*g of
// I_D factors through a variable of degree e_i and I_D = sum_i S_{e_i} I_{D-e_i}
// with D-e_i still in B; the harvested elements therefore generate I_B.  The
// argument needs unit variable degrees, hence the Hirzebruch restriction.
inline Ideal truncation_ideal(const Ideal& I, const DegreeSet& b, const DegreeSet& a) {
  auto cox = as_cox(I.ring());
  if (!a.subset_of(b))
    throw std::invalid_argument("truncation ideal requires A contained in B");

  std::vector<Polynomial> gens;
  for (const auto& m : degree_set_monomial_generators(*cox, a))
    gens.push_back(Polynomial::monomial(I.ring(), m));

  if (b.is_all()) {
    for (const auto& g : I.generators()) gens.push_back(g);
  } else {
    if (cox->family == Family::Hirzebruch)
      throw std::invalid_argument(
          "truncation with a proper B is only supported on products of projective spaces");
    std::set<MultiDegree> degrees;
    for (const auto& u : b.minimal_generators) {
      for (const auto& g : I.generators()) {
        MultiDegree top = join(u, *g.homogeneous_degree());
        for (const auto& d : DegreeBox(MultiDegree::zero(top.size()), top).degrees())
          if (b.contains(d)) degrees.insert(d);
      }
    }
    const MonomialOrder order = I.ring()->default_order();
    for (const auto& d : degrees) {
      GradedFrame fr = GradedFrame::make(I.ring(), d, order);
      for (auto& p : graded_piece_basis(I.generators(), fr)) gens.push_back(std::move(p));
    }
  }
  return minimalize(Ideal(I.ring(), std::move(gens)));
}

// ---------------------------------------------------------------------------
// Sufficiency witnesses (the (r,X)-sufficient sets feeding the criteria)
// ---------------------------------------------------------------------------

struct SufficiencyWitness {
  enum class Kind { ConstantE, FactorSquare, HirzebruchFiber };
  Kind kind = Kind::ConstantE;
  MultiDegree e, f;  // ConstantE: fixed degrees (rank-1 rings)
  int factor = 0;    // FactorSquare: the squared block
  std::string describe() const {
    switch (kind) {
      case Kind::ConstantE:
        return "constant-E " + e.str() + "+k*" + f.str();
      case Kind::FactorSquare:
        return "factor-square i=" + std::to_string(factor + 1);
      case Kind::HirzebruchFiber:
        return "hirzebruch-fiber";
    }
    return "";
  }
};

struct WitnessInstance {
  MultiDegree e, f, g;
  long k = 0;
};

struct SufficiencyResult {
  enum class Grade { Certified, CertifiedUpToL, Refuted } grade = Grade::Refuted;
  long lbound = 0;
  std::string detail;
};

namespace detail {

inline WitnessInstance instantiate_witness(const CoxRing& ring, long r,
                                           const SufficiencyWitness& w,
                                           const MultiDegree& d) {
  WitnessInstance inst;
  switch (w.kind) {
    case SufficiencyWitness::Kind::ConstantE: {
      if (ring.pic_rank != 1)
        throw std::invalid_argument("constant-E witness needs Picard rank 1");
      inst.e = w.e;
      inst.f = w.f;
      long k = 0;
      while (inst.e[0] + k * inst.f[0] < d[0]) ++k;
      inst.k = k;
      inst.g = MultiDegree{inst.e[0] + k * inst.f[0] - d[0]};
      break;
    }
    case SufficiencyWitness::Kind::FactorSquare: {
      const int i = w.factor;
      const int p = ring.pic_rank;
      inst.e = MultiDegree::zero(p);
      inst.g = MultiDegree::zero(p);
      inst.f = MultiDegree::zero(p);
      inst.f[i] = 1;
      for (int j = 0; j < p; ++j) {
        if (j == i) continue;
        inst.e[j] = std::max(d[j], r);
        inst.g[j] = std::max(r - d[j], 0L);
      }
      inst.k = d[i];
      break;
    }
    case SufficiencyWitness::Kind::HirzebruchFiber: {
      const long a = ring.hirzebruch_a;
      long dd = std::max(0L, 1 + a * d[1] - d[0]);
      inst.e = MultiDegree{d[0] + dd - a * d[1], 0};
      inst.f = MultiDegree{a, 1};
      inst.g = MultiDegree{dd, 0};
      inst.k = d[1];
      break;
    }
  }
  return inst;
}

// Surjectivity of S_F (x) S_{E+lF} -> S_{E+(l+1)F}: products of monomials are
// monomials, so this says every degree-(E+(l+1)F) monomial has a divisor of
// degree F.
inline bool multiplication_surjective(const CoxRing& ring, const MultiDegree& f,
                                      const MultiDegree& to) {
  auto fs = ring.enumerate_monomials(f);
  for (const auto& m : ring.enumerate_monomials(to)) {
    bool hit = false;
    for (const auto& v : fs)
      if (mono_divides(v, m)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace detail

// Checks the nonzerodivisor-chain conditions for every degree in
// C(r,X) ∩ window.  Products of projective spaces get a structural
// surjectivity certificate (monomials factor blockwise); on the Hirzebruch
// surface surjectivity is checked for l <= lbound only and the result is
// graded accordingly.
inline SufficiencyResult sufficiency_witness_check(
    const CoxPtr& ring, long r, const SufficiencyWitness& witness,
    const std::function<bool(const MultiDegree&)>& in_eset, long lbound,
    const DegreeBox& window) {
  const bool structural = ring->family != Family::Hirzebruch;
  SufficiencyResult res;
  res.lbound = lbound;
  auto in_c = [&](const MultiDegree& d) { return ring->dim_graded_piece(d) >= r; };
  for (const auto& d : window.degrees()) {
    if (!in_c(d)) continue;
    WitnessInstance inst;
    try {
      inst = detail::instantiate_witness(*ring, r, witness, d);
    } catch (const std::exception& ex) {
      res.grade = SufficiencyResult::Grade::Refuted;
      res.detail = ex.what();
      return res;
    }
    auto fail = [&](const std::string& why) {
      res.grade = SufficiencyResult::Grade::Refuted;
      res.detail = "degree " + d.str() + ": " + why;
      return res;
    };
    if (!ring->nef(inst.f) || !ring->nef(inst.g)) return fail("F or G not nef");
    if (!(in_eset(inst.e) && in_c(inst.e))) return fail("E outside E-set or C(r,X)");
    MultiDegree ef = inst.e + inst.f;
    if (!(in_eset(ef) && in_c(ef))) return fail("E+F outside E-set or C(r,X)");
    MultiDegree lhs = inst.e;
    for (long t = 0; t < inst.k; ++t) lhs = lhs + inst.f;
    if (lhs != d + inst.g) return fail("E + kF != D + G");
    if (!structural) {
      MultiDegree cur = inst.e;
      for (long l = 0; l <= lbound; ++l) {
        MultiDegree next = cur + inst.f;
        if (!detail::multiplication_surjective(*ring, inst.f, next))
          return fail("multiplication not surjective at l=" + std::to_string(l));
        cur = next;
      }
    }
  }
  res.grade = structural ? SufficiencyResult::Grade::Certified
                         : SufficiencyResult::Grade::CertifiedUpToL;
  return res;
}

// ---------------------------------------------------------------------------
// Criterion reports
// ---------------------------------------------------------------------------

struct CriterionReport {
  std::string criterion;
  int factor = -1;  // 0-based block when applicable
  long dim = 0;
  long threshold = 0;
  std::string verdict;      // "excluded" | "inconclusive" | "excluded-conditional"
  std::string certificate;  // "builtin" | "witness" | "witness-up-to-N" | "user-asserted"
};

// Threshold of the tangent-space criterion.
inline long slip_dim(const CoxRing& ring, long r) { return r * ring.dim_x; }

// Factor criterion: J = I + a_i^2 with the theorem-backed sufficiency of the
// complement (the i-th exponent stays below 2).
inline CriterionReport tangent_criterion_factor(const Ideal& I, long r, int factor) {
  auto cox = as_cox(I.ring());
  if (cox->family != Family::ProductProjective)
    throw std::invalid_argument("factor criterion needs a product of >= 2 projective spaces");
  if (factor < 0 || factor >= cox->pic_rank)
    throw std::invalid_argument("factor index out of range");
  MultiDegree two = MultiDegree::zero(cox->pic_rank);
  two[factor] = 2;
  DegreeSet a = DegreeSet::upward({two}, cox->pic_rank);
  Ideal j = truncation_ideal(I, DegreeSet::all(cox->pic_rank), a);
  CriterionReport rep;
  rep.criterion = "ts-factor";
  rep.factor = factor;
  rep.dim = hom_dim_degree_zero(j);
  rep.threshold = slip_dim(*cox, r);
  rep.verdict = rep.dim < rep.threshold ? "excluded" : "inconclusive";
  rep.certificate = "builtin";
  return rep;
}

struct CertificateSpec {
  enum class Kind { BuiltinFactorSquare, Witness, UserAsserted } kind = Kind::UserAsserted;
  SufficiencyWitness witness;
  long lbound = 10;
  DegreeBox window = DegreeBox::cube(1, 0, 0);  // replaced by caller
};

inline CriterionReport tangent_criterion_custom(const Ideal& I, long r,
                                                const DegreeSet& a, const DegreeSet& b,
                                                const CertificateSpec& cert) {
  auto cox = as_cox(I.ring());
  Ideal j = truncation_ideal(I, b, a);
  CriterionReport rep;
  rep.criterion = "ts-custom";
  rep.dim = hom_dim_degree_zero(j);
  rep.threshold = slip_dim(*cox, r);
  bool below = rep.dim < rep.threshold;
  switch (cert.kind) {
    case CertificateSpec::Kind::BuiltinFactorSquare: {
      rep.certificate = "builtin";
      rep.verdict = below ? "excluded" : "inconclusive";
      break;
    }
    case CertificateSpec::Kind::Witness: {
      auto in_eset = [&](const MultiDegree& d) { return b.contains(d) && !a.contains(d); };
      auto res = sufficiency_witness_check(cox, r, cert.witness, in_eset, cert.lbound,
                                           cert.window);
      if (res.grade == SufficiencyResult::Grade::Refuted) {
        rep.certificate = "refuted: " + res.detail;
        rep.verdict = "inconclusive";
      } else {
        rep.certificate = res.grade == SufficiencyResult::Grade::Certified
                              ? "witness"
                              : "witness-up-to-" + std::to_string(cert.lbound);
        rep.verdict = below ? "excluded" : "inconclusive";
      }
      break;
    }
    case CertificateSpec::Kind::UserAsserted: {
      rep.certificate = "user-asserted";
      rep.verdict = below ? "excluded-conditional" : "inconclusive";
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Classification of the multigraded Hilbert schemes of points in products
// ---------------------------------------------------------------------------

// Irreducible exactly when r = 1, or d = 1 with n = 1, or d = 1 with r <= 3.
inline bool classify_products_irreducible(long r, const std::vector<int>& ns) {
  if (r < 1 || ns.empty()) throw std::invalid_argument("classification needs positive inputs");
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("classification needs positive inputs");
  if (r == 1) return true;
  if (ns.size() == 1 && ns[0] == 1) return true;
  if (ns.size() == 1 && r <= 3) return true;
  return false;
}

}  // namespace slip

#endif
