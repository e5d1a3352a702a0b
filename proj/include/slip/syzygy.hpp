#ifndef SLIP_SYZYGY_HPP
#define SLIP_SYZYGY_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "slip/groebner.hpp"

namespace slip {

// ---------------------------------------------------------------------------
// Free-module Buchberger.  Components are grouped in priority blocks; every
// term in a lower-numbered block beats every term in a higher one, which is
// exactly the elimination shape needed to read kernels off a module basis.
// ---------------------------------------------------------------------------

namespace gb {

struct ModTerm {
  int comp;
  Monomial mono;
  Rat coeff;
};

struct ModOrder {
  std::vector<int> comp_block;  // block per component; smaller block wins
  MonomialOrder base;

  int cmp(const ModTerm& a, const ModTerm& b) const {
    int ba = comp_block[a.comp], bb = comp_block[b.comp];
    if (ba != bb) return ba < bb ? 1 : -1;
    int c = base.cmp(a.mono, b.mono);
    if (c) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
  bool greater(const ModTerm& a, const ModTerm& b) const { return cmp(a, b) > 0; }
};

struct MVec {
  std::vector<ModTerm> t;  // sorted descending
  long sugar = 0;
  bool zero() const { return t.empty(); }
  const ModTerm& lt() const { return t.front(); }
};

inline void mod_sort(MVec& v, const ModOrder& o) {
  std::sort(v.t.begin(), v.t.end(),
            [&](const ModTerm& a, const ModTerm& b) { return o.greater(a, b); });
}

// h -= c * x^m * g
inline void mod_sub_mul(MVec& h, const Rat& c, const Monomial& m, const MVec& g,
                        const ModOrder& o) {
  std::vector<ModTerm> out;
  out.reserve(h.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < h.t.size() || j < g.t.size()) {
    if (j == g.t.size()) {
      out.push_back(h.t[i++]);
      continue;
    }
    ModTerm gt{g.t[j].comp, mono_mul(g.t[j].mono, m), Rat(0)};
    if (i == h.t.size()) {
      Rat v = -c * g.t[j].coeff;
      if (!is_zero(v)) {
        gt.coeff = std::move(v);
        out.push_back(std::move(gt));
      }
      ++j;
      continue;
    }
    int cmp = o.cmp(h.t[i], gt);
    if (cmp > 0) {
      out.push_back(h.t[i++]);
    } else if (cmp < 0) {
      Rat v = -c * g.t[j].coeff;
      if (!is_zero(v)) {
        gt.coeff = std::move(v);
        out.push_back(std::move(gt));
      }
      ++j;
    } else {
      Rat v = h.t[i].coeff - c * g.t[j].coeff;
      if (!is_zero(v)) out.push_back({h.t[i].comp, h.t[i].mono, std::move(v)});
      ++i, ++j;
    }
  }
  h.t = std::move(out);
  h.sugar = std::max(h.sugar, g.sugar + (long)total_degree(m));
}

inline MVec mod_normal_form(MVec h, const std::vector<MVec>& basis, const ModOrder& o) {
  std::vector<ModTerm> rem;
  while (!h.zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.zero()) continue;
      if (g.lt().comp == h.lt().comp && mono_divides(g.lt().mono, h.lt().mono)) {
        Rat c = h.lt().coeff / g.lt().coeff;
        mod_sub_mul(h, c, mono_div(h.lt().mono, g.lt().mono), g, o);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(h.t.front());
      h.t.erase(h.t.begin());
    }
  }
  MVec r;
  r.t = std::move(rem);
  r.sugar = h.sugar;
  return r;
}

// Plain Buchberger over the free module; S-pairs only between elements whose
// leading terms live in the same component.  No product criterion: it is not
// valid for modules.
inline std::vector<MVec> mod_buchberger(std::vector<MVec> gens, const ModOrder& o) {
  std::vector<MVec> g;
  for (auto& v : gens)
    if (!v.zero()) g.push_back(std::move(v));

  struct Pair {
    long sugar;
    long idx;
    std::size_t i, j;
    bool operator>(const Pair& p) const {
      return std::tie(sugar, idx) > std::tie(p.sugar, p.idx);
    }
  };
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> q;
  long counter = 0;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (g[i].lt().comp != g[k].lt().comp) continue;
      Monomial l = mono_lcm(g[i].lt().mono, g[k].lt().mono);
      long s = std::max(g[i].sugar + total_degree(l) - total_degree(g[i].lt().mono),
                        g[k].sugar + total_degree(l) - total_degree(g[k].lt().mono));
      q.push({s, counter++, i, k});
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) push_pairs(k);

  while (!q.empty()) {
    Pair p = q.top();
    q.pop();
    Monomial l = mono_lcm(g[p.i].lt().mono, g[p.j].lt().mono);
    MVec sp = g[p.i];
    Monomial ma = mono_div(l, g[p.i].lt().mono);
    for (auto& tm : sp.t) tm.mono = mono_mul(tm.mono, ma);
    sp.sugar += total_degree(ma);
    Rat c = sp.lt().coeff / g[p.j].lt().coeff;
    mod_sub_mul(sp, c, mono_div(l, g[p.j].lt().mono), g[p.j], o);
    MVec r = mod_normal_form(std::move(sp), g, o);
    if (!r.zero()) {
      g.push_back(std::move(r));
      push_pairs(g.size() - 1);
    }
  }
  return g;
}

}  // namespace gb

// A row vector (a_1..a_m) of polynomials with sum a_j g_j = 0.
using SyzygyRow = std::vector<Polynomial>;

struct SyzygyModule {
  std::vector<SyzygyRow> rows;
  std::vector<MultiDegree> column_degrees;  // degrees of the presented generators
};

namespace detail {

inline gb::MVec vec_to_mvec(const std::vector<Polynomial>& v, const gb::ModOrder& o) {
  gb::MVec m;
  for (std::size_t c = 0; c < v.size(); ++c)
    for (const auto& t : v[c].terms()) m.t.push_back({static_cast<int>(c), t.mono, t.coeff});
  long d = 0;
  for (const auto& t : m.t) d = std::max(d, (long)total_degree(t.mono));
  m.sugar = d;
  gb::mod_sort(m, o);
  return m;
}

inline std::vector<Polynomial> mvec_slice(const gb::MVec& v, const RingPtr& ring,
                                          int from, int count) {
  std::vector<std::vector<Term>> comp(count);
  for (const auto& t : v.t) {
    if (t.comp < from || t.comp >= from + count)
      throw std::logic_error("module vector outside expected components");
    comp[t.comp - from].push_back({t.coeff, t.mono});
  }
  std::vector<Polynomial> out;
  out.reserve(count);
  for (auto& ts : comp) out.emplace_back(ring, std::move(ts));
  return out;
}

}  // namespace detail

// Generators of the kernel of the map S^k -> S^m sending the i-th basis
// vector to rows[i].  Rows must all have length m.
inline std::vector<SyzygyRow> module_kernel(const RingPtr& ring,
                                            const std::vector<SyzygyRow>& rows, int m,
                                            const MonomialOrder& base) {
  const int k = static_cast<int>(rows.size());
  gb::ModOrder o;
  o.base = base;
  o.comp_block.assign(m + k, 0);
  for (int i = 0; i < k; ++i) o.comp_block[m + i] = 1;

  std::vector<gb::MVec> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<Polynomial> w = rows[i];
    w.resize(m + k, Polynomial(ring));
    w[m + i] = Polynomial::monomial(ring, mono_one(ring->nvars()));
    gens.push_back(detail::vec_to_mvec(w, o));
  }
  auto basis = gb::mod_buchberger(std::move(gens), o);
  std::vector<SyzygyRow> out;
  for (const auto& b : basis) {
    if (b.zero()) continue;
    if (b.lt().comp < m) continue;  // still touches the value block
    out.push_back(detail::mvec_slice(b, ring, m, k));
  }
  return out;
}

// Taylor syzygies of a monomial generating set, pruned by the chain
// criterion (drop (i,k) when some m_j divides lcm_{ik} and both sub-lcms are
// proper divisors; induction on lcm divisibility keeps this a generating set).
inline std::vector<SyzygyRow> taylor_syzygies(const RingPtr& ring,
                                              const std::vector<Monomial>& ms) {
  std::vector<SyzygyRow> out;
  const std::size_t n = ms.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      Monomial l = mono_lcm(ms[i], ms[k]);
      bool drop = false;
      for (std::size_t j = 0; j < n && !drop; ++j) {
        if (j == i || j == k) continue;
        if (!mono_divides(ms[j], l)) continue;
        if (mono_lcm(ms[i], ms[j]) != l && mono_lcm(ms[j], ms[k]) != l) drop = true;
      }
      if (drop) continue;
      SyzygyRow row(n, Polynomial(ring));
      row[i] = Polynomial::monomial(ring, mono_div(l, ms[i]));
      row[k] = Polynomial::monomial(ring, mono_div(l, ms[k]), Rat(-1));
      out.push_back(std::move(row));
    }
  }
  return out;
}

// Generating set of the first syzygy module of the given generators.
inline std::vector<SyzygyRow> syzygy_rows(const RingPtr& ring,
                                          const std::vector<Polynomial>& gens,
                                          const MonomialOrder& order) {
  bool monomial = true;
  for (const auto& g : gens)
    if (!g.is_single_term()) monomial = false;
  if (monomial) {
    std::vector<Monomial> ms;
    ms.reserve(gens.size());
    std::vector<Rat> coeffs;
    for (const auto& g : gens) {
      ms.push_back(g.terms()[0].mono);
      coeffs.push_back(g.terms()[0].coeff);
    }
    auto rows = taylor_syzygies(ring, ms);
    // rescale for non-unit coefficients: sum row_j * (c_j m_j) = 0
    for (auto& row : rows)
      for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) row[j] = row[j].scale(1 / coeffs[j]);
    return rows;
  }
  std::vector<SyzygyRow> unit_rows;
  for (const auto& g : gens) unit_rows.push_back({g});
  return module_kernel(ring, unit_rows, 1, order);
}

inline SyzygyModule syzygies(const Ideal& I, const MonomialOrder& order) {
  SyzygyModule s;
  s.rows = syzygy_rows(I.ring(), I.generators(), order);
  for (const auto& g : I.generators()) {
    auto d = g.homogeneous_degree();
    s.column_degrees.push_back(d ? *d : MultiDegree::zero(I.ring()->pic_rank));
  }
  return s;
}

// Writes f as a combination of the generators, if it lies in their ideal.
inline std::optional<SyzygyRow> lift_through(const RingPtr& ring,
                                             const std::vector<Polynomial>& gens,
                                             const Polynomial& f,
                                             const MonomialOrder& base) {
  if (f.is_zero()) return SyzygyRow(gens.size(), Polynomial(ring));
  // monomial shortcut: a single-term member is divisible by some generator
  if (f.is_single_term()) {
    const auto& ft = f.terms()[0];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!gens[j].is_single_term()) continue;
      const auto& gt = gens[j].terms()[0];
      if (mono_divides(gt.mono, ft.mono)) {
        SyzygyRow row(gens.size(), Polynomial(ring));
        row[j] = Polynomial::monomial(ring, mono_div(ft.mono, gt.mono), ft.coeff / gt.coeff);
        return row;
      }
    }
  }
  const int m = 1, k = static_cast<int>(gens.size());
  gb::ModOrder o;
  o.base = base;
  o.comp_block.assign(m + k, 0);
  for (int i = 0; i < k; ++i) o.comp_block[m + i] = 1;
  std::vector<gb::MVec> vecs;
  for (int i = 0; i < k; ++i) {
    std::vector<Polynomial> w(m + k, Polynomial(ring));
    w[0] = gens[i];
    w[m + i] = Polynomial::monomial(ring, mono_one(ring->nvars()));
    vecs.push_back(detail::vec_to_mvec(w, o));
  }
  auto basis = gb::mod_buchberger(std::move(vecs), o);
  std::vector<Polynomial> target(m + k, Polynomial(ring));
  target[0] = f;
  gb::MVec nf = gb::mod_normal_form(detail::vec_to_mvec(target, o), basis, o);
  for (const auto& t : nf.t)
    if (t.comp == 0) return std::nullopt;  // value part did not reduce to zero
  auto tags = detail::mvec_slice(nf, ring, m, k);
  for (auto& p : tags) p = -p;
  return tags;
}

// Exact check sum_j row_j * g_j == 0.
inline bool syzygy_row_annihilates(const SyzygyRow& row,
                                   const std::vector<Polynomial>& gens) {
  if (row.size() != gens.size()) return false;
  Polynomial acc(gens.empty() ? RingPtr() : gens[0].ring());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (row[j].is_zero()) continue;
    acc = acc + row[j] * gens[j];
  }
  return acc.is_zero();
}

}  // namespace slip

#endif
