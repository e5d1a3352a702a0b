#ifndef SLIP_GROEBNER_HPP
#define SLIP_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "slip/monomial.hpp"
#include "slip/order.hpp"
#include "slip/polynomial.hpp"
#include "slip/rational.hpp"
#include "slip/ring.hpp"

namespace slip {

// ---------------------------------------------------------------------------
// Ordered working representation
// ---------------------------------------------------------------------------

namespace gb {

// Terms sorted descending under the active order; leading term first.
struct WPoly {
  std::vector<Term> t;
  long sugar = 0;

  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().mono; }
  const Rat& lc() const { return t.front().coeff; }
};

inline WPoly to_wpoly(const Polynomial& p, const MonomialOrder& o) {
  WPoly w;
  w.t = p.terms();
  std::sort(w.t.begin(), w.t.end(),
            [&](const Term& a, const Term& b) { return o.greater(a.mono, b.mono); });
  long d = 0;
  for (const auto& tm : w.t) d = std::max(d, (long)total_degree(tm.mono));
  w.sugar = d;
  return w;
}

inline Polynomial from_wpoly(const RingPtr& ring, const WPoly& w) {
  return Polynomial(ring, w.t);
}

// h -= c * x^m * g, both sorted under o.
inline void sub_mul(WPoly& h, const Rat& c, const Monomial& m, const WPoly& g,
                    const MonomialOrder& o) {
  std::vector<Term> out;
  out.reserve(h.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < h.t.size() || j < g.t.size()) {
    if (j == g.t.size()) {
      out.push_back(h.t[i++]);
      continue;
    }
    Monomial gm = mono_mul(g.t[j].mono, m);
    if (i == h.t.size()) {
      Rat v = -c * g.t[j].coeff;
      if (!is_zero(v)) out.push_back({std::move(v), std::move(gm)});
      ++j;
      continue;
    }
    int cmp = o.cmp(h.t[i].mono, gm);
    if (cmp > 0) {
      out.push_back(h.t[i++]);
    } else if (cmp < 0) {
      Rat v = -c * g.t[j].coeff;
      if (!is_zero(v)) out.push_back({std::move(v), std::move(gm)});
      ++j;
    } else {
      Rat v = h.t[i].coeff - c * g.t[j].coeff;
      if (!is_zero(v)) out.push_back({std::move(v), h.t[i].mono});
      ++i, ++j;
    }
  }
  h.t = std::move(out);
  h.sugar = std::max(h.sugar, g.sugar + (long)total_degree(m));
}

// Full normal form: every term of the result is reducible by no basis LT.
inline WPoly normal_form(WPoly h, const std::vector<WPoly>& basis,
                         const MonomialOrder& o) {
  std::vector<Term> rem;
  while (!h.zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.zero()) continue;
      if (mono_divides(g.lm(), h.lm())) {
        Rat c = h.lc() / g.lc();
        sub_mul(h, c, mono_div(h.lm(), g.lm()), g, o);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(h.t.front());
      h.t.erase(h.t.begin());
    }
  }
  WPoly r;
  r.t = std::move(rem);
  r.sugar = h.sugar;
  return r;
}

// Buchberger with the sugar strategy and the coprime-leading-term criterion.
// Deterministic: the queue pops by (sugar, creation index) and input order is
// preserved.
inline std::vector<WPoly> buchberger(std::vector<WPoly> gens, const MonomialOrder& o) {
  std::vector<WPoly> g;
  for (auto& w : gens)
    if (!w.zero()) g.push_back(std::move(w));

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
      if (mono_coprime(g[i].lm(), g[k].lm())) continue;  // product criterion
      Monomial l = mono_lcm(g[i].lm(), g[k].lm());
      long s = std::max(g[i].sugar + total_degree(l) - total_degree(g[i].lm()),
                        g[k].sugar + total_degree(l) - total_degree(g[k].lm()));
      q.push({s, counter++, i, k});
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) push_pairs(k);

  while (!q.empty()) {
    Pair p = q.top();
    q.pop();
    // s-poly = (l/lm_i)·f_i − (lc_i/lc_j)(l/lm_j)·f_j
    const Monomial l = mono_lcm(g[p.i].lm(), g[p.j].lm());
    WPoly sp = g[p.i];
    Monomial ma = mono_div(l, g[p.i].lm());
    for (auto& tm : sp.t) tm.mono = mono_mul(tm.mono, ma);
    sp.sugar += total_degree(ma);
    Rat c = sp.t.front().coeff / g[p.j].lc();
    sub_mul(sp, c, mono_div(l, g[p.j].lm()), g[p.j], o);
    WPoly r = normal_form(std::move(sp), g, o);
    if (!r.zero()) {
      g.push_back(std::move(r));
      push_pairs(g.size() - 1);
    }
  }
  return g;
}

inline void make_monic(WPoly& w) {
  if (w.zero()) return;
  Rat inv = 1 / w.lc();
  for (auto& tm : w.t) tm.coeff *= inv;
}

// Unique reduced Groebner basis: minimal, monic, tail-reduced, sorted with
// the greatest leading monomial first.
inline std::vector<WPoly> reduce_basis(std::vector<WPoly> g, const MonomialOrder& o) {
  std::vector<WPoly> min;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mono_divides(g[j].lm(), g[i].lm())) continue;
      if (g[j].lm() == g[i].lm() && j > i) continue;  // keep the earlier one
      redundant = true;
    }
    if (!redundant) min.push_back(g[i]);
  }
  std::vector<WPoly> out(min.size());
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<WPoly> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    out[i] = normal_form(min[i], others, o);
    make_monic(out[i]);
  }
  std::sort(out.begin(), out.end(),
            [&](const WPoly& a, const WPoly& b) { return o.greater(a.lm(), b.lm()); });
  return out;
}

}  // namespace gb

// ---------------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------------

class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr ring, std::vector<Polynomial> gens, bool require_homogeneous = true)
      : ring_(std::move(ring)) {
    for (auto& p : gens) {
      if (p.is_zero()) continue;
      if (require_homogeneous && !p.is_homogeneous())
        throw std::invalid_argument("ideal generator is not homogeneous: " + p.str());
      gens_.push_back(std::move(p));
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  bool is_monomial() const {
    for (const auto& g : gens_)
      if (!g.is_single_term()) return false;
    return true;
  }

  std::vector<Monomial> monomial_generators() const {
    if (!is_monomial()) throw std::logic_error("not a monomial ideal");
    std::vector<Monomial> ms;
    for (const auto& g : gens_) ms.push_back(g.terms()[0].mono);
    return ms;
  }

  // Reduced Groebner basis, memoized per order.  The memo table is guarded by
  // a mutex: concurrent callers may duplicate work but never observe a torn
  // value.
  std::vector<Polynomial> groebner_basis(const MonomialOrder& o) const {
    const std::string key = o.signature();
    {
      std::lock_guard<std::mutex> lk(cache_->mu);
      auto it = cache_->gb.find(key);
      if (it != cache_->gb.end()) return it->second;
    }
    std::vector<gb::WPoly> w;
    for (const auto& g : gens_) w.push_back(gb::to_wpoly(g, o));
    auto basis = gb::reduce_basis(gb::buchberger(std::move(w), o), o);
    std::vector<Polynomial> out;
    for (const auto& b : basis) out.push_back(gb::from_wpoly(ring_, b));
    {
      std::lock_guard<std::mutex> lk(cache_->mu);
      cache_->gb.emplace(key, out);
    }
    return out;
  }

  std::vector<Monomial> leading_monomials(const MonomialOrder& o) const {
    std::vector<Monomial> lms;
    for (const auto& g : groebner_basis(o)) lms.push_back(g.leading_term(o).mono);
    return lms;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<Polynomial>> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens) {
  return Ideal(ring, std::move(gens));
}

// Builds an ideal from arbitrary members of a homogeneous ideal: each input is
// split into homogeneous components (which a homogeneous ideal contains).
inline Ideal make_ideal_split(const RingPtr& ring, const std::vector<Polynomial>& members) {
  std::vector<Polynomial> gens;
  for (const auto& p : members)
    for (auto& c : p.homogeneous_components()) gens.push_back(std::move(c));
  return Ideal(ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// Normal forms and membership
// ---------------------------------------------------------------------------

inline Polynomial normal_form(const Polynomial& f, const Ideal& I,
                              const MonomialOrder& o) {
  auto basis = I.groebner_basis(o);
  std::vector<gb::WPoly> w;
  for (const auto& g : basis) w.push_back(gb::to_wpoly(g, o));
  return gb::from_wpoly(f.ring(), gb::normal_form(gb::to_wpoly(f, o), w, o));
}

inline bool membership(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  if (I.is_monomial() && f.is_single_term()) {
    for (const auto& g : I.generators())
      if (mono_divides(g.terms()[0].mono, f.terms()[0].mono)) return true;
    return false;
  }
  return normal_form(f, I, I.ring()->default_order()).is_zero();
}

inline bool ideal_contains(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.generators())
    if (!membership(g, big)) return false;
  return true;
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  const MonomialOrder o = a.ring()->default_order();
  return a.groebner_basis(o) == b.groebner_basis(o);
}

// ---------------------------------------------------------------------------
// Monomial ideal fast paths
// ---------------------------------------------------------------------------

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool covered = false;
    for (const auto& k : out)
      if (mono_divides(k, m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(m);
  }
  return out;
}

inline Ideal monomial_ideal(const RingPtr& ring, std::vector<Monomial> ms) {
  std::vector<Polynomial> gens;
  for (auto& m : minimalize_monomials(std::move(ms)))
    gens.push_back(Polynomial::monomial(ring, m));
  return Ideal(ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// Workspace rings: auxiliary variable and graph constructions
// ---------------------------------------------------------------------------

namespace workspace {

// ring + one extra variable appended (degree 0; workspace only).
inline RingPtr augment(const RingPtr& base, const std::string& name) {
  auto r = std::make_shared<Ring>();
  r->names = base->names;
  r->aliases = base->aliases;
  r->block = base->block;
  r->degrees = base->degrees;
  r->pic_rank = base->pic_rank;
  r->names.push_back(name);
  r->aliases.push_back("");
  r->block.push_back(-1);
  r->degrees.push_back(MultiDegree::zero(base->pic_rank));
  return r;
}

inline Polynomial lift_append(const Polynomial& p, const RingPtr& big) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.resize(big->nvars(), 0);
    ts.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(big, std::move(ts));
}

// Keeps exactly the variables in `keep` (in their original relative order),
// mapping into `target`; every term must be supported on kept variables.
inline Polynomial project(const Polynomial& p, const std::vector<int>& keep,
                          const RingPtr& target) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars(), 0);
    Monomial check = t.mono;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      m[k] = t.mono[keep[k]];
      check[keep[k]] = 0;
    }
    if (!mono_is_one(check))
      throw std::logic_error("projection hit an eliminated variable");
    ts.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(target, std::move(ts));
}

}  // namespace workspace

// Generators of I written in the variables outside `eliminated`, i.e. of the
// elimination ideal I ∩ k[kept vars], still expressed in the ambient ring.
inline std::vector<Polynomial> eliminate_raw(const RingPtr& ring,
                                             const std::vector<Polynomial>& gens,
                                             const std::vector<bool>& eliminated) {
  // fast path: a monomial ideal meets the subring in its subring generators
  bool monomial = true;
  for (const auto& g : gens)
    if (!g.is_single_term()) monomial = false;
  if (monomial) {
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
      const Monomial& m = g.terms()[0].mono;
      bool uses = false;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0 && eliminated[i]) uses = true;
      if (!uses) kept.push_back(m);
    }
    std::vector<Polynomial> out;
    for (auto& m : minimalize_monomials(std::move(kept)))
      out.push_back(Polynomial::monomial(ring, m));
    return out;
  }

  MonomialOrder o = MonomialOrder::elimination(eliminated, ring->nvars());
  std::vector<gb::WPoly> w;
  for (const auto& g : gens) w.push_back(gb::to_wpoly(g, o));
  auto basis = gb::reduce_basis(gb::buchberger(std::move(w), o), o);
  std::vector<Polynomial> out;
  for (const auto& b : basis) {
    bool uses = false;
    for (const auto& t : b.t)
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        if (t.mono[i] > 0 && eliminated[i]) uses = true;
    if (!uses) out.push_back(gb::from_wpoly(ring, b));
  }
  return out;
}

inline Ideal eliminate(const Ideal& I, const std::vector<bool>& eliminated) {
  return make_ideal_split(I.ring(), eliminate_raw(I.ring(), I.generators(), eliminated));
}

// ---------------------------------------------------------------------------
// Intersection, colon, saturation, radical membership
// ---------------------------------------------------------------------------

inline Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.ring()->signature() != J.ring()->signature())
    throw std::invalid_argument("intersect: ring mismatch");
  if (I.is_monomial() && J.is_monomial()) {
    std::vector<Monomial> out;
    for (const auto& a : I.monomial_generators())
      for (const auto& b : J.monomial_generators())
        out.push_back(mono_lcm(a, b));
    return monomial_ideal(I.ring(), std::move(out));
  }
  RingPtr big = workspace::augment(I.ring(), "_t");
  int tvar = static_cast<int>(big->nvars()) - 1;
  Polynomial t = Polynomial::variable(big, tvar);
  Polynomial one = Polynomial::monomial(big, mono_one(big->nvars()));
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * workspace::lift_append(f, big));
  for (const auto& g : J.generators())
    gens.push_back((one - t) * workspace::lift_append(g, big));
  std::vector<bool> elim(big->nvars(), false);
  elim[tvar] = true;
  auto raw = eliminate_raw(big, gens, elim);
  std::vector<int> keep(I.ring()->nvars());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
  std::vector<Polynomial> out;
  for (const auto& p : raw) out.push_back(workspace::project(p, keep, I.ring()));
  return make_ideal_split(I.ring(), out);
}

// (I : f) for homogeneous nonzero f, via (I ∩ (f)) / f.
inline Ideal colon(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by zero");
  if (I.is_monomial() && f.is_single_term()) {
    const Monomial& m = f.terms()[0].mono;
    std::vector<Monomial> out;
    for (const auto& g : I.monomial_generators())
      out.push_back(mono_div(g, mono_gcd(g, m)));
    return monomial_ideal(I.ring(), std::move(out));
  }
  Ideal fi(I.ring(), {f});
  Ideal meet = intersect(I, fi);
  // divide each generator by f: g = q*f exactly
  std::vector<Polynomial> out;
  const MonomialOrder o = I.ring()->default_order();
  std::vector<gb::WPoly> fb = {gb::to_wpoly(f, o)};
  for (const auto& g : meet.generators()) {
    gb::WPoly h = gb::to_wpoly(g, o);
    std::vector<Term> q;
    while (!h.zero()) {
      if (!mono_divides(fb[0].lm(), h.lm()))
        throw std::logic_error("colon: inexact division");
      Rat c = h.lc() / fb[0].lc();
      Monomial m = mono_div(h.lm(), fb[0].lm());
      q.push_back({c, m});
      gb::sub_mul(h, c, m, fb[0], o);
    }
    out.push_back(Polynomial(I.ring(), std::move(q)));
  }
  return make_ideal_split(I.ring(), out);
}

// (I : f^∞) by the auxiliary-variable trick: eliminate t from I + (t*f - 1).
inline Ideal saturate_by_poly(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  if (I.is_monomial() && f.is_single_term()) {
    const Monomial& m = f.terms()[0].mono;
    std::vector<Monomial> out;
    for (auto g : I.monomial_generators()) {
      for (std::size_t i = 0; i < g.size(); ++i)
        if (m[i] > 0) g[i] = 0;
      out.push_back(std::move(g));
    }
    return monomial_ideal(I.ring(), std::move(out));
  }
  RingPtr big = workspace::augment(I.ring(), "_t");
  int tvar = static_cast<int>(big->nvars()) - 1;
  Polynomial t = Polynomial::variable(big, tvar);
  Polynomial one = Polynomial::monomial(big, mono_one(big->nvars()));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(workspace::lift_append(g, big));
  gens.push_back(t * workspace::lift_append(f, big) - one);
  std::vector<bool> elim(big->nvars(), false);
  elim[tvar] = true;
  auto raw = eliminate_raw(big, gens, elim);
  std::vector<int> keep(I.ring()->nvars());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
  std::vector<Polynomial> out;
  for (const auto& p : raw) out.push_back(workspace::project(p, keep, I.ring()));
  return make_ideal_split(I.ring(), out);
}

// (I : B(X)^∞) = ∩_g (I : g^∞) over the monomial generators of B(X).
inline Ideal saturate_irrelevant(const Ideal& I) {
  auto cox = as_cox(I.ring());
  std::optional<Ideal> acc;
  for (const auto& g : cox->irrelevant_generators) {
    Ideal s = saturate_by_poly(I, Polynomial::monomial(I.ring(), g));
    acc = acc ? intersect(*acc, s) : s;
  }
  return *acc;
}

// f ∈ √I, decided by 1 ∈ I + (t·f − 1).
inline bool radical_membership(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  if (I.is_monomial() && f.is_single_term()) {
    // x^u ∈ √I  iff some generator's support is contained in supp(u)
    const Monomial& u = f.terms()[0].mono;
    for (const auto& g : I.monomial_generators()) {
      bool inside = true;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > 0 && u[i] == 0) inside = false;
      if (inside) return true;
    }
    return false;
  }
  RingPtr big = workspace::augment(I.ring(), "_t");
  int tvar = static_cast<int>(big->nvars()) - 1;
  Polynomial t = Polynomial::variable(big, tvar);
  Polynomial one = Polynomial::monomial(big, mono_one(big->nvars()));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(workspace::lift_append(g, big));
  gens.push_back(t * workspace::lift_append(f, big) - one);
  MonomialOrder o = MonomialOrder::grevlex(big->nvars());
  std::vector<gb::WPoly> w;
  for (const auto& g : gens) w.push_back(gb::to_wpoly(g, o));
  auto basis = gb::buchberger(std::move(w), o);
  for (const auto& b : basis)
    if (!b.zero() && mono_is_one(b.lm())) return true;
  return false;
}

// Drops generators contained in the ideal of the remaining ones.
inline Ideal minimalize(const Ideal& I) {
  if (I.is_monomial())
    return monomial_ideal(I.ring(), I.monomial_generators());
  std::vector<Polynomial> kept = I.generators();
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (membership(kept[i], Ideal(I.ring(), others))) kept.erase(kept.begin() + i);
  }
  return Ideal(I.ring(), std::move(kept));
}

}  // namespace slip

#endif
