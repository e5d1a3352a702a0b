#ifndef SLIP_RING_HPP
#define SLIP_RING_HPP

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "slip/monomial.hpp"
#include "slip/multidegree.hpp"
#include "slip/order.hpp"

namespace slip {

// Plain multigraded polynomial ring: named variables with degrees in Z^p.
// Workspace rings (graph rings for preimages, auxiliary saturation variables)
// are plain Rings; the toric families below add the Cox-ring data.
struct Ring {
  std::vector<std::string> names;    // canonical names x{block}_{index}
  std::vector<std::string> aliases;  // optional short names ("" if none)
  std::vector<int> block;            // block index per variable
  std::vector<MultiDegree> degrees;  // per-variable degree, rank = pic_rank
  int pic_rank = 0;

  virtual ~Ring() = default;

  std::size_t nvars() const { return names.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name || (!aliases[i].empty() && aliases[i] == name))
        return static_cast<int>(i);
    return -1;
  }

  MultiDegree degree_of(const Monomial& m) const {
    MultiDegree d = MultiDegree::zero(pic_rank);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < pic_rank; ++k) d[k] += m[i] * degrees[i][k];
    return d;
  }

  std::string signature() const {
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i)
      s += names[i] + ":" + degrees[i].str() + ";";
    return s;
  }

  MonomialOrder default_order() const { return MonomialOrder::grevlex(nvars()); }

  // All monomials of degree D, unsorted.  Requires every variable to have a
  // nonzero nonnegative degree (true for all Cox rings here); workspace rings
  // never call this.
  std::vector<Monomial> enumerate_monomials(const MultiDegree& d) const {
    if (static_cast<int>(d.size()) != pic_rank)
      throw std::invalid_argument("degree rank does not match ring");
    std::vector<Monomial> out;
    if (!d.nonneg()) return out;
    Monomial cur(nvars(), 0);
    enumerate_rec(d, 0, cur, out);
    return out;
  }

  std::vector<Monomial> monomials_of_degree(const MultiDegree& d,
                                            const MonomialOrder& order) const {
    auto ms = enumerate_monomials(d);
    std::sort(ms.begin(), ms.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return ms;
  }

  virtual long dim_graded_piece(const MultiDegree& d) const {
    return static_cast<long>(enumerate_monomials(d).size());
  }

 private:
  void enumerate_rec(const MultiDegree& rem, std::size_t var, Monomial& cur,
                     std::vector<Monomial>& out) const {
    if (var == nvars()) {
      for (std::size_t k = 0; k < rem.size(); ++k)
        if (rem[k] != 0) return;
      out.push_back(cur);
      return;
    }
    const MultiDegree& dv = degrees[var];
    long max_e = -1;  // -1 = unbounded until a positive coordinate caps it
    for (std::size_t k = 0; k < dv.size(); ++k) {
      if (dv[k] > 0) {
        long cap = rem[k] / dv[k];
        max_e = max_e < 0 ? cap : std::min(max_e, cap);
      }
    }
    if (max_e < 0)
      throw std::logic_error("variable with zero degree in graded enumeration");
    for (long e = 0; e <= max_e; ++e) {
      cur[var] = static_cast<int>(e);
      MultiDegree next = rem;
      bool ok = true;
      for (std::size_t k = 0; k < next.size(); ++k) {
        next[k] -= e * dv[k];
        if (next[k] < 0) ok = false;
      }
      if (ok) enumerate_rec(next, var + 1, cur, out);
    }
    cur[var] = 0;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

enum class Family { Projective, ProductProjective, Hirzebruch };

// Cox ring of one of the built-in toric families, graded by Pic(X) in the
// bases fixed once and for all: standard basis for (products of) projective
// spaces, (D3, D4) for the Hirzebruch surface.
struct CoxRing : Ring {
  Family family = Family::Projective;
  std::vector<int> ns;  // block sizes n_i for (products of) projective spaces
  long hirzebruch_a = 0;
  int dim_x = 0;
  std::vector<Monomial> irrelevant_generators;
  std::vector<MultiDegree> nef_generators;

  bool effective(const MultiDegree& d) const {
    if (static_cast<int>(d.size()) != pic_rank)
      throw std::invalid_argument("degree rank does not match ring");
    return d.nonneg();  // all built-in families have Eff(X) = N^p
  }

  bool nef(const MultiDegree& d) const {
    if (family == Family::Hirzebruch)
      return d[1] >= 0 && d[0] >= hirzebruch_a * d[1];
    return effective(d);
  }

  long dim_graded_piece(const MultiDegree& d) const override {
    if (static_cast<int>(d.size()) != pic_rank)
      throw std::invalid_argument("degree rank does not match ring");
    if (!d.nonneg()) return 0;
    if (family == Family::Projective || family == Family::ProductProjective) {
      long dim = 1;
      for (std::size_t i = 0; i < ns.size(); ++i) dim *= binom(ns[i] + d[i], ns[i]);
      return dim;
    }
    // Hirzebruch: count (e1,e2,e3,e4) with e1+a*e2+e3 = d0, e2+e4 = d1.
    long dim = 0;
    for (long e2 = 0; e2 <= d[1]; ++e2) {
      long rest = d[0] - hirzebruch_a * e2;
      if (rest >= 0) dim += rest + 1;
    }
    return dim;
  }

  static long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
};

using CoxPtr = std::shared_ptr<const CoxRing>;

inline CoxPtr as_cox(const RingPtr& r) {
  auto c = std::dynamic_pointer_cast<const CoxRing>(r);
  if (!c) throw std::invalid_argument("operation requires a Cox ring");
  return c;
}

namespace detail {
inline std::string block_alias_letter(int i, int nblocks) {
  static const char* letters = "abgd";  // alpha, beta, gamma, delta
  if (nblocks <= 4) return std::string(1, letters[i]);
  return "";
}
}  // namespace detail

// P^{n_1} x ... x P^{n_d}.  Block i has variables x{i}_0..x{i}_{n_i} of degree
// e_i, with paper-style aliases a0.., b0.., g0.. when d <= 4.
inline CoxPtr make_product_projective(const std::vector<int>& ns) {
  if (ns.empty()) throw std::invalid_argument("empty product");
  auto r = std::make_shared<CoxRing>();
  r->family = ns.size() == 1 ? Family::Projective : Family::ProductProjective;
  r->ns = ns;
  r->pic_rank = static_cast<int>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw std::invalid_argument("factor dimension must be >= 1");
    std::string letter = detail::block_alias_letter(static_cast<int>(i), static_cast<int>(ns.size()));
    for (int j = 0; j <= ns[i]; ++j) {
      r->names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      r->aliases.push_back(letter.empty() ? "" : letter + std::to_string(j));
      r->block.push_back(static_cast<int>(i));
      MultiDegree d = MultiDegree::zero(r->pic_rank);
      d[i] = 1;
      r->degrees.push_back(d);
    }
    r->dim_x += ns[i];
  }
  // B(X) = product of the block ideals = (all degree-(1,...,1) monomials).
  MultiDegree ones(std::vector<long>(ns.size(), 1));
  r->irrelevant_generators = r->enumerate_monomials(ones);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    MultiDegree e = MultiDegree::zero(r->pic_rank);
    e[i] = 1;
    r->nef_generators.push_back(e);
  }
  return r;
}

inline CoxPtr make_projective(int n) { return make_product_projective({n}); }

// P^k with variables aliased t1..t{k+1}; target of the Segre-type embeddings.
inline CoxPtr make_projective_t(int k) {
  auto base = make_product_projective({k});
  auto r = std::make_shared<CoxRing>(*base);
  for (int j = 0; j <= k; ++j) r->aliases[j] = "t" + std::to_string(j + 1);
  return r;
}

// Hirzebruch surface H_a with Pic basis (D3, D4): variables a1..a4 of degrees
// (1,0), (a,1), (1,0), (0,1); B(X) = (a1 a2, a2 a3, a3 a4, a4 a1).
inline CoxPtr make_hirzebruch(long a) {
  if (a < 0) throw std::invalid_argument("Hirzebruch parameter must be >= 0");
  auto r = std::make_shared<CoxRing>();
  r->family = Family::Hirzebruch;
  r->hirzebruch_a = a;
  r->pic_rank = 2;
  r->dim_x = 2;
  const MultiDegree degs[4] = {{1, 0}, {a, 1}, {1, 0}, {0, 1}};
  for (int j = 0; j < 4; ++j) {
    r->names.push_back("x0_" + std::to_string(j));
    r->aliases.push_back("a" + std::to_string(j + 1));
    r->block.push_back(0);
    r->degrees.push_back(degs[j]);
  }
  auto pair = [&](int i, int j) {
    Monomial m(4, 0);
    m[i] = 1;
    m[j] = 1;
    return m;
  };
  r->irrelevant_generators = {pair(0, 1), pair(1, 2), pair(2, 3), pair(3, 0)};
  r->nef_generators = {MultiDegree{1, 0}, MultiDegree{a, 1}};
  return r;
}

}  // namespace slip

#endif
