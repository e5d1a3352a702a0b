#ifndef SLIP_DEGREESET_HPP
#define SLIP_DEGREESET_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "slip/groebner.hpp"
#include "slip/multidegree.hpp"
#include "slip/ring.hpp"

namespace slip {

// Finitely generated upward-closed subset of N^p: D is a member when some
// antichain generator is componentwise <= D.
struct DegreeSet {
  std::vector<MultiDegree> minimal_generators;  // antichain
  int rank = 0;

  static DegreeSet empty(int rank) {
    DegreeSet s;
    s.rank = rank;
    return s;
  }

  static DegreeSet all(int rank) {
    DegreeSet s;
    s.rank = rank;
    s.minimal_generators = {MultiDegree::zero(rank)};
    return s;
  }

  static DegreeSet upward(std::vector<MultiDegree> gens, int rank) {
    DegreeSet s;
    s.rank = rank;
    // keep an antichain: drop generators dominating another
    std::sort(gens.begin(), gens.end());
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) != rank)
        throw std::invalid_argument("degree set generator of wrong rank");
      bool covered = false;
      for (const auto& k : s.minimal_generators)
        if (k.leq(g)) {
          covered = true;
          break;
        }
      if (!covered) s.minimal_generators.push_back(g);
    }
    return s;
  }

  bool contains(const MultiDegree& d) const {
    for (const auto& g : minimal_generators)
      if (g.leq(d)) return true;
    return false;
  }

  bool is_empty() const { return minimal_generators.empty(); }
  bool is_all() const {
    return minimal_generators.size() == 1 &&
           minimal_generators[0] == MultiDegree::zero(rank);
  }

  // A ⊆ B iff every generator of A is a member of B.
  bool subset_of(const DegreeSet& other) const {
    for (const auto& g : minimal_generators)
      if (!other.contains(g)) return false;
    return true;
  }
};

// Minimal monomial generators of the ideal (S_A) spanned by all graded pieces
// with degree in A.  A monomial is a minimal generator exactly when its degree
// lies in A and stripping any single variable leaves A (stripping whole
// divisors factors through single strips because A is upward closed).
inline std::vector<Monomial> degree_set_monomial_generators(const CoxRing& ring,
                                                            const DegreeSet& a) {
  std::vector<Monomial> out;
  if (a.is_empty()) return out;
  if (ring.family != Family::Hirzebruch) {
    // unit variable degrees: generators are exactly the monomials at the
    // antichain degrees
    for (const auto& u : a.minimal_generators)
      for (auto& m : ring.enumerate_monomials(u)) out.push_back(std::move(m));
    return minimalize_monomials(std::move(out));
  }
  // Hirzebruch: bounded exponent search.  If m is minimal then for each
  // variable v | m some coordinate i has deg(v)_i > deg(m)_i - u_i for every
  // antichain u <= deg(m); this caps every exponent by maxc + a + 2.
  long maxc = 0;
  for (const auto& u : a.minimal_generators)
    maxc = std::max({maxc, u[0], u[1]});
  const long bound = maxc + ring.hirzebruch_a + 2;
  Monomial m(4, 0);
  for (long e1 = 0; e1 <= bound; ++e1)
    for (long e2 = 0; e2 <= bound; ++e2)
      for (long e3 = 0; e3 <= bound; ++e3)
        for (long e4 = 0; e4 <= bound; ++e4) {
          m[0] = static_cast<int>(e1);
          m[1] = static_cast<int>(e2);
          m[2] = static_cast<int>(e3);
          m[3] = static_cast<int>(e4);
          MultiDegree d = ring.degree_of(m);
          if (!a.contains(d)) continue;
          bool minimal = true;
          for (int v = 0; v < 4 && minimal; ++v) {
            if (m[v] == 0) continue;
            if (a.contains(d - ring.degrees[v])) minimal = false;
          }
          if (minimal) out.push_back(m);
        }
  return minimalize_monomials(std::move(out));
}

}  // namespace slip

#endif
