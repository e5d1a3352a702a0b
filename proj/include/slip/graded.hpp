#ifndef SLIP_GRADED_HPP
#define SLIP_GRADED_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "slip/groebner.hpp"
#include "slip/linalg.hpp"
#include "slip/polynomial.hpp"

namespace slip {

// Coordinates on one graded piece S_D: a fixed monomial basis (descending in
// the given order) with positional indexing.
struct GradedFrame {
  RingPtr ring;
  MultiDegree degree;
  std::vector<Monomial> monomials;
  std::map<Monomial, int> index;

  static GradedFrame make(const RingPtr& ring, const MultiDegree& d,
                          const MonomialOrder& order) {
    GradedFrame f;
    f.ring = ring;
    f.degree = d;
    f.monomials = ring->monomials_of_degree(d, order);
    for (std::size_t i = 0; i < f.monomials.size(); ++i)
      f.index[f.monomials[i]] = static_cast<int>(i);
    return f;
  }

  std::size_t dim() const { return monomials.size(); }

  QRow to_row(const Polynomial& p) const {
    QRow r(monomials.size(), Rat(0));
    for (const auto& t : p.terms()) {
      auto it = index.find(t.mono);
      if (it == index.end())
        throw std::invalid_argument("polynomial not in graded piece " + degree.str());
      r[it->second] = t.coeff;
    }
    return r;
  }

  Polynomial to_poly(const QRow& r) const {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!is_zero(r[i])) ts.push_back({r[i], monomials[i]});
    return Polynomial(ring, std::move(ts));
  }
};

// Row-reduced basis of the degree-D piece of the ideal generated by `gens`,
// as coordinates in `frame`.  Spanning vectors are monomial multiples m*g.
inline QMat graded_piece_matrix(const std::vector<Polynomial>& gens,
                                const GradedFrame& frame) {
  QMat rows;
  for (const auto& g : gens) {
    auto gd = g.homogeneous_degree();
    if (!gd) {
      if (g.is_zero()) continue;
      throw std::invalid_argument("graded piece of inhomogeneous generator");
    }
    MultiDegree shift = frame.degree - *gd;
    if (!shift.nonneg()) continue;
    for (const auto& m : frame.ring->enumerate_monomials(shift))
      rows.push_back(frame.to_row(g.mul_term(Rat(1), m)));
  }
  rref(rows);
  return rows;
}

inline long graded_piece_dim(const std::vector<Polynomial>& gens, const GradedFrame& frame) {
  return static_cast<long>(graded_piece_matrix(gens, frame).size());
}

inline std::vector<Polynomial> graded_piece_basis(const std::vector<Polynomial>& gens,
                                                  const GradedFrame& frame) {
  std::vector<Polynomial> out;
  for (const auto& r : graded_piece_matrix(gens, frame)) out.push_back(frame.to_poly(r));
  return out;
}

// Monomials of degree D lying in the monomial ideal with the given leading
// monomials; counting these against the frame gives dim I_D through in(I).
inline long count_monomials_in(const std::vector<Monomial>& lms, const GradedFrame& frame) {
  long n = 0;
  for (const auto& m : frame.monomials)
    for (const auto& l : lms)
      if (mono_divides(l, m)) {
        ++n;
        break;
      }
  return n;
}

// Standard monomials: degree-D monomials outside in(I).
inline std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lms,
                                                const GradedFrame& frame) {
  std::vector<Monomial> out;
  for (const auto& m : frame.monomials) {
    bool inside = false;
    for (const auto& l : lms)
      if (mono_divides(l, m)) {
        inside = true;
        break;
      }
    if (!inside) out.push_back(m);
  }
  return out;
}

}  // namespace slip

#endif
