#ifndef SLIP_DUALSPACE_HPP
#define SLIP_DUALSPACE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "slip/graded.hpp"
#include "slip/groebner.hpp"

namespace slip {

// Contraction action of S on the graded dual ring: a_i ⌟ x^u is x^{u-e_i}, or
// zero when u_i = 0.  Coefficient-free pairing: <x^u, dual x^u> = 1.
inline std::optional<Monomial> contract(int var, const Monomial& dual) {
  if (dual[var] == 0) return std::nullopt;
  Monomial r = dual;
  --r[var];
  return r;
}

// Subspace of S*_k over the monomial dual basis, rows in reduced echelon form.
struct DualSpaceBasis {
  long degree = 0;
  GradedFrame frame;  // dual monomials, descending in the chosen order
  QMat rows;          // RREF

  std::size_t dim() const { return rows.size(); }
};

namespace detail {
inline GradedFrame dual_frame(const RingPtr& ring, long k, const MonomialOrder& order) {
  if (ring->pic_rank != 1)
    throw std::invalid_argument("dual space requires a standard-graded ring");
  return GradedFrame::make(ring, MultiDegree{k}, order);
}
}  // namespace detail

// perp(I, k) = {F in S*_k : <g, F> = 0 for all g in I_k}.
inline DualSpaceBasis perp(const Ideal& I, long k, const MonomialOrder& order) {
  GradedFrame frame = detail::dual_frame(I.ring(), k, order);
  QMat ik = graded_piece_matrix(I.generators(), frame);
  DualSpaceBasis d;
  d.degree = k;
  d.frame = frame;
  d.rows = nullspace(std::move(ik), frame.dim());
  rref(d.rows);
  return d;
}

// Annihilator of a dual subspace back in S_k.
inline std::vector<Polynomial> perp_of_dual(const DualSpaceBasis& w) {
  QMat ns = nullspace(w.rows, w.frame.dim());
  rref(ns);
  std::vector<Polynomial> out;
  for (const auto& row : ns) out.push_back(w.frame.to_poly(row));
  return out;
}

// Image S_1 ⌟ V inside S*_{k-1}, as RREF rows over the degree-(k-1) frame.
inline QMat contract_space(const DualSpaceBasis& v, const GradedFrame& lower) {
  QMat rows;
  const std::size_t nvars = v.frame.ring->nvars();
  for (const auto& r : v.rows) {
    for (std::size_t var = 0; var < nvars; ++var) {
      QRow out(lower.dim(), Rat(0));
      bool nonzero = false;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (is_zero(r[c])) continue;
        auto m = contract(static_cast<int>(var), v.frame.monomials[c]);
        if (!m) continue;
        out[lower.index.at(*m)] += r[c];
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(out));
    }
  }
  rref(rows);
  return rows;
}

}  // namespace slip

#endif
