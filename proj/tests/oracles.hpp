#ifndef SLIP_TESTS_ORACLES_HPP
#define SLIP_TESTS_ORACLES_HPP

// Independent dense-linear-algebra oracles.  Everything here works directly
// with spanning sets of graded pieces and never touches the Groebner or
// syzygy machinery it is used to check.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "slip/graded.hpp"
#include "slip/polynomial.hpp"
#include "slip/ring.hpp"

namespace slip::oracle {

inline std::vector<MultiDegree> all_degrees_upto(const MultiDegree& top) {
  std::vector<MultiDegree> out;
  MultiDegree cur = MultiDegree::zero(top.size());
  while (true) {
    out.push_back(cur);
    std::size_t i = cur.size();
    bool done = true;
    while (i-- > 0) {
      if (cur[i] < top[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = 0;
        done = false;
        break;
      }
    }
    if (done) return out;
  }
}

// f ∈ I for homogeneous f: f must lie in the span of {m * g} in its degree.
inline bool membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  auto d = f.homogeneous_degree();
  if (!d) throw std::invalid_argument("oracle membership needs homogeneous input");
  GradedFrame frame = GradedFrame::make(f.ring(), *d, f.ring()->default_order());
  QMat rows = graded_piece_matrix(gens, frame);
  std::vector<int> pivots;
  {
    QMat tmp = rows;
    pivots = rref(tmp);
  }
  return in_row_span(rows, pivots, frame.to_row(f));
}

// dim Hom_S(J, S/J)_0 for a monomial ideal, by enumerating generator images
// degreewise and solving the full linear system with no syzygy preprocessing.
// Relations among the spanning products m*g_j are harvested from every degree
// up to the join of the pairwise lcms; a generating set of first syzygies of
// a monomial ideal lives below that join, so the harvested constraints cut
// out exactly the module maps.
inline long hom_dim(const RingPtr& ring, const std::vector<Monomial>& gens) {
  auto in_ideal = [&](const Monomial& m) {
    for (const auto& g : gens)
      if (mono_divides(g, m)) return true;
    return false;
  };

  std::vector<MultiDegree> gdeg;
  for (const auto& g : gens) gdeg.push_back(ring->degree_of(g));
  std::vector<std::vector<Monomial>> std_mono(gens.size());
  std::vector<int> offset(gens.size());
  int total = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    offset[j] = total;
    for (const auto& m : ring->enumerate_monomials(gdeg[j]))
      if (!in_ideal(m)) std_mono[j].push_back(m);
    total += static_cast<int>(std_mono[j].size());
  }
  if (total == 0) return 0;

  MultiDegree top = MultiDegree::zero(ring->pic_rank);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      top = join(top, ring->degree_of(mono_lcm(gens[i], gens[j])));

  SparseReducer red;
  for (const auto& d : all_degrees_upto(top)) {
    GradedFrame frame = GradedFrame::make(ring, d, ring->default_order());
    if (frame.dim() == 0) continue;
    std::vector<std::pair<std::size_t, Monomial>> labels;
    QMat span;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      MultiDegree shift = d - gdeg[j];
      if (!shift.nonneg()) continue;
      for (const auto& m : ring->enumerate_monomials(shift)) {
        QRow row(frame.dim(), Rat(0));
        row[frame.index.at(mono_mul(m, gens[j]))] = 1;
        labels.emplace_back(j, m);
        span.push_back(std::move(row));
      }
    }
    if (span.size() < 2) continue;
    QMat tr(frame.dim(), QRow(span.size(), Rat(0)));
    for (std::size_t c = 0; c < span.size(); ++c)
      for (std::size_t r = 0; r < span[c].size(); ++r) tr[r][c] = span[c][r];
    for (const auto& rel : nullspace(std::move(tr), span.size())) {
      // sum_c rel_c m_c psi_{j_c} must vanish in (S/J); one constraint row per
      // surviving target monomial
      std::map<Monomial, std::map<int, Rat>> per_target;
      for (std::size_t c = 0; c < rel.size(); ++c) {
        if (is_zero(rel[c])) continue;
        auto [j, m] = labels[c];
        for (std::size_t t = 0; t < std_mono[j].size(); ++t) {
          Monomial prod = mono_mul(m, std_mono[j][t]);
          if (in_ideal(prod)) continue;
          per_target[prod][offset[j] + static_cast<int>(t)] += rel[c];
        }
      }
      for (const auto& [mono, entries] : per_target) {
        SparseReducer::Row r;
        for (const auto& [col, v] : entries)
          if (!is_zero(v)) r.emplace_back(col, v);
        if (!r.empty()) red.add_row(std::move(r));
      }
    }
  }
  return total - static_cast<long>(red.rank());
}

// Degreewise preimage {f in S_a : phi(f) in I_{phi(a)}} dimension, computed by
// dense kernels; used against the graph-elimination path.
inline long preimage_piece_dim(const std::vector<Polynomial>& target_gens,
                               const RingPtr& source, const RingPtr& target,
                               const std::function<Polynomial(const Polynomial&)>& apply,
                               const std::function<MultiDegree(const MultiDegree&)>& push,
                               const MultiDegree& a) {
  GradedFrame fs = GradedFrame::make(source, a, source->default_order());
  if (fs.dim() == 0) return 0;
  GradedFrame ft = GradedFrame::make(target, push(a), target->default_order());
  QMat ispan = graded_piece_matrix(target_gens, ft);
  std::vector<int> ipiv;
  {
    QMat tmp = ispan;
    ipiv = rref(tmp);
  }
  // residues of phi(monomial) mod I span; kernel = preimage piece
  QMat residues(ft.dim(), QRow(fs.dim(), Rat(0)));
  for (std::size_t c = 0; c < fs.dim(); ++c) {
    QRow v = ft.to_row(apply(Polynomial::monomial(source, fs.monomials[c])));
    for (std::size_t i = 0; i < ipiv.size(); ++i) {
      Rat coef = v[ipiv[i]];
      if (is_zero(coef)) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= coef * ispan[i][k];
    }
    for (std::size_t r = 0; r < ft.dim(); ++r) residues[r][c] = v[r];
  }
  return static_cast<long>(nullspace(std::move(residues), fs.dim()).size());
}

}  // namespace slip::oracle

#endif
