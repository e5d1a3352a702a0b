#ifndef SLIP_HILBERT_HPP
#define SLIP_HILBERT_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "slip/graded.hpp"
#include "slip/groebner.hpp"
#include "slip/ring.hpp"

namespace slip {

// Finite verification window in Pic(X), iterated lexicographically.
struct DegreeBox {
  MultiDegree lower, upper;

  DegreeBox(MultiDegree lo, MultiDegree hi) : lower(std::move(lo)), upper(std::move(hi)) {
    lower.check_same_rank(upper);
    if (!lower.leq(upper)) throw std::invalid_argument("degree box is empty");
  }

  static DegreeBox cube(std::size_t rank, long lo, long hi) {
    return DegreeBox(MultiDegree(std::vector<long>(rank, lo)),
                     MultiDegree(std::vector<long>(rank, hi)));
  }

  std::vector<MultiDegree> degrees() const {
    std::vector<MultiDegree> out;
    MultiDegree cur = lower;
    while (true) {
      out.push_back(cur);
      std::size_t i = cur.size();
      while (i-- > 0) {
        if (cur[i] < upper[i]) {
          ++cur[i];
          for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = lower[j];
          break;
        }
        if (i == 0) return out;
      }
    }
  }
};

// h_{r,X}(D) = min(dim S_D, r): the Hilbert function of r general points.
inline long h_target(const CoxRing& ring, long r, const MultiDegree& d) {
  if (r < 1) throw std::invalid_argument("h_target needs r >= 1");
  return std::min(ring.dim_graded_piece(d), r);
}

// dim (S/I)_D = dim S_D − #{degree-D monomials in in(I)}.
inline long hf_quotient(const Ideal& I, const MultiDegree& d,
                        std::optional<MonomialOrder> order = std::nullopt) {
  const Ring& ring = *I.ring();
  MonomialOrder o = order ? *order : ring.default_order();
  GradedFrame frame = GradedFrame::make(I.ring(), d, o);
  if (I.is_zero_ideal()) return static_cast<long>(frame.dim());
  auto lms = I.leading_monomials(o);
  return static_cast<long>(frame.dim()) - count_monomials_in(lms, frame);
}

struct HfReportEntry {
  MultiDegree degree;
  long hf;
  long target;
};

struct HfReport {
  bool ok = true;
  DegreeBox window;
  std::vector<HfReportEntry> values;
  std::optional<MultiDegree> first_failure;
};

// Window-verified comparison against h_{r,X}; the report states the window
// rather than claiming a global certificate.
inline HfReport hf_matches_target(const Ideal& I, long r, const DegreeBox& box) {
  auto cox = as_cox(I.ring());
  HfReport rep{true, box, {}, std::nullopt};
  for (const auto& d : box.degrees()) {
    long hf = hf_quotient(I, d);
    long tg = h_target(*cox, r, d);
    rep.values.push_back({d, hf, tg});
    if (hf != tg && !rep.first_failure) {
      rep.ok = false;
      rep.first_failure = d;
    }
  }
  return rep;
}

// Default verification window: (r,...,r) plus the componentwise max generator
// degree.
inline DegreeBox default_box(const Ideal& I, long r) {
  const int p = I.ring()->pic_rank;
  MultiDegree maxgen = MultiDegree::zero(p);
  for (const auto& g : I.generators()) {
    auto d = g.homogeneous_degree();
    if (d) maxgen = join(maxgen, *d);
  }
  MultiDegree hi = maxgen;
  for (int i = 0; i < p; ++i) hi[i] += r;
  return DegreeBox(MultiDegree::zero(p), hi);
}

}  // namespace slip

#endif
