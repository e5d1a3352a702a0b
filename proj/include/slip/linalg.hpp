#ifndef SLIP_LINALG_HPP
#define SLIP_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "slip/rational.hpp"

namespace slip {

// Dense exact linear algebra over Q.  Matrices are row vectors; everything is
// small enough here that fraction arithmetic with GMP is the simplest correct
// choice.
using QRow = std::vector<Rat>;
using QMat = std::vector<QRow>;

// In-place reduced row echelon form.  Returns the pivot columns.
inline std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t ncols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = 1 / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || is_zero(m[i][col])) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

// Basis of {x : M x = 0}, one row per basis vector.
inline QMat nullspace(QMat m, std::size_t ncols) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMat basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QRow v(ncols, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Does `v` lie in the row span of the already-reduced matrix `m`?
inline bool in_row_span(const QMat& m, const std::vector<int>& pivots, QRow v) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rat& c = v[pivots[i]];
    if (is_zero(c)) continue;
    Rat f = c;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * m[i][j];
  }
  for (const Rat& c : v)
    if (!is_zero(c)) return false;
  return true;
}

// Incremental sparse echelon form, used for the large-but-sparse rank
// computations in the tangent-space criteria.  Rows are (column, coeff) pairs
// with strictly increasing columns.
class SparseReducer {
 public:
  using Row = std::vector<std::pair<int, Rat>>;

  // Reduces the row against the current basis; if a nonzero remainder is left
  // it becomes a new pivot row.  Returns true when the row was independent.
  bool add_row(Row r) {
    reduce(r);
    if (r.empty()) return false;
    Rat inv = 1 / r.front().second;
    for (auto& e : r) e.second *= inv;
    int pc = r.front().first;
    rows_[pc] = std::move(r);
    return true;
  }

  bool reduces_to_zero(Row r) const {
    reduce(r);
    return r.empty();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(Row& r) const {
    while (!r.empty()) {
      auto it = rows_.find(r.front().first);
      if (it == rows_.end()) return;
      axpy(r, -r.front().second, it->second);
    }
  }

  // r += c * s, keeping columns sorted and dropping zeros.
  static void axpy(Row& r, const Rat& c, const Row& s) {
    Row out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
      if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
        out.push_back(r[i++]);
      } else if (i == r.size() || s[j].first < r[i].first) {
        Rat v = c * s[j].second;
        if (!is_zero(v)) out.emplace_back(s[j].first, std::move(v));
        ++j;
      } else {
        Rat v = r[i].second + c * s[j].second;
        if (!is_zero(v)) out.emplace_back(r[i].first, std::move(v));
        ++i, ++j;
      }
    }
    r = std::move(out);
  }

  std::map<int, Row> rows_;  // pivot column -> normalized row
};

}  // namespace slip

#endif
