#include "spoly.hpp"

#include <algorithm>

#include "matrix.hpp"

namespace gencomm {

namespace {

// Cofactor expansion along the first row; fine at minor sizes this path sees.
SPoly det_rec(const std::vector<std::vector<const SPoly*>>& m) {
  const size_t n = m.size();
  if (n == 1) return *m[0][0];
  SPoly acc;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j]->is_zero()) continue;
    std::vector<std::vector<const SPoly*>> sub(n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t t = 0; t < n; ++t)
        if (t != j) sub[i - 1].push_back(m[i][t]);
    SPoly term = *m[0][j] * det_rec(sub);
    if ((j & 1) == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

SPoly minor_det(const std::vector<std::vector<SPoly>>& s, const std::vector<int>& rows,
                const std::vector<int>& cols) {
  std::vector<std::vector<const SPoly*>> sub(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (int c : cols) sub[i].push_back(&s[static_cast<size_t>(rows[i])][static_cast<size_t>(c)]);
  return det_rec(sub);
}

}  // namespace

int bordered_minor_rank(const Matrix<PolyQ>& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<SPoly>> s(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    s[static_cast<size_t>(i)].reserve(static_cast<size_t>(cols));
    for (int j = 0; j < cols; ++j) s[static_cast<size_t>(i)].push_back(SPoly::from_multilinear(m(i, j)));
  }

  std::vector<int> prow, pcol;
  std::vector<bool> rused(static_cast<size_t>(rows), false), cused(static_cast<size_t>(cols), false);
  for (;;) {
    bool grew = false;
    for (int i = 0; i < rows && !grew; ++i) {
      if (rused[static_cast<size_t>(i)]) continue;
      for (int j = 0; j < cols && !grew; ++j) {
        if (cused[static_cast<size_t>(j)]) continue;
        std::vector<int> tr = prow, tc = pcol;
        tr.push_back(i);
        tc.push_back(j);
        if (!minor_det(s, tr, tc).is_zero()) {
          prow = std::move(tr);
          pcol = std::move(tc);
          rused[static_cast<size_t>(i)] = cused[static_cast<size_t>(j)] = true;
          grew = true;
        }
      }
    }
    if (!grew) break;
  }
  return static_cast<int>(prow.size());
}

}  // namespace gencomm
