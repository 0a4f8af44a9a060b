#include "torifol/linalg.hpp"

namespace torifol {

Rat determinant(QMat m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant: matrix not square");
  }
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Rat f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

int gauss_rank(const GMat& m, std::size_t cols) { return rank(m, cols); }

GMat gauss_kernel(const GMat& m, std::size_t cols) { return kernel(m, cols); }

std::optional<GVec> gauss_solve(const GMat& m, const GVec& rhs, std::size_t cols) {
  return solve(m, rhs, cols);
}

}  // namespace torifol
