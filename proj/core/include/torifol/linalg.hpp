#pragma once

// Dense Gaussian elimination over an exact field. Instantiated for Rat and
// GaussRat; the field type needs +, -, *, /, unary -, == and is_zero().

#include <cstddef>
#include <optional>
#include <vector>

#include "torifol/errors.hpp"
#include "torifol/rational.hpp"

namespace torifol {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct Rref {
  Matrix<F> rows;            // nonzero rows only, pivots normalized to 1
  std::vector<int> pivots;   // pivot column of each row
  std::size_t cols = 0;
};

namespace detail {

template <class F>
void check_rect(const Matrix<F>& m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "matrix is not rectangular");
  }
}

}  // namespace detail

/// Reduced row echelon form. `cols` is needed for matrices with no rows.
template <class F>
Rref<F> rref(Matrix<F> m, std::size_t cols) {
  detail::check_rect(m, cols);
  Rref<F> out;
  out.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const F inv = F(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const F f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[r][k].is_zero()) m[i][k] = m[i][k] - f * m[r][k];
      }
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <class F>
int rank(const Matrix<F>& m, std::size_t cols) {
  return static_cast<int>(rref(m, cols).pivots.size());
}

/// Kernel {x : m x = 0} in free-variable form: one basis vector per free
/// column, with a 1 in that column and 0 in the other free columns. This
/// basis is determined by the row space alone.
template <class F>
Matrix<F> kernel(const Matrix<F>& m, std::size_t cols) {
  const Rref<F> red = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<F> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t i = 0; i < red.rows.size(); ++i) {
      v[static_cast<std::size_t>(red.pivots[i])] = -red.rows[i][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = rhs (free variables set to 0), or nullopt when the
/// system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& rhs, std::size_t cols) {
  if (rhs.size() != m.size()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length mismatch");
  Matrix<F> aug = m;
  detail::check_rect(aug, cols);
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  const Rref<F> red = rref(std::move(aug), cols + 1);
  std::vector<F> x(cols, F(0));
  for (std::size_t i = 0; i < red.rows.size(); ++i) {
    const auto p = static_cast<std::size_t>(red.pivots[i]);
    if (p == cols) return std::nullopt;
    x[p] = red.rows[i][cols];
  }
  return x;
}

template <class F>
std::vector<F> mat_vec(const Matrix<F>& m, const std::vector<F>& v) {
  std::vector<F> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "mat_vec: size mismatch");
    F s(0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!row[k].is_zero() && !v[k].is_zero()) s = s + row[k] * v[k];
    }
    out.push_back(std::move(s));
  }
  return out;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& m, std::size_t cols) {
  Matrix<F> t(cols, std::vector<F>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

/// Determinant of a square rational matrix.
Rat determinant(QMat m);

// Gaussian-rational front end.
int gauss_rank(const GMat& m, std::size_t cols);
GMat gauss_kernel(const GMat& m, std::size_t cols);
std::optional<GVec> gauss_solve(const GMat& m, const GVec& rhs, std::size_t cols);

}  // namespace torifol
