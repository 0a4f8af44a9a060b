#include "torifol/lattice.hpp"

#include <limits>
#include <numeric>

#include "torifol/errors.hpp"
#include "torifol/linalg.hpp"

namespace torifol {

namespace {

Int zgcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int zlcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// floor division
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ZVec to_zvec(const IntVec& v) {
  ZVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntVec to_intvec(const ZVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("lattice vector entry exceeds int64");
    out.push_back(x.get_si());
  }
  return out;
}

QVec to_qvec(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

ZVec clear_denominators(const QVec& v) {
  Int l = 1;
  for (const auto& x : v) l = zlcm(l, x.den());
  ZVec out;
  out.reserve(v.size());
  Int g = 0;
  for (const auto& x : v) {
    out.push_back(x.num() * (l / x.den()));
    g = zgcd(g, out.back());
  }
  if (g == 0) return out;
  for (auto& x : out) x /= g;
  return out;
}

IntVec primitive_vector(const QVec& v) {
  ZVec z = clear_denominators(v);
  bool nonzero = false;
  for (const auto& x : z) nonzero = nonzero || x != 0;
  if (!nonzero) throw Error(ErrorKind::ZeroVector, "primitive_vector: zero vector");
  return to_intvec(z);
}

IntVec primitive_vector(const IntVec& v) { return primitive_vector(to_qvec(v)); }

bool is_primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g == 1;
}

ZMat hermite_rows(ZMat m, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      }
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        const Int q = fdiv(m[i][c], m[r][c]);
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= q * m[r][k];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < m.size() && m[r][c] != 0) {
      if (m[r][c] < 0) {
        for (std::size_t k = c; k < cols; ++k) m[r][k] = -m[r][k];
      }
      for (std::size_t i = 0; i < r; ++i) {
        const Int q = fdiv(m[i][c], m[r][c]);
        if (q == 0) continue;
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= q * m[r][k];
      }
      ++r;
    }
  }
  m.resize(r);
  return m;
}

ZMat integer_kernel(const ZMat& m, std::size_t cols) {
  // Column operations on m, mirrored on a unimodular T: m T = [H | 0]; the
  // columns of T past rank(m) span the saturated kernel.
  ZMat a = m;
  ZMat t(cols, ZVec(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) t[i][i] = 1;
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {  // col dst -= q col src
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : t) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : t) std::swap(row[x], row[y]);
  };
  std::size_t c = 0;
  for (std::size_t r = 0; r < a.size() && c < cols; ++r) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] != 0 && (best == cols || abs(a[r][j]) < abs(a[r][best]))) best = j;
      }
      if (best == cols) break;
      col_swap(c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        col_op(j, c, fdiv(a[r][j], a[r][c]));
        if (a[r][j] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] != 0) ++c;
  }
  ZMat basis;
  for (std::size_t j = c; j < cols; ++j) {
    ZVec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = t[i][j];
    basis.push_back(std::move(v));
  }
  return hermite_rows(std::move(basis), cols);
}

Int lattice_multiplicity(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 1;
  const std::size_t k = rows.size();
  const std::size_t n = rows[0].size();
  if (k > n) return 0;
  // gcd over all k-subsets of columns.
  Int g = 0;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    QMat sub(k, QVec(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = Rat(static_cast<long>(rows[i][idx[j]]));
    }
    g = zgcd(g, determinant(std::move(sub)).num());
    std::size_t p = k;
    while (p > 0 && idx[p - 1] == n - k + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return g;
}

}  // namespace torifol
