#include "torifol/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "torifol/errors.hpp"
#include "torifol/lattice.hpp"
#include "torifol/linalg.hpp"

namespace torifol {

// ---------------------------------------------------------------- subspaces

RatSubspace RatSubspace::span(int ambient, const QMat& generators) {
  RatSubspace s(ambient);
  s.basis_ = rref(generators, static_cast<std::size_t>(ambient)).rows;
  return s;
}

RatSubspace RatSubspace::full(int ambient) {
  QMat id(static_cast<std::size_t>(ambient), QVec(static_cast<std::size_t>(ambient)));
  for (int i = 0; i < ambient; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return span(ambient, id);
}

RatSubspace RatSubspace::kernel_of(int ambient, const QMat& rows) {
  return span(ambient, kernel(rows, static_cast<std::size_t>(ambient)));
}

bool RatSubspace::contains(const QVec& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "subspace membership: wrong length");
  QVec r = v;
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (row[p].is_zero()) ++p;
    if (r[p].is_zero()) continue;
    const Rat f = r[p];
    for (std::size_t k = p; k < r.size(); ++k) r[k] -= f * row[k];
  }
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x.is_zero(); });
}

QMat RatSubspace::equations() const { return kernel(basis_, static_cast<std::size_t>(n_)); }

RatSubspace RatSubspace::intersect(const RatSubspace& o) const {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "subspace intersection: ambient mismatch");
  QMat eq = equations();
  for (auto& row : o.equations()) eq.push_back(std::move(row));
  return kernel_of(n_, eq);
}

RatSubspace real_trace_subspace(int ambient, const GMat& basis) {
  const GMat ann = gauss_kernel(basis, static_cast<std::size_t>(ambient));
  QMat rows;
  for (const auto& a : ann) {
    QVec re;
    QVec im;
    for (const auto& z : a) {
      re.push_back(z.re());
      im.push_back(z.im());
    }
    rows.push_back(std::move(re));
    rows.push_back(std::move(im));
  }
  return RatSubspace::kernel_of(ambient, rows);
}

// ------------------------------------------------------- Fourier–Motzkin

namespace {

bool is_zero_vec(const QVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x.is_zero(); });
}

// Scale a.x >= b by a positive factor so that a is a primitive integer row.
void normalize(Inequality& row) {
  if (is_zero_vec(row.a)) return;
  const ZVec z = clear_denominators(row.a);
  std::size_t p = 0;
  while (row.a[p].is_zero()) ++p;
  const Rat factor = Rat(z[p]) / row.a[p];  // positive: same sign as a[p]
  for (std::size_t k = 0; k < row.a.size(); ++k) row.a[k] = Rat(z[k]);
  row.b *= factor;
}

// Deduplicate (keeping the tightest right-hand side) and drop trivial rows.
// Returns false if a row 0 >= b with b > 0 is found.
bool tidy(std::vector<Inequality>& rows) {
  std::map<std::vector<std::string>, std::size_t> seen;
  std::vector<Inequality> out;
  for (auto& r : rows) {
    if (is_zero_vec(r.a)) {
      if (r.b.sign() > 0) return false;
      continue;
    }
    normalize(r);
    std::vector<std::string> key;
    key.reserve(r.a.size());
    for (const auto& x : r.a) key.push_back(x.str());
    auto [it, fresh] = seen.emplace(std::move(key), out.size());
    if (fresh) {
      out.push_back(std::move(r));
    } else if (r.b > out[it->second].b) {
      out[it->second].b = r.b;
    }
  }
  rows = std::move(out);
  return true;
}

// Subtract factor * e from row (applied to both sides).
template <class Row>
void eliminate_with(Row& row, const Equation& e, std::size_t j) {
  if (row.a[j].is_zero()) return;
  const Rat f = row.a[j] / e.a[j];
  for (std::size_t k = 0; k < row.a.size(); ++k) {
    if (!e.a[k].is_zero()) row.a[k] -= f * e.a[k];
  }
  row.b -= f * e.b;
}

struct EqSub {
  std::size_t var;
  Equation eq;
};

// Gaussian substitution of the equations, restricted to pivots in
// [first_var, vars). Remaining equations (no admissible pivot) are returned
// in `rest`. Returns false on an inconsistent equation.
bool substitute_equations(std::vector<Equation> eqs, std::vector<Inequality>& ineqs, std::size_t first_var,
                          std::vector<EqSub>& subs, std::vector<Equation>& rest) {
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    Equation e = eqs[i];
    std::size_t j = first_var;
    while (j < e.a.size() && e.a[j].is_zero()) ++j;
    if (j == e.a.size()) {
      if (is_zero_vec(e.a)) {
        if (!e.b.is_zero()) return false;
      } else {
        rest.push_back(e);
      }
      continue;
    }
    for (std::size_t k = i + 1; k < eqs.size(); ++k) eliminate_with(eqs[k], e, j);
    for (auto& r : ineqs) eliminate_with(r, e, j);
    for (auto& r : rest) eliminate_with(r, e, j);
    subs.push_back({j, std::move(e)});
  }
  return true;
}

std::size_t pick_variable(const std::vector<Inequality>& rows, std::size_t first, std::size_t vars,
                          bool& found) {
  found = false;
  std::size_t best = 0;
  long best_cost = 0;
  for (std::size_t j = first; j < vars; ++j) {
    long pos = 0;
    long neg = 0;
    for (const auto& r : rows) {
      const int s = r.a[j].sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos + neg == 0) continue;
    const long cost = pos * neg - pos - neg;
    if (!found || cost < best_cost) {
      found = true;
      best = j;
      best_cost = cost;
    }
  }
  return best;
}

std::vector<Inequality> eliminate(const std::vector<Inequality>& rows, std::size_t j) {
  std::vector<Inequality> out;
  std::vector<const Inequality*> pos;
  std::vector<const Inequality*> neg;
  for (const auto& r : rows) {
    const int s = r.a[j].sign();
    if (s == 0) out.push_back(r);
    if (s > 0) pos.push_back(&r);
    if (s < 0) neg.push_back(&r);
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      const Rat fp = -q->a[j];
      const Rat fq = p->a[j];
      Inequality c{QVec(p->a.size()), fp * p->b + fq * q->b};
      for (std::size_t k = 0; k < c.a.size(); ++k) c.a[k] = fp * p->a[k] + fq * q->a[k];
      c.a[j] = Rat(0);
      out.push_back(std::move(c));
    }
  }
  return out;
}

Rat nice_value(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  const Rat zero(0);
  if ((!lo || *lo <= zero) && (!hi || zero <= *hi)) return zero;
  if (lo && zero < *lo) {
    const Rat c(lo->ceil());
    if (!hi || c <= *hi) return c;
    return *lo;
  }
  const Rat f(hi->floor());
  if (!lo || *lo <= f) return f;
  return *hi;
}

}  // namespace

std::optional<QVec> fm_solve(int vars, const std::vector<Inequality>& ineqs, const std::vector<Equation>& eqs) {
  const auto nv = static_cast<std::size_t>(vars);
  for (const auto& r : ineqs) {
    if (r.a.size() != nv) throw Error(ErrorKind::DimensionMismatch, "fm_solve: inequality length");
  }
  for (const auto& r : eqs) {
    if (r.a.size() != nv) throw Error(ErrorKind::DimensionMismatch, "fm_solve: equation length");
  }
  std::vector<Inequality> rows = ineqs;
  std::vector<EqSub> subs;
  std::vector<Equation> rest;
  if (!substitute_equations(eqs, rows, 0, subs, rest)) return std::nullopt;

  std::vector<std::pair<std::size_t, std::vector<Inequality>>> stages;
  if (!tidy(rows)) return std::nullopt;
  for (;;) {
    bool found = false;
    const std::size_t j = pick_variable(rows, 0, nv, found);
    if (!found) break;
    std::vector<Inequality> next = eliminate(rows, j);
    stages.emplace_back(j, std::move(rows));
    rows = std::move(next);
    if (!tidy(rows)) return std::nullopt;
  }

  QVec x(nv, Rat(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t j = it->first;
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    for (const auto& r : it->second) {
      const int s = r.a[j].sign();
      if (s == 0) continue;
      Rat rhs = r.b;
      for (std::size_t k = 0; k < nv; ++k) {
        if (k != j && !r.a[k].is_zero()) rhs -= r.a[k] * x[k];
      }
      const Rat bound = rhs / r.a[j];
      if (s > 0) {
        if (!lo || *lo < bound) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *hi < *lo) throw Error(ErrorKind::TheoremViolation, "fm_solve: back-substitution failed");
    x[j] = nice_value(lo, hi);
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    const std::size_t j = it->var;
    Rat rhs = it->eq.b;
    for (std::size_t k = 0; k < nv; ++k) {
      if (k != j && !it->eq.a[k].is_zero()) rhs -= it->eq.a[k] * x[k];
    }
    x[j] = rhs / it->eq.a[j];
  }
  for (const auto& r : ineqs) {
    if (dot(r.a, x) < r.b) throw Error(ErrorKind::TheoremViolation, "fm_solve: witness violates an inequality");
  }
  for (const auto& r : eqs) {
    if (dot(r.a, x) != r.b) throw Error(ErrorKind::TheoremViolation, "fm_solve: witness violates an equation");
  }
  return x;
}

Projection fm_project(int vars, int keep, std::vector<Inequality> ineqs, std::vector<Equation> eqs) {
  const auto nv = static_cast<std::size_t>(vars);
  const auto nk = static_cast<std::size_t>(keep);
  Projection out;
  std::vector<EqSub> subs;
  std::vector<Equation> rest;
  if (!substitute_equations(std::move(eqs), ineqs, nk, subs, rest) || !tidy(ineqs)) {
    out.feasible = false;
    return out;
  }
  for (;;) {
    bool found = false;
    const std::size_t j = pick_variable(ineqs, nk, nv, found);
    if (!found) break;
    ineqs = eliminate(ineqs, j);
    if (!tidy(ineqs)) {
      out.feasible = false;
      return out;
    }
  }
  for (auto& r : ineqs) r.a.resize(nk);
  for (auto& r : rest) r.a.resize(nk);
  out.ineqs = std::move(ineqs);
  out.eqs = std::move(rest);
  return out;
}

// ---------------------------------------------------------------- simplex

std::optional<QVec> simplex_feasible(const QMat& A, const QVec& b, std::size_t vars) {
  const std::size_t m = A.size();
  if (b.size() != m) throw Error(ErrorKind::DimensionMismatch, "simplex: rhs length");
  const std::size_t cols = vars + m + 1;
  QMat t(m, QVec(cols));
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != vars) throw Error(ErrorKind::DimensionMismatch, "simplex: row length");
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
    t[i][vars + i] = 1;
    t[i][cols - 1] = flip ? -b[i] : b[i];
  }
  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), vars);
  QVec cost(cols);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < vars; ++j) cost[j] -= t[i][j];
    cost[cols - 1] -= t[i][cols - 1];
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      const Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen in phase I
    const Rat piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rat f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
      }
    }
    if (!cost[enter].is_zero()) {
      const Rat f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!t[leave][j].is_zero()) cost[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }
  if (!cost[cols - 1].is_zero()) return std::nullopt;
  QVec x(vars);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < vars) x[basis[i]] = t[i][cols - 1];
  }
  return x;
}

bool is_pointed(const QMat& gens, int ambient) {
  if (gens.empty()) return true;
  const auto n = static_cast<std::size_t>(ambient);
  QMat A(n + 1, QVec(gens.size()));
  QVec b(n + 1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) A[i][j] = gens[j][i];
    A[n][j] = 1;
  }
  b[n] = 1;
  return !simplex_feasible(A, b, gens.size()).has_value();
}

bool in_cone(const QMat& gens, const QVec& v) {
  const std::size_t n = v.size();
  if (gens.empty()) return is_zero_vec(v);
  QMat A(n, QVec(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) A[i][j] = gens[j][i];
  }
  return simplex_feasible(A, v, gens.size()).has_value();
}

// ---------------------------------------------------------------- polyhedra

namespace {

bool lex_less(const QVec& a, const QVec& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

void sort_unique(QMat& m) {
  std::sort(m.begin(), m.end(), lex_less);
  m.erase(std::unique(m.begin(), m.end()), m.end());
}

QVec primitive_q(const QVec& v) { return to_qvec(clear_denominators(v)); }

// Affine dimension of conv(verts) + cone(rays), verts nonempty.
int affine_dim(const QMat& verts, const QMat& rays, std::size_t n) {
  QMat rows;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    QVec d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = verts[i][k] - verts[0][k];
    rows.push_back(std::move(d));
  }
  for (const auto& r : rays) rows.push_back(r);
  return rank(rows, n);
}

}  // namespace

RatPolyhedron RatPolyhedron::from_generators(int ambient, QMat vertices, QMat rays) {
  const auto n = static_cast<std::size_t>(ambient);
  if (vertices.empty()) throw Error(ErrorKind::Validation, "polyhedron needs at least one vertex");
  for (const auto& v : vertices) {
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "polyhedron vertex length");
  }
  for (auto& r : rays) {
    if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "polyhedron ray length");
  }
  rays.erase(std::remove_if(rays.begin(), rays.end(), is_zero_vec), rays.end());
  for (auto& r : rays) r = primitive_q(r);
  sort_unique(vertices);
  sort_unique(rays);

  // x - sum l_i v_i - sum m_j r_j = 0, sum l_i = 1, l, m >= 0; eliminate l, m.
  const std::size_t nl = vertices.size();
  const std::size_t nm = rays.size();
  const std::size_t vars = n + nl + nm;
  std::vector<Equation> eqs;
  for (std::size_t k = 0; k < n; ++k) {
    Equation e{QVec(vars), Rat(0)};
    e.a[k] = 1;
    for (std::size_t i = 0; i < nl; ++i) e.a[n + i] = -vertices[i][k];
    for (std::size_t j = 0; j < nm; ++j) e.a[n + nl + j] = -rays[j][k];
    eqs.push_back(std::move(e));
  }
  Equation convex{QVec(vars), Rat(1)};
  for (std::size_t i = 0; i < nl; ++i) convex.a[n + i] = 1;
  eqs.push_back(std::move(convex));
  std::vector<Inequality> ineqs;
  for (std::size_t i = 0; i < nl + nm; ++i) {
    Inequality r{QVec(vars), Rat(0)};
    r.a[n + i] = 1;
    ineqs.push_back(std::move(r));
  }
  Projection proj = fm_project(static_cast<int>(vars), ambient, std::move(ineqs), std::move(eqs));

  RatPolyhedron p;
  p.n_ = ambient;
  p.vertices_ = std::move(vertices);
  p.rays_ = std::move(rays);
  // Keep facet-defining inequalities only; rows tight everywhere become
  // equations.
  const int dim = affine_dim(p.vertices_, p.rays_, n);
  QMat eq_rows;
  for (auto& e : proj.eqs) {
    QVec row = e.a;
    row.push_back(e.b);
    eq_rows.push_back(std::move(row));
  }
  std::map<std::vector<int>, Inequality> facets;
  for (auto& r : proj.ineqs) {
    std::vector<int> tight;
    QMat tv;
    QMat tr;
    for (std::size_t i = 0; i < p.vertices_.size(); ++i) {
      if (dot(r.a, p.vertices_[i]) == r.b) {
        tight.push_back(static_cast<int>(i));
        tv.push_back(p.vertices_[i]);
      }
    }
    for (std::size_t j = 0; j < p.rays_.size(); ++j) {
      if (dot(r.a, p.rays_[j]).is_zero()) {
        tight.push_back(static_cast<int>(p.vertices_.size() + j));
        tr.push_back(p.rays_[j]);
      }
    }
    if (tv.size() == p.vertices_.size() && tr.size() == p.rays_.size()) {
      QVec row = r.a;
      row.push_back(r.b);
      eq_rows.push_back(std::move(row));
      continue;
    }
    if (tv.empty() || affine_dim(tv, tr, n) != dim - 1) continue;
    facets.emplace(std::move(tight), std::move(r));
  }
  for (auto& [key, r] : facets) p.ineqs_.push_back(std::move(r));
  for (auto& row : rref(eq_rows, n + 1).rows) {
    Equation e{QVec(row.begin(), row.begin() + static_cast<long>(n)), row[n]};
    p.eqs_.push_back(std::move(e));
  }
  p.cross_validate();
  return p;
}

RatPolyhedron RatPolyhedron::from_inequalities(int ambient, std::vector<Inequality> ineqs,
                                               std::vector<Equation> eqs) {
  const auto n = static_cast<std::size_t>(ambient);
  RatPolyhedron p;
  p.n_ = ambient;
  if (!tidy(ineqs)) {
    p.ineqs_ = std::move(ineqs);
    p.eqs_ = std::move(eqs);
    return p;
  }
  QMat eqa;
  QVec eqb;
  for (const auto& e : eqs) {
    if (e.a.size() != n) throw Error(ErrorKind::DimensionMismatch, "equation length");
    eqa.push_back(e.a);
    eqb.push_back(e.b);
  }
  const int e_rank = rank(eqa, n);
  const int need = ambient - e_rank;

  auto satisfies = [&](const QVec& x, bool homogeneous) {
    for (const auto& r : ineqs) {
      if (dot(r.a, x) < (homogeneous ? Rat(0) : r.b)) return false;
    }
    for (const auto& e : eqs) {
      if (dot(e.a, x) != (homogeneous ? Rat(0) : e.b)) return false;
    }
    return true;
  };

  // Enumerate subsets of size k of the inequalities.
  auto for_subsets = [&](int k, auto&& fn) {
    const auto m = ineqs.size();
    if (k < 0 || static_cast<std::size_t>(k) > m) return;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      fn(idx);
      std::size_t q = idx.size();
      while (q > 0 && idx[q - 1] == m - idx.size() + q - 1) --q;
      if (q == 0) break;
      ++idx[q - 1];
      for (std::size_t t = q; t < idx.size(); ++t) idx[t] = idx[t - 1] + 1;
    }
  };

  for_subsets(need, [&](const std::vector<std::size_t>& idx) {
    QMat a = eqa;
    QVec b = eqb;
    for (auto i : idx) {
      a.push_back(ineqs[i].a);
      b.push_back(ineqs[i].b);
    }
    if (rank(a, n) != ambient) return;
    auto x = solve(a, b, n);
    if (x && satisfies(*x, false)) p.vertices_.push_back(std::move(*x));
  });
  if (need >= 1) {
    for_subsets(need - 1, [&](const std::vector<std::size_t>& idx) {
      QMat a = eqa;
      for (auto i : idx) a.push_back(ineqs[i].a);
      const QMat ker = kernel(a, n);
      if (ker.size() != 1) return;
      for (int sgn : {1, -1}) {
        QVec d = ker[0];
        if (sgn < 0) {
          for (auto& x : d) x = -x;
        }
        if (satisfies(d, true)) p.rays_.push_back(primitive_q(d));
      }
    });
  }
  sort_unique(p.vertices_);
  sort_unique(p.rays_);
  if (p.vertices_.empty()) {
    p.rays_.clear();
    if (fm_solve(ambient, ineqs, eqs)) {
      throw Error(ErrorKind::Validation, "polyhedron is not pointed; vertex enumeration unsupported");
    }
  }
  p.ineqs_ = std::move(ineqs);
  p.eqs_ = std::move(eqs);
  p.cross_validate();
  return p;
}

bool RatPolyhedron::contains(const QVec& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) throw Error(ErrorKind::DimensionMismatch, "polyhedron membership");
  if (vertices_.empty()) return false;
  for (const auto& r : ineqs_) {
    if (dot(r.a, x) < r.b) return false;
  }
  for (const auto& e : eqs_) {
    if (dot(e.a, x) != e.b) return false;
  }
  return true;
}

void RatPolyhedron::cross_validate() const {
  for (const auto& v : vertices_) {
    if (!contains(v)) throw Error(ErrorKind::TheoremViolation, "polyhedron: vertex violates inequality description");
  }
  for (const auto& r : rays_) {
    for (const auto& h : ineqs_) {
      if (dot(h.a, r).sign() < 0) throw Error(ErrorKind::TheoremViolation, "polyhedron: ray violates recession cone");
    }
    for (const auto& e : eqs_) {
      if (!dot(e.a, r).is_zero()) throw Error(ErrorKind::TheoremViolation, "polyhedron: ray leaves affine hull");
    }
  }
}

std::vector<IntVec> enumerate_lattice_points(const RatPolyhedron& P, bool bounded_check) {
  if (P.empty()) return {};
  if (!P.bounded() && bounded_check) throw Error(ErrorKind::Unbounded, "polyhedron is unbounded");
  const auto n = static_cast<std::size_t>(P.ambient());
  std::vector<Rat> lo(n);
  std::vector<Rat> hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = hi[k] = P.vertices()[0][k];
    for (const auto& v : P.vertices()) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
    for (const auto& r : P.rays()) {  // already primitive integer vectors
      if (r[k].sign() < 0) lo[k] += r[k];
      if (r[k].sign() > 0) hi[k] += r[k];
    }
  }
  IntVec a(n);
  IntVec b(n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = Rat(lo[k].ceil()).to_int64();
    b[k] = Rat(hi[k].floor()).to_int64();
    if (a[k] > b[k]) return {};
  }
  std::vector<IntVec> out;
  IntVec x = a;
  for (;;) {
    if (P.contains(to_qvec(x))) out.push_back(x);
    std::size_t k = n;
    while (k > 0 && x[k - 1] == b[k - 1]) {
      x[k - 1] = a[k - 1];
      --k;
    }
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

std::optional<IntVec> strict_meet_witness(const std::vector<IntVec>& gens, const RatSubspace& V) {
  const int n = V.ambient();
  QMat g;
  for (const auto& v : gens) {
    if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::DimensionMismatch, "strict_meet: generator length");
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) {
      throw Error(ErrorKind::ZeroVector, "strict_meet: zero generator");
    }
    g.push_back(to_qvec(v));
  }
  if (g.empty()) return IntVec(static_cast<std::size_t>(n), 0);
  if (!is_pointed(g, n)) throw Error(ErrorKind::NotStronglyConvex, "strict_meet: cone is not strongly convex");
  const std::size_t k = g.size();
  std::vector<Inequality> ineqs;
  for (std::size_t i = 0; i < k; ++i) {
    Inequality r{QVec(k), Rat(1)};
    r.a[i] = 1;
    ineqs.push_back(std::move(r));
  }
  std::vector<Equation> eqs;
  for (const auto& e : V.equations()) {
    Equation row{QVec(k), Rat(0)};
    for (std::size_t i = 0; i < k; ++i) row.a[i] = dot(e, g[i]);
    eqs.push_back(std::move(row));
  }
  const auto c = fm_solve(static_cast<int>(k), ineqs, eqs);
  if (!c) return std::nullopt;
  QVec x(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t t = 0; t < x.size(); ++t) x[t] += (*c)[i] * g[i][t];
  }
  return primitive_vector(x);
}

bool strict_meet(const std::vector<IntVec>& gens, const RatSubspace& V) {
  return strict_meet_witness(gens, V).has_value();
}

}  // namespace torifol
