#pragma once

// Exact polyhedral computations: rational subspaces, Fourier–Motzkin
// elimination, a Phase I simplex, V/H polyhedra and lattice points.

#include <optional>
#include <vector>

#include "torifol/rational.hpp"

namespace torifol {

/// A rational linear subspace of Q^n, stored by its reduced row echelon
/// basis so that equal subspaces have equal bases.
class RatSubspace {
 public:
  RatSubspace() = default;
  explicit RatSubspace(int ambient) : n_(ambient) {}
  static RatSubspace span(int ambient, const QMat& generators);
  static RatSubspace full(int ambient);
  /// {x : a x = 0 for every row a}.
  static RatSubspace kernel_of(int ambient, const QMat& rows);

  [[nodiscard]] int ambient() const { return n_; }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const QMat& basis() const { return basis_; }
  [[nodiscard]] bool contains(const QVec& v) const;
  /// Rows spanning the orthogonal complement (equations of the subspace).
  [[nodiscard]] QMat equations() const;
  [[nodiscard]] RatSubspace intersect(const RatSubspace& o) const;

  friend bool operator==(const RatSubspace&, const RatSubspace&) = default;

 private:
  int n_ = 0;
  QMat basis_;
};

/// Annihilator-based rational trace of a complex subspace: the span of all
/// rational vectors lying in span_C(basis).
RatSubspace real_trace_subspace(int ambient, const GMat& basis);

/// a . x >= b
struct Inequality {
  QVec a;
  Rat b;
};

/// a . x == b
struct Equation {
  QVec a;
  Rat b;
};

/// Feasibility of a mixed system by Fourier–Motzkin elimination. Returns a
/// witness point, chosen with small integral coordinates where possible.
std::optional<QVec> fm_solve(int vars, const std::vector<Inequality>& ineqs,
                             const std::vector<Equation>& eqs = {});

/// Projects the system onto the first `keep` variables, eliminating the
/// rest. The result describes exactly the projection.
struct Projection {
  bool feasible = true;
  std::vector<Inequality> ineqs;
  std::vector<Equation> eqs;
};
Projection fm_project(int vars, int keep, std::vector<Inequality> ineqs, std::vector<Equation> eqs);

/// Phase I simplex (Bland's rule): a point x >= 0 with A x = b, or nullopt.
std::optional<QVec> simplex_feasible(const QMat& A, const QVec& b, std::size_t vars);

/// Is the cone generated by `gens` pointed (contains no line)?
bool is_pointed(const QMat& gens, int ambient);
/// Is v in Cone(gens)?
bool in_cone(const QMat& gens, const QVec& v);

/// A rational polyhedron P = conv(vertices) + cone(rays), with a cached,
/// cross-checked inequality description. The empty polyhedron has no
/// vertices.
class RatPolyhedron {
 public:
  static RatPolyhedron from_generators(int ambient, QMat vertices, QMat rays);
  /// Assumes the polyhedron is pointed (true for every use here: all our
  /// polyhedra live inside strongly convex cones).
  static RatPolyhedron from_inequalities(int ambient, std::vector<Inequality> ineqs,
                                         std::vector<Equation> eqs = {});

  [[nodiscard]] int ambient() const { return n_; }
  [[nodiscard]] bool empty() const { return vertices_.empty(); }
  [[nodiscard]] bool bounded() const { return rays_.empty(); }
  [[nodiscard]] const QMat& vertices() const { return vertices_; }
  [[nodiscard]] const QMat& rays() const { return rays_; }
  [[nodiscard]] const std::vector<Inequality>& inequalities() const { return ineqs_; }
  [[nodiscard]] const std::vector<Equation>& equations() const { return eqs_; }
  [[nodiscard]] bool contains(const QVec& x) const;

 private:
  void cross_validate() const;

  int n_ = 0;
  QMat vertices_;
  QMat rays_;
  std::vector<Inequality> ineqs_;
  std::vector<Equation> eqs_;
};

/// All lattice points of P in lexicographic order. If P is unbounded:
/// throws Unbounded when `bounded_check` is set, otherwise lists the lattice
/// points of P inside the box hull of conv(vertices) + sum [0,1] r_j (r_j the
/// primitive ray generators), which is nonempty iff P has a lattice point.
std::vector<IntVec> enumerate_lattice_points(const RatPolyhedron& P, bool bounded_check = true);

/// Does Relint(Cone(gens)) meet the subspace V? The witness is the primitive
/// lattice point of such an intersection.
std::optional<IntVec> strict_meet_witness(const std::vector<IntVec>& gens, const RatSubspace& V);
bool strict_meet(const std::vector<IntVec>& gens, const RatSubspace& V);

}  // namespace torifol
