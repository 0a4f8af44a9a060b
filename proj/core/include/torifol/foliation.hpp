#pragma once

#include <vector>

#include "torifol/divisor.hpp"
#include "torifol/fan.hpp"
#include "torifol/lattice.hpp"
#include "torifol/polyhedron.hpp"
#include "torifol/rational.hpp"

namespace torifol {

/// A complex subspace W of N_C with Gaussian-rational basis, stored in
/// reduced row echelon form, together with its rational trace V.
class GaussianSubspace {
 public:
  GaussianSubspace() = default;
  /// Spanning vectors need not be independent.
  static GaussianSubspace span(int ambient, const GMat& generators);
  static GaussianSubspace zero(int ambient) { return span(ambient, {}); }
  static GaussianSubspace full(int ambient);
  /// {x : a . x = 0 for every row a} (bilinear, no conjugation).
  static GaussianSubspace kernel_of(int ambient, const GMat& rows);

  [[nodiscard]] int ambient() const { return n_; }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const GMat& basis() const { return basis_; }
  [[nodiscard]] const RatSubspace& real_trace() const { return trace_; }
  [[nodiscard]] bool contains(const GVec& v) const;
  [[nodiscard]] bool contains(const QVec& v) const { return trace_.contains(v); }
  [[nodiscard]] bool contains(const IntVec& v) const { return trace_.contains(to_qvec(v)); }
  [[nodiscard]] GaussianSubspace intersect(const GaussianSubspace& o) const;
  /// Bilinear annihilator rows.
  [[nodiscard]] GMat annihilator() const;

  friend bool operator==(const GaussianSubspace& a, const GaussianSubspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  int n_ = 0;
  GMat basis_;
  RatSubspace trace_;
};

/// A fan, a subspace W and a rational boundary Δ (one coefficient per ray)
/// such that K_F + Δ is Q-Cartier.
class ToricFoliatedPair {
 public:
  /// Throws NotQCartier (witness: the cone) if K_F + Δ has no support
  /// function, DimensionMismatch on inconsistent ranks.
  ToricFoliatedPair(Fan fan, GaussianSubspace W, QVec delta);
  ToricFoliatedPair(Fan fan, GaussianSubspace W);

  [[nodiscard]] const Fan& fan() const { return fan_; }
  [[nodiscard]] const GaussianSubspace& W() const { return W_; }
  [[nodiscard]] const QVec& delta() const { return delta_; }
  [[nodiscard]] const std::vector<int>& iota() const { return iota_; }
  /// Support function of K_F + Δ.
  [[nodiscard]] const SupportFunction& phi() const { return phi_; }
  [[nodiscard]] bool delta_is_zero() const;

 private:
  Fan fan_;
  GaussianSubspace W_;
  QVec delta_;
  std::vector<int> iota_;
  SupportFunction phi_;
};

/// 1 if D_ρ is not invariant (v_ρ ∈ W), else 0.
int ray_iota(const ToricFoliatedPair& pair, int ray);
int ray_iota(const GaussianSubspace& W, const IntVec& v);

/// K_F = -Σ_{v_ρ ∈ W} D_ρ as a coefficient per ray.
QVec canonical_divisor(const Fan& fan, const GaussianSubspace& W);
QVec canonical_divisor(const ToricFoliatedPair& pair);

/// Coefficients of K_F + Δ.
QVec log_canonical_divisor(const ToricFoliatedPair& pair);

struct Quotient {
  /// Rows form a basis of the saturated lattice (U^⊥ ∩ M); the map N -> N̄ is
  /// x |-> projection * x, surjective with kernel N ∩ U.
  ZMat projection;
  GaussianSubspace W_bar;
};

/// N̄ = N/(N∩U) and W̄ = W/U_C. Throws NotContained if U_C ⊄ W.
Quotient quotient_foliation(const GaussianSubspace& W, const RatSubspace& U);
/// The same projection without the containment requirement; W̄ is the image
/// of W.
Quotient project_foliation(const GaussianSubspace& W, const RatSubspace& U);
/// Image of an integer vector in N̄ (not re-primitivized).
IntVec project_vector(const ZMat& projection, const IntVec& v);

bool is_algebraically_integrable(const GaussianSubspace& W);

}  // namespace torifol
