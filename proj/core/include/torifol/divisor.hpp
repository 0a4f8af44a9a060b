#pragma once

#include <vector>

#include "torifol/fan.hpp"
#include "torifol/rational.hpp"

namespace torifol {

class ToricFoliatedPair;

/// Piecewise-linear function of a Q-Cartier torus-invariant divisor: one
/// functional m_σ per maximal cone with <m_σ, v_ρ> = -a_ρ on the rays of σ.
struct SupportFunction {
  std::vector<QVec> m;  // indexed like fan.max_cones()
};

/// Throws NotQCartier with the obstructing maximal cone as witness.
SupportFunction support_function(const Fan& fan, const QVec& divisor);

/// φ(u). Throws OutsideSupport.
Rat evaluate_phi(const SupportFunction& sf, const Fan& fan, const QVec& u);
Rat evaluate_phi(const SupportFunction& sf, const Fan& fan, const IntVec& u);

struct Discrepancy {
  Rat a;
  int iota = 0;
};

/// Discrepancy of the divisor extracted by the star subdivision at u:
/// a = φ_{K_F+Δ}(u) - ι(u). Throws OutsideSupport or Validation (u not
/// primitive).
Discrepancy discrepancy_at(const ToricFoliatedPair& pair, const IntVec& u);

}  // namespace torifol
