#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torifol/fan.hpp"
#include "torifol/foliation.hpp"

namespace torifol {

/// Outcome of a singularity test. A false verdict names what failed: an
/// offending cone, a lattice point (replayable via strict_meet or
/// discrepancy_at) or a ray.
struct Verdict {
  bool value = true;
  std::string reason;
  std::optional<ConeRays> cone;
  std::optional<IntVec> point;
  std::optional<int> ray;

  explicit operator bool() const { return value; }
};

/// Condition (†): every cone whose relative interior meets W ∩ N lies in W.
Verdict is_non_dicritical(const Fan& fan, const GaussianSubspace& W);

/// Cones τ whose orbit closure lies in the singular locus: W ∩ Cτ is not
/// spanned by ray generators of τ. Requires a simplicial fan.
std::vector<ConeRays> singular_locus(const Fan& fan, const GaussianSubspace& W);

Verdict is_log_canonical(const ToricFoliatedPair& pair);

/// Requires Δ = 0 (NonZeroDelta otherwise).
Verdict is_canonical(const ToricFoliatedPair& pair);
/// Terminal at the generic point of V_σ; requires Δ = 0.
Verdict is_terminal_at(const ToricFoliatedPair& pair, const ConeRays& cone);

/// Requires Δ >= 0 (NegativeDelta otherwise).
Verdict is_f_dlt(const ToricFoliatedPair& pair);

/// W + Cτ = N_C.
bool is_tangent(const Fan& fan, const GaussianSubspace& W, const ConeRays& cone);

/// Requires a smooth fan (NonSmoothFan otherwise).
Verdict has_simple_singularities(const Fan& fan, const GaussianSubspace& W);

/// No nonzero φ: {1..m} -> Z_{>=0} with Σ φ(k) λ_k = 0.
bool is_non_resonant(const std::vector<GaussRat>& lambda);

}  // namespace torifol
