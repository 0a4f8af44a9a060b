#pragma once

#include <vector>

#include "torifol/fan.hpp"
#include "torifol/foliation.hpp"
#include "torifol/singularities.hpp"

namespace torifol {

inline constexpr int kDefaultSubdivisionCap = 10000;

/// A toric morphism X_source -> X_target given by a sequence of star
/// subdivisions of the target fan.
struct RefinementMorphism {
  Fan target;
  Fan source;
  std::vector<IntVec> log;         // subdivision vectors, in order
  std::vector<IntVec> added_rays;  // rays of source missing from target, in order

  /// Re-applies the log to the target.
  [[nodiscard]] Fan replay() const;
};

RefinementMorphism identity_morphism(const Fan& fan);
/// b after a; b.target must equal a.source.
RefinementMorphism compose(const RefinementMorphism& a, const RefinementMorphism& b);

/// Simplicial refinement with the same rays: repeatedly pull the first
/// non-simplicial maximal cone at its lexicographically least generator that
/// is not an apex of the cone.
RefinementMorphism simplicialize_same_rays(const Fan& fan, int cap = kDefaultSubdivisionCap);

/// Simplicial refinement satisfying condition (†). Throws IterationCap or
/// TheoremViolation (the final check failing would be a bug).
RefinementMorphism dagger_resolution(const Fan& fan, const GaussianSubspace& W, int cap = kDefaultSubdivisionCap);

/// Smooth refinement of a simplicial fan by subdividing at the least
/// nonzero point of a fundamental parallelotope. Throws NonSimplicialFan or
/// IterationCap.
RefinementMorphism smooth_refinement(const Fan& fan, int cap = kDefaultSubdivisionCap);

struct ResolvedPair {
  RefinementMorphism morphism;
  ToricFoliatedPair pair;
};

/// dagger_resolution followed by smooth_refinement; the boundary is the
/// strict transform of Δ plus every exceptional divisor with coefficient 1.
ResolvedPair foliated_log_resolution(const ToricFoliatedPair& pair, int cap = kDefaultSubdivisionCap);

struct Extraction {
  IntVec ray;
  Rat phi;  // φ_{K_F+Δ}(v_ρ) of the input pair
};

struct FdltModification {
  RefinementMorphism morphism;
  ToricFoliatedPair pair;
  std::vector<Extraction> extracted;
  Verdict f_dlt;
};

/// F-dlt modification: simplicialize, then dagger_resolution. The boundary
/// is the truncated non-invariant part of Δ plus ι(E)·E for each
/// exceptional E. Throws NegativeDelta; throws TheoremViolation if the
/// output fails to be F-dlt or an extracted ray has φ > 0.
FdltModification fdlt_modification(const ToricFoliatedPair& pair, int cap = kDefaultSubdivisionCap);

}  // namespace torifol
