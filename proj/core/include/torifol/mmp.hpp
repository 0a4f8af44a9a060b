#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "torifol/fan.hpp"
#include "torifol/foliation.hpp"
#include "torifol/polyhedron.hpp"

namespace torifol {

/// The linear relation Σ a_i v_i = 0 attached to a wall ω of a complete
/// simplicial fan. `rays` lists v_1..v_{n+1}: the wall rays in index order,
/// then the opposite rays v_n, v_{n+1}, where v_{n+1} is the
/// lexicographically larger one. a_{n+1} = 1.
struct WallRelation {
  ConeRays wall;
  std::vector<int> rays;
  QVec a;
  // Ray indices, sorted, by the sign of their coefficient.
  std::vector<int> j_minus;
  std::vector<int> j_zero;
  std::vector<int> j_plus;

  [[nodiscard]] int alpha() const { return static_cast<int>(j_minus.size()); }
  /// The curve class [V_ω] as a vector in Q^{#rays}, scaled to a primitive
  /// integer vector (a positive rescaling of the coefficient vector).
  [[nodiscard]] IntVec curve_class(int num_rays) const;
};

/// Throws InvalidFan (not simplicial), DanglingWall (not complete) or
/// UnknownCone (ω is not a wall).
WallRelation wall_relation(const Fan& fan, const ConeRays& wall);

/// A ray of the Mori cone spanned by one or more wall classes.
struct ExtremalRay {
  IntVec curve_class;            // primitive-normalized
  std::vector<ConeRays> walls;   // every wall with this class
  Rat intersection;              // (K_F+Δ)·curve_class, same scale
  [[nodiscard]] int sign() const { return intersection.sign(); }
};

struct WallClass {
  WallRelation relation;
  IntVec curve_class;
  Rat intersection;
};

/// Every wall with its class and (K_F+Δ)-degree, walls in fan order.
std::vector<WallClass> wall_classes(const ToricFoliatedPair& pair);

/// Extremal rays of NE(X), ordered by curve class. Throws NotProjective if
/// the wall classes do not span a pointed cone.
std::vector<ExtremalRay> extremal_rays(const ToricFoliatedPair& pair);

enum class StepKind { Divisorial, Flip, MoriFiberSpace, Terminate };
std::string_view to_string(StepKind k);

struct MMPStep {
  MMPStep(StepKind k, std::optional<ExtremalRay> r, int a, ToricFoliatedPair b)
      : kind(k), ray(std::move(r)), alpha(a), before(std::move(b)) {}

  StepKind kind = StepKind::Terminate;
  std::optional<ExtremalRay> ray;  // absent for Terminate
  int alpha = 0;
  ToricFoliatedPair before;
  std::optional<ToricFoliatedPair> after;  // quotient pair for MoriFiberSpace

  std::optional<IntVec> contracted_ray;    // Divisorial
  std::vector<ConeRays> flip_centers;      // Flip: σ(ω), ray indices of `before`
  std::vector<ConeRays> removed_cones;     // Flip
  std::vector<ConeRays> added_cones;       // Flip
  std::optional<RatSubspace> U;            // MoriFiberSpace
  std::optional<ZMat> projection;          // MoriFiberSpace: N -> N̄
  bool u_in_w_certified = false;

  bool non_dicritical_before = false;
  bool non_dicritical_after = false;
  bool f_dlt_before = false;
  bool f_dlt_after = false;

  std::vector<WallClass> nef_certificate;  // Terminate: every wall, all >= 0
};

/// Divisorial and flip steps return a pair on the new fan; fiber-type steps
/// return the quotient pair. Throws NotExtremal if R is not K_F+Δ-negative,
/// TheoremViolation if α differs across the walls of R or a re-verification
/// fails.
MMPStep contract_ray(const ToricFoliatedPair& pair, const ExtremalRay& R);

/// The fan surgery of a flipping contraction, without sign checks: each
/// σ(ω) for ω a wall of R is re-triangulated by the σ^j with j ∈ J₋.
Fan flip_fan(const Fan& fan, const std::vector<ConeRays>& walls);

inline constexpr int kDefaultMaxSteps = 1000;

struct MMPTrace {
  std::vector<MMPStep> steps;
  [[nodiscard]] const MMPStep& last() const { return steps.back(); }
};

/// Runs the MMP, contracting the lexicographically least negative extremal
/// ray at each step. Requires a log canonical pair with Δ >= 0 on a
/// complete simplicial fan. Throws NotLogCanonical, NegativeDelta,
/// InvalidFan, IterationCap or TheoremViolation.
MMPTrace run_mmp(const ToricFoliatedPair& pair, int max_steps = kDefaultMaxSteps);

struct ConeCertificate {
  ExtremalRay ray;
  ConeRays wall;   // representative wall of R
  int ell = -1;    // ray index with v_ℓ ∈ W and coefficient > 0
  ConeRays curve;  // σ_J
  bool tangent = false;
};

/// A tangent torus-invariant curve for each negative extremal ray. Throws
/// TheoremViolation if no v_ℓ ∈ W exists or tangency fails.
std::vector<ConeCertificate> cone_certificate(const ToricFoliatedPair& pair);

}  // namespace torifol
