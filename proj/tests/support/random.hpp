#pragma once

#include <cstdint>
#include <random>

#include "torifol/fan.hpp"
#include "torifol/foliation.hpp"

namespace torifol::testing {

using Rng = std::mt19937_64;

/// Base seed: TORIFOL_SEED if set, else a fixed default.
std::uint64_t base_seed();
/// Independent stream per test, derived from the base seed.
Rng make_rng(std::uint64_t salt);

int uniform(Rng& rng, int lo, int hi);
IntVec random_primitive(Rng& rng, int n, int maxcoord);

/// Complete fan in rank 2 from `num_rays` primitive vectors sorted by angle.
Fan random_complete_fan_2d(Rng& rng, int num_rays, int maxcoord);
/// Complete projective simplicial fan in rank 3: P^3 or (P^1)^3 followed
/// by `subdivisions` random star subdivisions.
Fan random_complete_fan_3d(Rng& rng, int subdivisions);
/// Rank 2 or 3, complete and simplicial.
Fan random_complete_fan(Rng& rng, int rank);
/// Fan of one simplicial cone with k generators in rank n.
Fan random_simplicial_cone(Rng& rng, int n, int k, int maxcoord);
/// A mix of single cones and complete fans for ranks 2..4.
Fan random_fan(Rng& rng, int rank);

/// Random W: zero, full, spans of rays, rays plus a Gaussian vector,
/// random Gaussian or rational subspaces, or a line through a cone.
GaussianSubspace random_W(Rng& rng, const Fan& fan);

}  // namespace torifol::testing
