#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torifol/fan.hpp"
#include "torifol/foliation.hpp"

namespace torifol::testing {

Fan p2_fan();
Fan p3_fan();
/// Rays (1,0),(0,1),(-1,1),(0,-1).
Fan f1_fan();
/// Fan of Cone(e_1..e_n).
Fan orthant(int n);
/// Cone over the square with rays (1,0,1),(0,1,1),(-1,0,1),(0,-1,1).
Fan square_cone();

/// Complex span of rows written as GaussRat strings.
GaussianSubspace span_of(int n, const std::vector<std::vector<std::string>>& rows);
/// {x : r . x = 0 for each row r}.
GaussianSubspace kernel_of(int n, const std::vector<std::vector<std::string>>& rows);

/// Brute force over primitive lattice points u with |u_i| <= bound in the
/// support: returns the first u with discrepancy_at(u).a < 0.
std::optional<IntVec> brute_negative_discrepancy(const ToricFoliatedPair& pair, int bound);

/// Brute force: a lattice point with |u_i| <= bound in Relint(cone) ∩ V.
std::optional<IntVec> brute_relint_point(const std::vector<IntVec>& gens, const RatSubspace& V, int bound);

}  // namespace torifol::testing
