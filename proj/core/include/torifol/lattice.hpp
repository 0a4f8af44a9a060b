#pragma once

// Integer-lattice helpers: primitive vectors, Hermite normal forms,
// saturated kernels and cone multiplicities.

#include <vector>

#include "torifol/rational.hpp"

namespace torifol {

using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;

/// The primitive lattice vector on the ray R_{>=0} v. Throws ZeroVector.
IntVec primitive_vector(const QVec& v);
IntVec primitive_vector(const IntVec& v);
bool is_primitive(const IntVec& v);

/// Scales a rational vector by a positive factor to a primitive integer
/// vector; the zero vector is returned unchanged.
ZVec clear_denominators(const QVec& v);

/// Row Hermite normal form: upper echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are dropped.
ZMat hermite_rows(ZMat m, std::size_t cols);

/// A basis (in row Hermite form) of the saturated lattice
/// {x in Z^cols : m x = 0}.
ZMat integer_kernel(const ZMat& m, std::size_t cols);

/// gcd of the maximal minors of the k x n generator matrix; the index of the
/// sublattice generated by the rows inside its saturation. Rows must be
/// linearly independent (otherwise 0 is returned).
Int lattice_multiplicity(const std::vector<IntVec>& rows);

ZVec to_zvec(const IntVec& v);
IntVec to_intvec(const ZVec& v);
QVec to_qvec(const ZVec& v);

}  // namespace torifol
