#pragma once

#include <optional>
#include <vector>

#include "torifol/lattice.hpp"
#include "torifol/polyhedron.hpp"
#include "torifol/rational.hpp"

namespace torifol {

/// A cone of a fan, as the sorted list of its ray indices.
using ConeRays = std::vector<int>;

/// Inequality description of a strongly convex cone: a.x >= 0 for every
/// facet normal (primitive integral, nonnegative on the cone) and e.x = 0
/// for the equations of its span. `facet_rays[i]` lists the positions (into
/// the generator list) of the generators on facet i.
struct ConeH {
  QMat normals;
  std::vector<std::vector<int>> facet_rays;
  QMat equations;

  [[nodiscard]] bool contains(const QVec& v) const;
  [[nodiscard]] bool in_relint(const QVec& v) const;
};

/// Facets and span equations of Cone(gens). Generators must be the extreme
/// rays of a strongly convex cone.
ConeH cone_hrep(const std::vector<IntVec>& gens, int ambient);

struct FanReport {
  bool simplicial = false;
  bool smooth = false;
  bool complete = false;
};

class Fan {
 public:
  /// Validates the fan axioms and returns the canonical fan: ray order is
  /// kept, maximal cones are sorted, and cones that are faces of other
  /// listed cones are dropped. Throws Error with kind Validation,
  /// NotStronglyConvex, RedundantGenerator or Overlap.
  static Fan make(int rank, std::vector<IntVec> rays, std::vector<ConeRays> max_cones);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<IntVec>& rays() const { return rays_; }
  [[nodiscard]] const IntVec& ray(int i) const { return rays_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int num_rays() const { return static_cast<int>(rays_.size()); }
  [[nodiscard]] const std::vector<ConeRays>& max_cones() const { return max_cones_; }
  /// Every cone of the fan (including the zero cone), ordered by dimension
  /// and then lexicographically.
  [[nodiscard]] const std::vector<ConeRays>& cones() const { return cones_; }
  [[nodiscard]] const FanReport& report() const { return report_; }
  [[nodiscard]] bool is_simplicial() const { return report_.simplicial; }
  [[nodiscard]] bool is_smooth() const { return report_.smooth; }
  [[nodiscard]] bool is_complete() const { return report_.complete; }

  [[nodiscard]] std::vector<IntVec> generators(const ConeRays& c) const;
  [[nodiscard]] int cone_dim(const ConeRays& c) const;
  [[nodiscard]] bool is_simplicial_cone(const ConeRays& c) const;
  [[nodiscard]] Int multiplicity(const ConeRays& c) const;
  [[nodiscard]] int find_ray(const IntVec& v) const;
  [[nodiscard]] bool has_cone(const ConeRays& c) const;
  /// Position of c among the maximal cones, or -1.
  [[nodiscard]] int max_cone_index(const ConeRays& c) const;
  [[nodiscard]] const ConeH& hrep(int max_index) const { return hreps_[static_cast<std::size_t>(max_index)]; }
  /// Facets of a maximal cone as ray-index lists.
  [[nodiscard]] std::vector<ConeRays> facets(int max_index) const;
  /// First maximal cone (in order) containing v, or -1.
  [[nodiscard]] int containing_max_cone(const QVec& v) const;
  /// A maximal cone having c as a face, or -1.
  [[nodiscard]] int max_cone_containing_face(const ConeRays& c) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.max_cones_ == b.max_cones_;
  }

 private:
  friend Fan star_subdivide(const Fan& fan, const IntVec& u);
  // With a parent, the result is trusted to be a fan refining it: the
  // pairwise overlap test is skipped and cones of the parent are reused.
  static Fan build(int rank, std::vector<IntVec> rays, std::vector<ConeRays> max_cones, const Fan* parent);

  int rank_ = 0;
  std::vector<IntVec> rays_;
  std::vector<ConeRays> max_cones_;
  std::vector<ConeH> hreps_;
  std::vector<std::vector<ConeRays>> faces_;  // per maximal cone
  std::vector<int> dims_;
  std::vector<Int> mults_;
  std::vector<ConeRays> cones_;
  FanReport report_;
};

struct Wall {
  ConeRays wall;
  int cone_a = -1;  // indices into max_cones(), cone_a < cone_b
  int cone_b = -1;
};

struct FaceData {
  std::vector<ConeRays> faces;
  std::vector<Wall> walls;
};

/// Face list and codimension-one walls with their two incident maximal
/// cones. Throws DanglingWall if some wall is not shared by exactly two
/// maximal cones (the fan is not complete).
FaceData faces_and_walls(const Fan& fan);

/// Star subdivision at the primitive vector u. At an existing ray this is
/// the pulling refinement, which is the identity exactly when every cone
/// containing that ray is simplicial. Throws OutsideSupport.
Fan star_subdivide(const Fan& fan, const IntVec& u);

/// The cone whose relative interior contains v ({} for v = 0), or nullopt
/// if v is outside the support.
std::optional<ConeRays> locate_cone(const Fan& fan, const QVec& v);

}  // namespace torifol
