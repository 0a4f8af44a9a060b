#include "torifol/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torifol/errors.hpp"
#include "torifol/linalg.hpp"

namespace torifol {

namespace {

QMat to_qmat(const std::vector<IntVec>& gens) {
  QMat g;
  g.reserve(gens.size());
  for (const auto& v : gens) g.push_back(to_qvec(v));
  return g;
}

bool is_subset(const ConeRays& a, const ConeRays& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

ConeRays intersection(const ConeRays& a, const ConeRays& b) {
  ConeRays out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool cone_order(const ConeRays& a, const ConeRays& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

bool ConeH::contains(const QVec& v) const {
  for (const auto& e : equations) {
    if (!dot(e, v).is_zero()) return false;
  }
  for (const auto& a : normals) {
    if (dot(a, v).sign() < 0) return false;
  }
  return true;
}

bool ConeH::in_relint(const QVec& v) const {
  for (const auto& e : equations) {
    if (!dot(e, v).is_zero()) return false;
  }
  for (const auto& a : normals) {
    if (dot(a, v).sign() <= 0) return false;
  }
  return true;
}

ConeH cone_hrep(const std::vector<IntVec>& gens, int ambient) {
  const auto n = static_cast<std::size_t>(ambient);
  const QMat g = to_qmat(gens);
  ConeH h;
  if (gens.size() == n && rank(g, n) == ambient) {
    // Full-dimensional simplicial: the facet opposite g_i has normal row i of
    // the inverse generator matrix.
    for (std::size_t i = 0; i < n; ++i) {
      QVec e(n);
      e[i] = 1;
      // y with g_j . y = delta_ij.
      const auto y = solve(g, e, n);
      h.normals.push_back(to_qvec(clear_denominators(*y)));
      std::vector<int> on;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) on.push_back(static_cast<int>(j));
      }
      h.facet_rays.push_back(std::move(on));
    }
    return h;
  }
  const RatPolyhedron p = RatPolyhedron::from_generators(ambient, {QVec(n)}, g);
  for (const auto& e : p.equations()) h.equations.push_back(e.a);
  // from_generators sorts and normalizes rays; match facets against the
  // caller's generator order.
  for (const auto& r : p.inequalities()) {
    std::vector<int> on;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (dot(r.a, g[j]).is_zero()) on.push_back(static_cast<int>(j));
    }
    h.normals.push_back(r.a);
    h.facet_rays.push_back(std::move(on));
  }
  return h;
}

// ------------------------------------------------------------------ Fan

std::vector<IntVec> Fan::generators(const ConeRays& c) const {
  std::vector<IntVec> out;
  out.reserve(c.size());
  for (int i : c) {
    if (i < 0 || i >= num_rays()) throw Error(ErrorKind::UnknownRay, "unknown ray index " + std::to_string(i));
    out.push_back(rays_[static_cast<std::size_t>(i)]);
  }
  return out;
}

int Fan::cone_dim(const ConeRays& c) const { return torifol::rank(to_qmat(generators(c)), static_cast<std::size_t>(rank_)); }

bool Fan::is_simplicial_cone(const ConeRays& c) const { return cone_dim(c) == static_cast<int>(c.size()); }

Int Fan::multiplicity(const ConeRays& c) const {
  const int k = max_cone_index(c);
  if (k >= 0 && mults_[static_cast<std::size_t>(k)] != 0) return mults_[static_cast<std::size_t>(k)];
  return lattice_multiplicity(generators(c));
}

int Fan::find_ray(const IntVec& v) const {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i] == v) return static_cast<int>(i);
  }
  return -1;
}

bool Fan::has_cone(const ConeRays& c) const { return std::binary_search(cones_.begin(), cones_.end(), c, cone_order); }

int Fan::max_cone_index(const ConeRays& c) const {
  auto it = std::lower_bound(max_cones_.begin(), max_cones_.end(), c);
  return it == max_cones_.end() || *it != c ? -1 : static_cast<int>(it - max_cones_.begin());
}

std::vector<ConeRays> Fan::facets(int max_index) const {
  const auto& cone = max_cones_[static_cast<std::size_t>(max_index)];
  std::vector<ConeRays> out;
  for (const auto& pos : hreps_[static_cast<std::size_t>(max_index)].facet_rays) {
    ConeRays f;
    for (int p : pos) f.push_back(cone[static_cast<std::size_t>(p)]);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Fan::containing_max_cone(const QVec& v) const {
  for (std::size_t i = 0; i < max_cones_.size(); ++i) {
    if (hreps_[i].contains(v)) return static_cast<int>(i);
  }
  return -1;
}

int Fan::max_cone_containing_face(const ConeRays& c) const {
  for (std::size_t i = 0; i < max_cones_.size(); ++i) {
    if (std::binary_search(faces_[i].begin(), faces_[i].end(), c, cone_order)) return static_cast<int>(i);
  }
  return -1;
}

Fan Fan::make(int rank, std::vector<IntVec> rays, std::vector<ConeRays> max_cones) {
  return build(rank, std::move(rays), std::move(max_cones), nullptr);
}

Fan Fan::build(int rank, std::vector<IntVec> rays, std::vector<ConeRays> max_cones, const Fan* parent) {
  const bool check_overlaps = parent == nullptr;
  if (rank < 0) throw Error(ErrorKind::Validation, "negative rank");
  const auto n = static_cast<std::size_t>(rank);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& v = rays[i];
    const std::vector<int> w{static_cast<int>(i)};
    if (v.size() != n) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " has wrong length", w);
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) {
      throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " is zero", w);
    }
    if (!is_primitive(v)) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " is not primitive", w);
    for (std::size_t j = 0; j < i; ++j) {
      if (rays[j] == v) {
        throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " duplicates ray " + std::to_string(j),
                    {static_cast<int>(j), static_cast<int>(i)});
      }
    }
  }
  Fan f;
  f.rank_ = rank;
  f.rays_ = std::move(rays);
  for (auto& c : max_cones) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int i : c) {
      if (i < 0 || i >= f.num_rays()) throw Error(ErrorKind::UnknownRay, "cone refers to unknown ray " + std::to_string(i), c);
    }
  }
  std::sort(max_cones.begin(), max_cones.end());
  max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
  if (max_cones.empty()) max_cones.push_back({});

  // Per-cone checks, H-descriptions and face lists.
  std::vector<ConeH> hreps;
  std::vector<std::vector<ConeRays>> faces;
  std::vector<int> dims;
  std::vector<Int> mults;  // 0 for non-simplicial cones
  for (const auto& c : max_cones) {
    if (parent) {  // unchanged cones keep their data; ray indices are stable
      auto it = std::lower_bound(parent->max_cones_.begin(), parent->max_cones_.end(), c);
      if (it != parent->max_cones_.end() && *it == c) {
        const auto k = static_cast<std::size_t>(it - parent->max_cones_.begin());
        hreps.push_back(parent->hreps_[k]);
        faces.push_back(parent->faces_[k]);
        dims.push_back(parent->dims_[k]);
        mults.push_back(parent->mults_[k]);
        continue;
      }
    }
    const auto gens = f.generators(c);
    const QMat g = to_qmat(gens);
    const int dim = torifol::rank(g, n);
    const bool independent = static_cast<int>(c.size()) == dim;
    dims.push_back(dim);
    mults.push_back(independent ? lattice_multiplicity(gens) : Int(0));
    if (!independent && !is_pointed(g, rank)) throw Error(ErrorKind::NotStronglyConvex, "cone is not strongly convex", c);
    for (std::size_t j = 0; j < g.size() && !independent; ++j) {
      QMat others = g;
      others.erase(others.begin() + static_cast<long>(j));
      if (in_cone(others, g[j])) {
        throw Error(ErrorKind::RedundantGenerator,
                    "ray " + std::to_string(c[j]) + " is a redundant generator of its cone", c);
      }
    }
    ConeH h = cone_hrep(gens, rank);
    std::set<ConeRays> fs;
    if (independent) {
      const std::size_t k = c.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        ConeRays sub;
        for (std::size_t b = 0; b < k; ++b) {
          if (mask & (std::size_t{1} << b)) sub.push_back(c[b]);
        }
        fs.insert(std::move(sub));
      }
    } else {
      fs.insert(c);
      std::vector<ConeRays> frontier;
      for (const auto& pos : h.facet_rays) {
        ConeRays fr;
        for (int p : pos) fr.push_back(c[static_cast<std::size_t>(p)]);
        if (fs.insert(fr).second) frontier.push_back(fr);
      }
      const std::vector<ConeRays> facet_sets = frontier;
      while (!frontier.empty()) {
        std::vector<ConeRays> next;
        for (const auto& a : frontier) {
          for (const auto& b : facet_sets) {
            ConeRays m = intersection(a, b);
            if (fs.insert(m).second) next.push_back(std::move(m));
          }
        }
        frontier = std::move(next);
      }
    }
    std::vector<ConeRays> fl(fs.begin(), fs.end());
    std::sort(fl.begin(), fl.end(), cone_order);
    hreps.push_back(std::move(h));
    faces.push_back(std::move(fl));
  }

  // Drop listed cones that are faces of other listed cones.
  std::vector<bool> keep(max_cones.size(), true);
  for (std::size_t a = 0; a < max_cones.size(); ++a) {
    for (std::size_t b = 0; b < max_cones.size() && keep[a]; ++b) {
      if (a == b || !keep[b] || max_cones[a].size() >= max_cones[b].size()) continue;
      if (std::binary_search(faces[b].begin(), faces[b].end(), max_cones[a], cone_order)) keep[a] = false;
    }
  }
  for (std::size_t a = 0; a < max_cones.size(); ++a) {
    if (!keep[a]) continue;
    f.max_cones_.push_back(max_cones[a]);
    f.hreps_.push_back(std::move(hreps[a]));
    f.faces_.push_back(std::move(faces[a]));
    f.dims_.push_back(dims[a]);
    f.mults_.push_back(std::move(mults[a]));
  }

  // Pairwise intersections must be common faces.
  const std::size_t m = f.max_cones_.size();
  for (std::size_t a = 0; a < m && check_overlaps; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const ConeRays& ca = f.max_cones_[a];
      const ConeRays& cb = f.max_cones_[b];
      const ConeRays common = intersection(ca, cb);
      const std::vector<int> witness{static_cast<int>(a), static_cast<int>(b)};
      if (!std::binary_search(f.faces_[a].begin(), f.faces_[a].end(), common, cone_order) ||
          !std::binary_search(f.faces_[b].begin(), f.faces_[b].end(), common, cone_order)) {
        throw Error(ErrorKind::Overlap, "cones meet along a set that is not a common face", witness);
      }
      // Cone(common) = ca ∩ {m.x = 0}, m the sum of the facet normals of ca
      // containing it. Look for x in ca ∩ cb with m.x >= 1.
      const ConeH& ha = f.hreps_[a];
      QVec mvec(n);
      for (std::size_t i = 0; i < ha.normals.size(); ++i) {
        ConeRays fr;
        for (int p : ha.facet_rays[i]) fr.push_back(ca[static_cast<std::size_t>(p)]);
        if (!is_subset(common, fr)) continue;
        for (std::size_t k = 0; k < n; ++k) mvec[k] += ha.normals[i][k];
      }
      if (std::all_of(mvec.begin(), mvec.end(), [](const Rat& x) { return x.is_zero(); })) continue;
      const std::size_t vars = ca.size() + cb.size() + 1;
      QMat A(n + 1, QVec(vars));
      QVec rhs(n + 1);
      for (std::size_t i = 0; i < ca.size(); ++i) {
        const auto& v = f.ray(ca[i]);
        for (std::size_t k = 0; k < n; ++k) A[k][i] = Rat(static_cast<long>(v[k]));
        A[n][i] = dot(mvec, v);
      }
      for (std::size_t j = 0; j < cb.size(); ++j) {
        const auto& v = f.ray(cb[j]);
        for (std::size_t k = 0; k < n; ++k) A[k][ca.size() + j] = Rat(-static_cast<long>(v[k]));
      }
      A[n][vars - 1] = -1;
      rhs[n] = 1;
      if (simplex_feasible(A, rhs, vars)) {
        throw Error(ErrorKind::Overlap, "cones overlap beyond their common face", witness);
      }
    }
  }

  std::set<ConeRays> all;
  for (const auto& fl : f.faces_) all.insert(fl.begin(), fl.end());
  f.cones_.assign(all.begin(), all.end());
  std::sort(f.cones_.begin(), f.cones_.end(), cone_order);

  FanReport rep;
  rep.simplicial = true;
  rep.smooth = true;
  rep.complete = true;
  std::map<ConeRays, int> facet_count;
  for (std::size_t a = 0; a < m; ++a) {
    const ConeRays& c = f.max_cones_[a];
    const int d = f.dims_[a];
    if (d != static_cast<int>(c.size())) {
      rep.simplicial = false;
      rep.smooth = false;
    } else if (rep.smooth && f.mults_[a] != 1) {
      rep.smooth = false;
    }
    if (d != rank) rep.complete = false;
    for (const auto& fr : f.facets(static_cast<int>(a))) ++facet_count[fr];
  }
  for (const auto& [fr, count] : facet_count) {
    if (count != 2) rep.complete = false;
  }
  f.report_ = rep;
  return f;
}

FaceData faces_and_walls(const Fan& fan) {
  FaceData out;
  out.faces = fan.cones();
  std::map<ConeRays, std::vector<int>> incident;
  for (std::size_t a = 0; a < fan.max_cones().size(); ++a) {
    if (fan.cone_dim(fan.max_cones()[a]) != fan.rank()) {
      throw Error(ErrorKind::DanglingWall, "maximal cone is not full-dimensional", fan.max_cones()[a]);
    }
    for (const auto& fr : fan.facets(static_cast<int>(a))) incident[fr].push_back(static_cast<int>(a));
  }
  for (const auto& [fr, cs] : incident) {
    if (cs.size() != 2) throw Error(ErrorKind::DanglingWall, "wall is not shared by exactly two maximal cones", fr);
    out.walls.push_back({fr, cs[0], cs[1]});
  }
  return out;
}

Fan star_subdivide(const Fan& fan, const IntVec& u) {
  if (static_cast<int>(u.size()) != fan.rank()) throw Error(ErrorKind::DimensionMismatch, "star_subdivide: wrong length");
  if (!is_primitive(u)) throw Error(ErrorKind::Validation, "star_subdivide: vector " + to_string(u) + " is not primitive");
  const QVec uq = to_qvec(u);
  std::vector<IntVec> rays = fan.rays();
  int idx = fan.find_ray(u);
  if (idx < 0) {
    idx = static_cast<int>(rays.size());
    rays.push_back(u);
  }
  std::vector<ConeRays> cones;
  bool inside = false;
  for (std::size_t a = 0; a < fan.max_cones().size(); ++a) {
    const ConeRays& c = fan.max_cones()[a];
    const ConeH& h = fan.hrep(static_cast<int>(a));
    if (!h.contains(uq)) {
      cones.push_back(c);
      continue;
    }
    inside = true;
    for (std::size_t i = 0; i < h.normals.size(); ++i) {
      if (dot(h.normals[i], uq).is_zero()) continue;  // u lies on this facet
      ConeRays nc;
      for (int p : h.facet_rays[i]) nc.push_back(c[static_cast<std::size_t>(p)]);
      nc.push_back(idx);
      cones.push_back(std::move(nc));
    }
    if (h.normals.empty()) {  // the zero cone or a cone whose only facet is the apex
      ConeRays nc{idx};
      cones.push_back(std::move(nc));
    }
  }
  if (!inside) throw Error(ErrorKind::OutsideSupport, "star_subdivide: " + to_string(u) + " is outside the support");
  // A star subdivision of a fan is a fan; only the per-cone data is rebuilt.
  return Fan::build(fan.rank(), std::move(rays), std::move(cones), &fan);
}

std::optional<ConeRays> locate_cone(const Fan& fan, const QVec& v) {
  if (static_cast<int>(v.size()) != fan.rank()) throw Error(ErrorKind::DimensionMismatch, "locate_cone: wrong length");
  if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); })) return ConeRays{};
  const int a = fan.containing_max_cone(v);
  if (a < 0) return std::nullopt;
  const ConeRays& c = fan.max_cones()[static_cast<std::size_t>(a)];
  const ConeH& h = fan.hrep(a);
  std::vector<bool> on(c.size(), true);
  for (std::size_t i = 0; i < h.normals.size(); ++i) {
    if (!dot(h.normals[i], v).is_zero()) continue;
    std::vector<bool> in_facet(c.size(), false);
    for (int p : h.facet_rays[i]) in_facet[static_cast<std::size_t>(p)] = true;
    for (std::size_t j = 0; j < c.size(); ++j) on[j] = on[j] && in_facet[j];
  }
  ConeRays out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (on[j]) out.push_back(c[j]);
  }
  return out;
}

}  // namespace torifol
