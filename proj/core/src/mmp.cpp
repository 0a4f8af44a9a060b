#include "torifol/mmp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torifol/errors.hpp"
#include "torifol/linalg.hpp"
#include "torifol/singularities.hpp"

namespace torifol {

namespace {

void require_simplicial(const Fan& fan) {
  if (!fan.is_simplicial()) throw Error(ErrorKind::InvalidFan, "wall relations need a simplicial fan");
}

WallRelation relation_for(const Fan& fan, const FaceData& fd, const ConeRays& wall) {
  const auto n = static_cast<std::size_t>(fan.rank());
  auto w = std::find_if(fd.walls.begin(), fd.walls.end(), [&](const Wall& x) { return x.wall == wall; });
  if (w == fd.walls.end()) throw Error(ErrorKind::UnknownCone, "not a wall of the fan", wall);
  auto opposite = [&](int cone) {
    for (int r : fan.max_cones()[static_cast<std::size_t>(cone)]) {
      if (!std::binary_search(wall.begin(), wall.end(), r)) return r;
    }
    throw Error(ErrorKind::TheoremViolation, "maximal cone equals its wall", wall);
  };
  int p = opposite(w->cone_a);
  int q = opposite(w->cone_b);
  if (fan.ray(p) > fan.ray(q)) std::swap(p, q);

  WallRelation rel;
  rel.wall = wall;
  rel.rays = wall;
  rel.rays.push_back(p);
  rel.rays.push_back(q);
  QMat cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(to_qvec(fan.ray(rel.rays[i])));
  QVec rhs = to_qvec(fan.ray(q));
  for (auto& x : rhs) x = -x;
  auto sol = solve(transpose(cols, n), rhs, n);
  if (!sol) throw Error(ErrorKind::TheoremViolation, "wall relation has no solution", wall);
  rel.a = std::move(*sol);
  rel.a.push_back(Rat(1));

  QVec sum(n);
  for (std::size_t i = 0; i <= n; ++i) {
    const IntVec& v = fan.ray(rel.rays[i]);
    for (std::size_t t = 0; t < n; ++t) sum[t] += rel.a[i] * Rat(static_cast<long>(v[t]));
  }
  if (std::any_of(sum.begin(), sum.end(), [](const Rat& x) { return !x.is_zero(); })) {
    throw Error(ErrorKind::TheoremViolation, "wall relation does not vanish", wall);
  }
  if (rel.a[n - 1].sign() <= 0) throw Error(ErrorKind::TheoremViolation, "opposite rays on the same side of a wall", wall);

  for (std::size_t i = 0; i <= n; ++i) {
    const int s = rel.a[i].sign();
    (s < 0 ? rel.j_minus : s == 0 ? rel.j_zero : rel.j_plus).push_back(rel.rays[i]);
  }
  for (auto* j : {&rel.j_minus, &rel.j_zero, &rel.j_plus}) std::sort(j->begin(), j->end());
  return rel;
}

Rat degree(const QVec& divisor, const IntVec& cls) {
  Rat s;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i] != 0) s += divisor[i] * Rat(static_cast<long>(cls[i]));
  }
  return s;
}

QMat as_qmat(const std::vector<IntVec>& vs) {
  QMat m;
  for (const auto& v : vs) m.push_back(to_qvec(v));
  return m;
}

// Maximal cones as sets of ray vectors, for comparing fans whose rays are
// numbered differently.
std::set<std::set<IntVec>> geometric_cones(const Fan& fan) {
  std::set<std::set<IntVec>> out;
  for (const auto& c : fan.max_cones()) {
    std::set<IntVec> s;
    for (int r : c) s.insert(fan.ray(r));
    out.insert(std::move(s));
  }
  return out;
}

bool effective(const QVec& delta) {
  return std::all_of(delta.begin(), delta.end(), [](const Rat& d) { return d.sign() >= 0; });
}

ConeRays without(const std::vector<int>& rays, int r) {
  ConeRays c;
  for (int x : rays) {
    if (x != r) c.push_back(x);
  }
  std::sort(c.begin(), c.end());
  return c;
}

struct FlipSurgery {
  Fan fan;
  std::vector<ConeRays> centers;
  std::vector<ConeRays> removed;
  std::vector<ConeRays> added;
};

FlipSurgery flip_surgery(const Fan& fan, const std::vector<WallRelation>& rels) {
  std::set<ConeRays> centers;
  std::set<ConeRays> removed;
  std::set<ConeRays> added;
  for (const auto& rel : rels) {
    ConeRays center = rel.rays;
    std::sort(center.begin(), center.end());
    if (!centers.insert(center).second) continue;
    for (int j : rel.j_plus) {
      ConeRays c = without(center, j);
      if (fan.max_cone_index(c) < 0) throw Error(ErrorKind::TheoremViolation, "flip: σ^j with j in J+ is not a cone of the fan", c);
      removed.insert(std::move(c));
    }
    for (int j : rel.j_minus) added.insert(without(center, j));
  }
  std::vector<ConeRays> cones;
  for (const auto& c : fan.max_cones()) {
    if (!removed.count(c)) cones.push_back(c);
  }
  cones.insert(cones.end(), added.begin(), added.end());
  Fan out = Fan::make(fan.rank(), fan.rays(), cones);
  if (!out.is_simplicial() || !out.is_complete()) throw Error(ErrorKind::TheoremViolation, "flip produced a non-simplicial or incomplete fan");
  return {std::move(out), {centers.begin(), centers.end()}, {removed.begin(), removed.end()}, {added.begin(), added.end()}};
}

void check_preserved(const MMPStep& s) {
  if (s.non_dicritical_before && !s.non_dicritical_after) {
    throw Error(ErrorKind::TheoremViolation, std::string(to_string(s.kind)) + " step lost non-dicriticality");
  }
  if (s.f_dlt_before && !s.f_dlt_after) {
    throw Error(ErrorKind::TheoremViolation, std::string(to_string(s.kind)) + " step lost the F-dlt property");
  }
}

bool f_dlt_flag(const ToricFoliatedPair& p) { return effective(p.delta()) && static_cast<bool>(is_f_dlt(p)); }

void divisorial(MMPStep& s, const std::vector<WallRelation>& rels) {
  const ToricFoliatedPair& pair = s.before;
  const Fan& fan = pair.fan();
  const int v1 = rels.front().j_minus.front();
  std::vector<std::vector<int>> centers;
  std::set<ConeRays> cones;
  for (const auto& rel : rels) {
    if (rel.j_minus.front() != v1) throw Error(ErrorKind::TheoremViolation, "divisorial ray: walls disagree on the exceptional ray", rel.wall);
    ConeRays center = rel.rays;
    std::sort(center.begin(), center.end());
    centers.push_back(center);
    cones.insert(without(center, v1));
  }
  for (const auto& c : fan.max_cones()) {
    const bool inside = std::any_of(centers.begin(), centers.end(), [&](const ConeRays& z) {
      return std::includes(z.begin(), z.end(), c.begin(), c.end());
    });
    if (!inside) cones.insert(c);
  }
  auto reindex = [&](int r) { return r > v1 ? r - 1 : r; };
  std::vector<ConeRays> mapped;
  for (const auto& c : cones) {
    ConeRays m;
    for (int r : c) {
      if (r == v1) throw Error(ErrorKind::TheoremViolation, "divisorial ray: a cone outside R still contains the exceptional ray", c);
      m.push_back(reindex(r));
    }
    mapped.push_back(std::move(m));
  }
  std::vector<IntVec> rays;
  QVec delta;
  for (int r = 0; r < fan.num_rays(); ++r) {
    if (r == v1) continue;
    rays.push_back(fan.ray(r));
    delta.push_back(pair.delta()[static_cast<std::size_t>(r)]);
  }
  Fan sigma0 = Fan::make(fan.rank(), std::move(rays), std::move(mapped));
  if (geometric_cones(star_subdivide(sigma0, fan.ray(v1))) != geometric_cones(fan)) {
    throw Error(ErrorKind::TheoremViolation, "the fan is not the star subdivision of the contracted fan");
  }
  s.contracted_ray = fan.ray(v1);
  s.after.emplace(std::move(sigma0), pair.W(), std::move(delta));
}

void flip(MMPStep& s, const std::vector<WallRelation>& rels) {
  const ToricFoliatedPair& pair = s.before;
  FlipSurgery f = flip_surgery(pair.fan(), rels);
  s.flip_centers = std::move(f.centers);
  s.removed_cones = std::move(f.removed);
  s.added_cones = std::move(f.added);
  s.after.emplace(std::move(f.fan), pair.W(), pair.delta());
}

void fiber(MMPStep& s, const std::vector<WallRelation>& rels) {
  const ToricFoliatedPair& pair = s.before;
  const Fan& fan = pair.fan();
  const int n = fan.rank();
  auto span_of = [&](const std::vector<int>& idx) {
    QMat g;
    for (int r : idx) g.push_back(to_qvec(fan.ray(r)));
    return RatSubspace::span(n, g);
  };
  RatSubspace U = span_of(rels.front().j_plus);
  for (const auto& rel : rels) {
    if (!(span_of(rel.j_plus) == U)) throw Error(ErrorKind::TheoremViolation, "fiber type ray: walls disagree on the fiber", rel.wall);
  }
  const bool contained = std::all_of(U.basis().begin(), U.basis().end(), [&](const QVec& u) { return pair.W().contains(u); });
  if (s.non_dicritical_before && !contained) {
    throw Error(ErrorKind::TheoremViolation, "fiber type contraction of a non-dicritical pair with U not in W");
  }
  s.u_in_w_certified = contained;
  Quotient q = contained ? quotient_foliation(pair.W(), U) : project_foliation(pair.W(), U);
  const int m = static_cast<int>(q.projection.size());

  std::vector<IntVec> rays;
  std::vector<int> image(static_cast<std::size_t>(fan.num_rays()), -1);
  QVec delta;
  for (int r = 0; r < fan.num_rays(); ++r) {
    if (U.contains(to_qvec(fan.ray(r)))) continue;
    const IntVec v = primitive_vector(project_vector(q.projection, fan.ray(r)));
    auto it = std::find(rays.begin(), rays.end(), v);
    const auto k = static_cast<std::size_t>(it - rays.begin());
    const Rat& d = pair.delta()[static_cast<std::size_t>(r)];
    if (it == rays.end()) {
      rays.push_back(v);
      delta.push_back(d);
    } else if (d < delta[k]) {
      delta[k] = d;
    }
    image[static_cast<std::size_t>(r)] = static_cast<int>(k);
  }
  std::vector<ConeRays> cones;
  for (const auto& c : fan.max_cones()) {
    ConeRays img;
    for (int r : c) {
      if (image[static_cast<std::size_t>(r)] >= 0) img.push_back(image[static_cast<std::size_t>(r)]);
    }
    cones.push_back(std::move(img));
  }
  Fan base = Fan::make(m, std::move(rays), std::move(cones));
  if (!base.is_complete()) throw Error(ErrorKind::TheoremViolation, "base of the fiber type contraction is not complete");
  s.U = std::move(U);
  s.projection = q.projection;
  s.after.emplace(std::move(base), std::move(q.W_bar), std::move(delta));
}

}  // namespace

IntVec WallRelation::curve_class(int num_rays) const {
  QVec c(static_cast<std::size_t>(num_rays));
  for (std::size_t i = 0; i < rays.size(); ++i) c[static_cast<std::size_t>(rays[i])] = a[i];
  return to_intvec(clear_denominators(c));
}

WallRelation wall_relation(const Fan& fan, const ConeRays& wall) {
  require_simplicial(fan);
  ConeRays w = wall;
  std::sort(w.begin(), w.end());
  return relation_for(fan, faces_and_walls(fan), w);
}

std::vector<WallClass> wall_classes(const ToricFoliatedPair& pair) {
  const Fan& fan = pair.fan();
  require_simplicial(fan);
  const FaceData fd = faces_and_walls(fan);
  const QVec k = log_canonical_divisor(pair);
  std::vector<WallClass> out;
  for (const auto& w : fd.walls) {
    WallRelation rel = relation_for(fan, fd, w.wall);
    IntVec cls = rel.curve_class(fan.num_rays());
    Rat deg = degree(k, cls);
    out.push_back({std::move(rel), std::move(cls), std::move(deg)});
  }
  return out;
}

std::vector<ExtremalRay> extremal_rays(const ToricFoliatedPair& pair) {
  std::map<IntVec, ExtremalRay> groups;
  for (auto& wc : wall_classes(pair)) {
    auto [it, fresh] = groups.try_emplace(wc.curve_class);
    if (fresh) {
      it->second.curve_class = wc.curve_class;
      it->second.intersection = wc.intersection;
    }
    it->second.walls.push_back(wc.relation.wall);
  }
  std::vector<IntVec> classes;
  for (const auto& [cls, r] : groups) classes.push_back(cls);
  const int dim = pair.fan().num_rays();
  if (!classes.empty() && !is_pointed(as_qmat(classes), dim)) {
    throw Error(ErrorKind::NotProjective, "wall classes span a cone containing a line");
  }
  std::vector<ExtremalRay> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<IntVec> others = classes;
    others.erase(others.begin() + static_cast<long>(i));
    if (others.empty() || !in_cone(as_qmat(others), to_qvec(classes[i]))) out.push_back(groups.at(classes[i]));
  }
  return out;
}

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::Divisorial: return "Divisorial";
    case StepKind::Flip: return "Flip";
    case StepKind::MoriFiberSpace: return "MoriFiberSpace";
    case StepKind::Terminate: return "Terminate";
  }
  return "?";
}

Fan flip_fan(const Fan& fan, const std::vector<ConeRays>& walls) {
  require_simplicial(fan);
  const FaceData fd = faces_and_walls(fan);
  std::vector<WallRelation> rels;
  for (const auto& w : walls) rels.push_back(relation_for(fan, fd, w));
  return flip_surgery(fan, rels).fan;
}

MMPStep contract_ray(const ToricFoliatedPair& pair, const ExtremalRay& R) {
  if (R.sign() >= 0) throw Error(ErrorKind::NotExtremal, "ray is not (K_F+Δ)-negative");
  const auto rays = extremal_rays(pair);
  if (std::none_of(rays.begin(), rays.end(), [&](const ExtremalRay& x) { return x.curve_class == R.curve_class; })) {
    throw Error(ErrorKind::NotExtremal, "class " + to_string(R.curve_class) + " is not an extremal ray");
  }
  const Fan& fan = pair.fan();
  const FaceData fd = faces_and_walls(fan);
  std::vector<WallRelation> rels;
  for (const auto& w : R.walls) rels.push_back(relation_for(fan, fd, w));
  const int alpha = rels.front().alpha();
  for (const auto& rel : rels) {
    if (rel.alpha() != alpha) throw Error(ErrorKind::TheoremViolation, "walls of one extremal ray disagree on α", rel.wall);
    if (rel.curve_class(fan.num_rays()) != R.curve_class) throw Error(ErrorKind::TheoremViolation, "wall class differs from the ray", rel.wall);
  }

  MMPStep s{alpha == 0 ? StepKind::MoriFiberSpace : alpha == 1 ? StepKind::Divisorial : StepKind::Flip, R, alpha, pair};
  s.non_dicritical_before = static_cast<bool>(is_non_dicritical(fan, pair.W()));
  s.f_dlt_before = f_dlt_flag(pair);
  switch (s.kind) {
    case StepKind::Divisorial: divisorial(s, rels); break;
    case StepKind::Flip: flip(s, rels); break;
    default: fiber(s, rels); break;
  }
  s.non_dicritical_after = static_cast<bool>(is_non_dicritical(s.after->fan(), s.after->W()));
  s.f_dlt_after = f_dlt_flag(*s.after);
  if (s.kind != StepKind::MoriFiberSpace) check_preserved(s);
  return s;
}

MMPTrace run_mmp(const ToricFoliatedPair& pair, int max_steps) {
  if (!effective(pair.delta())) throw Error(ErrorKind::NegativeDelta, "the MMP needs an effective boundary");
  if (Verdict lc = is_log_canonical(pair); !lc) {
    throw Error(ErrorKind::NotLogCanonical, "the MMP needs a log canonical pair: " + lc.reason, lc.ray ? std::vector<int>{*lc.ray} : std::vector<int>{});
  }
  if (!pair.fan().is_complete() || !pair.fan().is_simplicial()) {
    throw Error(ErrorKind::InvalidFan, "the MMP needs a complete simplicial fan");
  }
  MMPTrace trace;
  ToricFoliatedPair cur = pair;
  for (;;) {
    const auto rays = extremal_rays(cur);
    auto neg = std::find_if(rays.begin(), rays.end(), [](const ExtremalRay& r) { return r.sign() < 0; });
    if (neg == rays.end()) {
      MMPStep t{StepKind::Terminate, std::nullopt, 0, cur};
      t.nef_certificate = wall_classes(cur);
      for (const auto& wc : t.nef_certificate) {
        if (wc.intersection.sign() < 0) throw Error(ErrorKind::TheoremViolation, "negative wall with no negative extremal ray", wc.relation.wall);
      }
      t.non_dicritical_before = t.non_dicritical_after = static_cast<bool>(is_non_dicritical(cur.fan(), cur.W()));
      t.f_dlt_before = t.f_dlt_after = f_dlt_flag(cur);
      trace.steps.push_back(std::move(t));
      return trace;
    }
    if (static_cast<int>(trace.steps.size()) >= max_steps) {
      throw Error(ErrorKind::IterationCap, "MMP step cap of " + std::to_string(max_steps) + " reached");
    }
    MMPStep s = contract_ray(cur, *neg);
    const bool done = s.kind == StepKind::MoriFiberSpace;
    ToricFoliatedPair next = *s.after;
    trace.steps.push_back(std::move(s));
    if (done) return trace;
    cur = std::move(next);
  }
}

std::vector<ConeCertificate> cone_certificate(const ToricFoliatedPair& pair) {
  if (!effective(pair.delta())) throw Error(ErrorKind::NegativeDelta, "cone certificates need an effective boundary");
  if (Verdict lc = is_log_canonical(pair); !lc) throw Error(ErrorKind::NotLogCanonical, "cone certificates need a log canonical pair: " + lc.reason);
  const Fan& fan = pair.fan();
  const FaceData fd = faces_and_walls(fan);
  const auto n = static_cast<std::size_t>(fan.rank());
  std::vector<ConeCertificate> out;
  for (const auto& R : extremal_rays(pair)) {
    if (R.sign() >= 0) continue;
    const WallRelation rel = relation_for(fan, fd, R.walls.front());
    std::optional<std::size_t> ell;
    for (std::size_t i = 0; i <= n; ++i) {
      if (rel.a[i].sign() > 0 && pair.W().contains(fan.ray(rel.rays[i])) && (!ell || *ell == n)) ell = i;
    }
    if (!ell) throw Error(ErrorKind::TheoremViolation, "negative extremal ray with no positive coefficient in W", rel.wall);
    const std::size_t drop = *ell == n ? n - 1 : *ell;
    ConeRays curve;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != drop) curve.push_back(rel.rays[i]);
    }
    std::sort(curve.begin(), curve.end());
    ConeCertificate c{R, rel.wall, rel.rays[*ell], curve, is_tangent(fan, pair.W(), curve)};
    if (!c.tangent) throw Error(ErrorKind::TheoremViolation, "certificate curve is not tangent to the foliation", curve);
    if (relation_for(fan, fd, curve).curve_class(fan.num_rays()) != R.curve_class) {
      throw Error(ErrorKind::TheoremViolation, "certificate curve does not span the extremal ray", curve);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace torifol
