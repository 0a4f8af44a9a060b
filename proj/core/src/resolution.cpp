#include "torifol/resolution.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "torifol/divisor.hpp"
#include "torifol/errors.hpp"
#include "torifol/linalg.hpp"

namespace torifol {

namespace {

QMat qgens(const Fan& fan, const ConeRays& c) {
  QMat g;
  for (int r : c) g.push_back(to_qvec(fan.ray(r)));
  return g;
}

void record(RefinementMorphism& m, const IntVec& u) {
  m.log.push_back(u);
  if (m.source.find_ray(u) < 0) m.added_rays.push_back(u);
}

void step(RefinementMorphism& m, const IntVec& u, int cap) {
  if (static_cast<int>(m.log.size()) >= cap) {
    throw Error(ErrorKind::IterationCap, "subdivision cap of " + std::to_string(cap) + " reached");
  }
  record(m, u);
  m.source = star_subdivide(m.source, u);
}

std::vector<Int> multiplicities_desc(const Fan& fan) {
  std::vector<Int> out;
  for (const auto& c : fan.max_cones()) out.push_back(fan.multiplicity(c));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

Fan RefinementMorphism::replay() const {
  Fan f = target;
  for (const auto& u : log) f = star_subdivide(f, u);
  return f;
}

RefinementMorphism identity_morphism(const Fan& fan) { return {fan, fan, {}, {}}; }

RefinementMorphism compose(const RefinementMorphism& a, const RefinementMorphism& b) {
  if (!(b.target == a.source)) throw Error(ErrorKind::Validation, "compose: morphisms do not match");
  RefinementMorphism out{a.target, b.source, a.log, a.added_rays};
  out.log.insert(out.log.end(), b.log.begin(), b.log.end());
  out.added_rays.insert(out.added_rays.end(), b.added_rays.begin(), b.added_rays.end());
  return out;
}

RefinementMorphism simplicialize_same_rays(const Fan& fan, int cap) {
  RefinementMorphism m = identity_morphism(fan);
  const auto n = static_cast<std::size_t>(fan.rank());
  for (;;) {
    const Fan& cur = m.source;
    auto it = std::find_if(cur.max_cones().begin(), cur.max_cones().end(),
                           [&](const ConeRays& c) { return !cur.is_simplicial_cone(c); });
    if (it == cur.max_cones().end()) break;
    const ConeRays& c = *it;
    const int dim = cur.cone_dim(c);
    std::vector<IntVec> candidates;
    for (std::size_t j = 0; j < c.size(); ++j) {
      ConeRays others = c;
      others.erase(others.begin() + static_cast<long>(j));
      if (rank(qgens(cur, others), n) == dim) candidates.push_back(cur.ray(c[j]));  // not an apex
    }
    const IntVec u = *std::min_element(candidates.begin(), candidates.end());
    step(m, u, cap);
  }
  return m;
}

RefinementMorphism dagger_resolution(const Fan& fan, const GaussianSubspace& W, int cap) {
  RefinementMorphism m = simplicialize_same_rays(fan, cap);
  const RatSubspace& V = W.real_trace();
  if (V.dim() > 0) {
    for (int k = 2; k <= fan.rank(); ++k) {
      std::set<IntVec> s_k;
      for (const auto& c : m.source.cones()) {
        if (static_cast<int>(c.size()) != k) continue;
        if (std::all_of(c.begin(), c.end(), [&](int r) { return W.contains(m.source.ray(r)); })) continue;
        auto w = strict_meet_witness(m.source.generators(c), V);
        if (!w) continue;
        const RatSubspace span = RatSubspace::span(fan.rank(), qgens(m.source, c));
        if (span.intersect(V).dim() != 1) {
          throw Error(ErrorKind::TheoremViolation, "W meets a cone in more than a ray after the lower steps", c);
        }
        s_k.insert(*w);
      }
      for (const auto& u : s_k) step(m, u, cap);
    }
  }
  const Verdict v = is_non_dicritical(m.source, W);
  if (!v) throw Error(ErrorKind::TheoremViolation, "dagger_resolution output violates condition (†)", v.cone.value_or(ConeRays{}));
  return m;
}

namespace {

constexpr std::size_t kMaxParallelotopePoints = 200000;

// Least nonzero lattice point Σ c_i g_i with 0 <= c_i < 1: minimal Σ c_i,
// ties broken by the lexicographically least vector. The coefficient
// vectors mod 1 form a group of order mult(σ), generated by the images of
// a basis of N ∩ span(σ), so we enumerate it by closure.
IntVec parallelotope_point(const std::vector<IntVec>& gens, std::size_t n) {
  const std::size_t k = gens.size();
  QMat g;
  for (const auto& v : gens) g.push_back(to_qvec(v));
  const QMat gt = transpose(g, n);  // n x k, columns are generators

  std::vector<QVec> lattice;
  if (k == n) {
    for (std::size_t t = 0; t < n; ++t) {
      QVec e(n);
      e[t] = 1;
      lattice.push_back(std::move(e));
    }
  } else {
    ZMat eqs;
    for (const auto& e : RatSubspace::span(static_cast<int>(n), g).equations()) eqs.push_back(clear_denominators(e));
    for (const auto& b : integer_kernel(eqs, n)) lattice.push_back(to_qvec(b));
  }
  auto reduce = [](QVec c) {
    for (auto& x : c) x -= Rat(x.floor());
    return c;
  };
  std::vector<QVec> gen_classes;
  for (const auto& b : lattice) {
    auto c = solve(gt, b, k);
    if (!c) throw Error(ErrorKind::TheoremViolation, "lattice vector outside the span of its cone");
    gen_classes.push_back(reduce(std::move(*c)));
  }
  std::set<QVec> group{QVec(k)};
  std::vector<QVec> frontier{QVec(k)};
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const auto& a : frontier) {
      for (const auto& b : gen_classes) {
        QVec sum(k);
        for (std::size_t i = 0; i < k; ++i) sum[i] = a[i] + b[i];
        sum = reduce(std::move(sum));
        if (group.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    frontier = std::move(next);
    if (group.size() > kMaxParallelotopePoints) {
      throw Error(ErrorKind::IterationCap, "cone multiplicity too large for parallelotope enumeration");
    }
  }

  std::optional<IntVec> best;
  Rat best_sum;
  for (const auto& c : group) {
    Rat s;
    for (const auto& r : c) s += r;
    if (s.is_zero()) continue;
    QVec x(n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t t = 0; t < n; ++t) x[t] += c[i] * g[i][t];
    }
    IntVec xi;
    for (const auto& q : x) xi.push_back(q.floor().get_si());
    if (!best || s < best_sum || (s == best_sum && xi < *best)) {
      best = std::move(xi);
      best_sum = s;
    }
  }
  if (!best) throw Error(ErrorKind::TheoremViolation, "no parallelotope point in a cone of multiplicity > 1");
  return primitive_vector(*best);
}

}  // namespace

RefinementMorphism smooth_refinement(const Fan& fan, int cap) {
  if (!fan.is_simplicial()) throw Error(ErrorKind::NonSimplicialFan, "smooth_refinement needs a simplicial fan");
  RefinementMorphism m = identity_morphism(fan);
  const auto n = static_cast<std::size_t>(fan.rank());
  for (;;) {
    const Fan& cur = m.source;
    auto it = std::find_if(cur.max_cones().begin(), cur.max_cones().end(),
                           [&](const ConeRays& c) { return cur.multiplicity(c) != 1; });
    if (it == cur.max_cones().end()) break;
    const IntVec u = parallelotope_point(cur.generators(*it), n);
    const auto before = multiplicities_desc(cur);
    step(m, u, cap);
    const auto after = multiplicities_desc(m.source);
    // Termination measure: the multiset of multiplicities drops, comparing
    // the sorted lists from the top.
    if (!std::lexicographical_compare(after.begin(), after.end(), before.begin(), before.end())) {
      throw Error(ErrorKind::TheoremViolation, "smooth_refinement step did not decrease multiplicities");
    }
  }
  return m;
}

ResolvedPair foliated_log_resolution(const ToricFoliatedPair& pair, int cap) {
  const RefinementMorphism d = dagger_resolution(pair.fan(), pair.W(), cap);
  const RefinementMorphism s = smooth_refinement(d.source, cap);
  RefinementMorphism m = compose(d, s);
  QVec delta(static_cast<std::size_t>(m.source.num_rays()), Rat(1));
  for (std::size_t i = 0; i < pair.delta().size(); ++i) delta[i] = pair.delta()[i];
  ToricFoliatedPair out(m.source, pair.W(), std::move(delta));
  return {std::move(m), std::move(out)};
}

FdltModification fdlt_modification(const ToricFoliatedPair& pair, int cap) {
  for (const auto& d : pair.delta()) {
    if (d.sign() < 0) throw Error(ErrorKind::NegativeDelta, "F-dlt modification needs an effective boundary");
  }
  RefinementMorphism m = dagger_resolution(pair.fan(), pair.W(), cap);
  const Fan& f = m.source;
  QVec delta(static_cast<std::size_t>(f.num_rays()));
  for (int r = 0; r < f.num_rays(); ++r) {
    const auto i = static_cast<std::size_t>(r);
    const int iota = ray_iota(pair.W(), f.ray(r));
    if (r < pair.fan().num_rays()) {
      delta[i] = iota ? std::min(pair.delta()[i], Rat(1)) : Rat(0);
    } else {
      delta[i] = Rat(iota);
    }
  }
  std::vector<Extraction> extracted;
  for (const auto& v : m.added_rays) {
    Rat phi = evaluate_phi(pair.phi(), pair.fan(), v);
    if (phi.sign() > 0) {
      throw Error(ErrorKind::TheoremViolation, "extracted ray " + to_string(v) + " has positive log discrepancy");
    }
    extracted.push_back({v, std::move(phi)});
  }
  ToricFoliatedPair out(f, pair.W(), std::move(delta));
  Verdict v = is_f_dlt(out);
  if (!v) throw Error(ErrorKind::TheoremViolation, "F-dlt modification output is not F-dlt: " + v.reason);
  return {std::move(m), std::move(out), std::move(extracted), std::move(v)};
}

}  // namespace torifol
