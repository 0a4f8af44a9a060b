#include "torifol/singularities.hpp"

#include <algorithm>

#include "torifol/divisor.hpp"
#include "torifol/errors.hpp"
#include "torifol/linalg.hpp"

namespace torifol {

namespace {

Verdict fail(std::string reason) {
  Verdict v;
  v.value = false;
  v.reason = std::move(reason);
  return v;
}

bool all_in_W(const Fan& fan, const GaussianSubspace& W, const ConeRays& c) {
  return std::all_of(c.begin(), c.end(), [&](int r) { return W.contains(fan.ray(r)); });
}

void require_zero_delta(const ToricFoliatedPair& pair) {
  if (!pair.delta_is_zero()) throw Error(ErrorKind::NonZeroDelta, "criterion is stated for delta = 0 only");
}

void require_cone(const Fan& fan, const ConeRays& c) {
  if (!fan.has_cone(c)) throw Error(ErrorKind::UnknownCone, "cone is not in the fan", c);
}

std::vector<Equation> as_equations(const QMat& rows) {
  std::vector<Equation> out;
  for (const auto& r : rows) out.push_back({r, Rat(0)});
  return out;
}

}  // namespace

Verdict is_non_dicritical(const Fan& fan, const GaussianSubspace& W) {
  const RatSubspace& V = W.real_trace();
  if (V.dim() == 0) return {};
  for (const auto& c : fan.cones()) {
    if (c.empty() || all_in_W(fan, W, c)) continue;
    if (auto w = strict_meet_witness(fan.generators(c), V)) {
      Verdict v = fail("relative interior meets W but the cone is not contained in W");
      v.cone = c;
      v.point = std::move(w);
      return v;
    }
  }
  return {};
}

std::vector<ConeRays> singular_locus(const Fan& fan, const GaussianSubspace& W) {
  if (!fan.is_simplicial()) throw Error(ErrorKind::NonSimplicialFan, "singular locus criterion needs a simplicial fan");
  const auto n = static_cast<std::size_t>(fan.rank());
  std::vector<ConeRays> out;
  for (const auto& c : fan.cones()) {
    GMat m = W.basis();
    int in_w = 0;
    for (int r : c) {
      m.push_back(to_gvec(fan.ray(r)));
      in_w += W.contains(fan.ray(r)) ? 1 : 0;
    }
    const int meet = W.dim() + static_cast<int>(c.size()) - gauss_rank(m, n);
    if (meet != in_w) out.push_back(c);
  }
  return out;
}

Verdict is_log_canonical(const ToricFoliatedPair& pair) {
  for (int r = 0; r < pair.fan().num_rays(); ++r) {
    const Rat& d = pair.delta()[static_cast<std::size_t>(r)];
    const int iota = pair.iota()[static_cast<std::size_t>(r)];
    if (d > Rat(iota)) {
      Verdict v = fail(iota ? "coefficient exceeds 1 on a non-invariant ray" : "positive coefficient on an invariant ray");
      v.ray = r;
      return v;
    }
  }
  return {};
}

Verdict is_canonical(const ToricFoliatedPair& pair) {
  require_zero_delta(pair);
  const Fan& fan = pair.fan();
  const RatSubspace& V = pair.W().real_trace();
  if (V.dim() == 0) return {};
  const auto n = static_cast<std::size_t>(fan.rank());
  const QMat eqs = V.equations();
  for (std::size_t a = 0; a < fan.max_cones().size(); ++a) {
    const ConeRays& c = fan.max_cones()[a];
    // (a) V meets the face where φ vanishes.
    std::vector<IntVec> zero_face;
    for (int r : c) {
      if (!pair.iota()[static_cast<std::size_t>(r)]) zero_face.push_back(fan.ray(r));
    }
    if (!zero_face.empty()) {
      const std::size_t k = zero_face.size();
      QMat A(eqs.size() + 1, QVec(k));
      QVec b(eqs.size() + 1);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < eqs.size(); ++i) A[i][j] = dot(eqs[i], zero_face[j]);
        A[eqs.size()][j] = 1;
      }
      b[eqs.size()] = 1;
      if (auto lam = simplex_feasible(A, b, k)) {
        QVec x(n);
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t t = 0; t < n; ++t) x[t] += (*lam)[j] * Rat(static_cast<long>(zero_face[j][t]));
        }
        Verdict v = fail("W meets the cone where the support function vanishes");
        v.cone = c;
        v.point = primitive_vector(x);
        return v;
      }
    }
    // (b) lattice points of the polytope V ∩ σ ∩ {φ <= 1}.
    const ConeH& h = fan.hrep(static_cast<int>(a));
    const QVec& m = pair.phi().m[a];
    std::vector<Inequality> ineqs;
    for (const auto& nrm : h.normals) ineqs.push_back({nrm, Rat(0)});
    QVec neg_m(n);
    for (std::size_t t = 0; t < n; ++t) neg_m[t] = -m[t];
    ineqs.push_back({neg_m, Rat(-1)});
    std::vector<Equation> all_eqs = as_equations(eqs);
    for (auto& e : as_equations(h.equations)) all_eqs.push_back(std::move(e));
    const RatPolyhedron P = RatPolyhedron::from_inequalities(fan.rank(), ineqs, all_eqs);
    for (const auto& u : enumerate_lattice_points(P, true)) {
      if (std::all_of(u.begin(), u.end(), [](std::int64_t x) { return x == 0; })) continue;
      if (dot(m, u) < Rat(1)) {
        Verdict v = fail("lattice point of W in the cone with support function below 1");
        v.cone = c;
        v.point = primitive_vector(u);
        return v;
      }
    }
  }
  return {};
}

Verdict is_terminal_at(const ToricFoliatedPair& pair, const ConeRays& cone) {
  require_zero_delta(pair);
  const Fan& fan = pair.fan();
  require_cone(fan, cone);
  const bool meets_w = std::any_of(cone.begin(), cone.end(), [&](int r) { return pair.iota()[static_cast<std::size_t>(r)] == 1; });
  if (!meets_w) {
    Verdict v = fail("no ray of the cone lies in W");
    v.cone = cone;
    return v;
  }
  const auto n = static_cast<std::size_t>(fan.rank());
  const int a = fan.max_cone_containing_face(cone);
  const QVec& m = pair.phi().m[static_cast<std::size_t>(a)];
  const ConeH h = cone_hrep(fan.generators(cone), fan.rank());
  // Lattice points in the relative interior: integral facet normals are >= 1.
  std::vector<Inequality> ineqs;
  for (const auto& nrm : h.normals) ineqs.push_back({nrm, Rat(1)});
  QVec neg_m(n);
  for (std::size_t t = 0; t < n; ++t) neg_m[t] = -m[t];
  ineqs.push_back({neg_m, Rat(-1)});
  std::vector<Equation> eqs = as_equations(pair.W().real_trace().equations());
  for (auto& e : as_equations(h.equations)) eqs.push_back(std::move(e));
  const RatPolyhedron P = RatPolyhedron::from_inequalities(fan.rank(), ineqs, eqs);
  const auto pts = enumerate_lattice_points(P, false);
  if (!pts.empty()) {
    Verdict v = fail("lattice point of W in the relative interior with support function at most 1");
    v.cone = cone;
    v.point = primitive_vector(pts.front());
    return v;
  }
  return {};
}

Verdict is_f_dlt(const ToricFoliatedPair& pair) {
  const Fan& fan = pair.fan();
  for (const auto& d : pair.delta()) {
    if (d.sign() < 0) throw Error(ErrorKind::NegativeDelta, "F-dlt criterion needs an effective boundary");
  }
  for (int r = 0; r < fan.num_rays(); ++r) {
    const Rat& d = pair.delta()[static_cast<std::size_t>(r)];
    if (d.sign() <= 0) continue;
    if (!pair.iota()[static_cast<std::size_t>(r)] || d > Rat(1)) {
      Verdict v = fail(pair.iota()[static_cast<std::size_t>(r)] ? "boundary coefficient exceeds 1"
                                                                : "boundary supported on an invariant ray");
      v.ray = r;
      return v;
    }
  }
  const RatSubspace& V = pair.W().real_trace();
  for (const auto& c : fan.cones()) {
    if (c.empty()) continue;
    // φ(v_ρ) = ι_ρ - d_ρ.
    const bool phi_zero = std::all_of(c.begin(), c.end(), [&](int r) {
      const auto i = static_cast<std::size_t>(r);
      return Rat(pair.iota()[i]) == pair.delta()[i];
    });
    if (!phi_zero) continue;
    if (!fan.is_simplicial_cone(c)) {
      Verdict v = fail("non-simplicial cone on which the support function vanishes");
      v.cone = c;
      return v;
    }
    if (all_in_W(fan, pair.W(), c)) continue;
    if (auto w = strict_meet_witness(fan.generators(c), V)) {
      Verdict v = fail("dicritical cone on which the support function vanishes");
      v.cone = c;
      v.point = std::move(w);
      return v;
    }
  }
  return {};
}

bool is_tangent(const Fan& fan, const GaussianSubspace& W, const ConeRays& cone) {
  require_cone(fan, cone);
  GMat m = W.basis();
  for (int r : cone) m.push_back(to_gvec(fan.ray(r)));
  return gauss_rank(m, static_cast<std::size_t>(fan.rank())) == fan.rank();
}

Verdict has_simple_singularities(const Fan& fan, const GaussianSubspace& W) {
  if (!fan.is_smooth()) throw Error(ErrorKind::NonSmoothFan, "simple singularities are defined on smooth fans");
  return is_non_dicritical(fan, W);
}

bool is_non_resonant(const std::vector<GaussRat>& lambda) {
  const std::size_t m = lambda.size();
  for (const auto& l : lambda) {
    if (l.is_zero()) throw Error(ErrorKind::ZeroVector, "non-resonance needs nonzero entries");
  }
  std::vector<Inequality> ineqs;
  for (std::size_t k = 0; k < m; ++k) {
    Inequality r{QVec(m), Rat(0)};
    r.a[k] = 1;
    ineqs.push_back(std::move(r));
  }
  Equation sum{QVec(m, Rat(1)), Rat(1)};
  Equation re{QVec(m), Rat(0)};
  Equation im{QVec(m), Rat(0)};
  for (std::size_t k = 0; k < m; ++k) {
    re.a[k] = lambda[k].re();
    im.a[k] = lambda[k].im();
  }
  return !fm_solve(static_cast<int>(m), ineqs, {sum, re, im}).has_value();
}

}  // namespace torifol
