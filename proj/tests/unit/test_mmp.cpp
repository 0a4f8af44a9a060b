#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "random.hpp"
#include "torifol/errors.hpp"
#include "torifol/mmp.hpp"
#include "torifol/singularities.hpp"

using namespace torifol;
using namespace torifol::testing;

namespace {

// Face fan of conv{e1, e2, e3, (1,1,-1), -e1, -e2, -e3}. The points
// e1, e2, e3, (1,1,-1) span a quadrilateral facet, triangulated along e1e2.
Fan quad_fan() {
  return Fan::make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
                   {{0, 1, 2}, {0, 1, 3}, {0, 2, 5}, {0, 3, 6}, {0, 5, 6}, {1, 2, 4}, {1, 3, 6}, {1, 4, 6}, {2, 4, 5}, {4, 5, 6}});
}

const ExtremalRay& ray_with_class(const std::vector<ExtremalRay>& rays, const IntVec& cls) {
  for (const auto& r : rays) {
    if (r.curve_class == cls) return r;
  }
  FAIL("no extremal ray with class " << to_string(cls));
  return rays.front();
}

Rat degree(const QVec& k, const IntVec& cls) {
  Rat s;
  for (std::size_t i = 0; i < cls.size(); ++i) s += k[i] * Rat(static_cast<long>(cls[i]));
  return s;
}

}  // namespace

TEST_CASE("wall relation examples") {
  const WallRelation p2 = wall_relation(p2_fan(), {0});
  CHECK(p2.a == QVec{Rat(1), Rat(1), Rat(1)});
  CHECK(p2.alpha() == 0);
  CHECK(p2.j_plus == std::vector<int>{0, 1, 2});

  const WallRelation e = wall_relation(f1_fan(), {1});
  CHECK(e.rays == std::vector<int>{1, 2, 0});
  CHECK(e.a == QVec{Rat(-1), Rat(1), Rat(1)});
  CHECK(e.j_minus == std::vector<int>{1});
  CHECK(e.alpha() == 1);
  CHECK(e.curve_class(4) == IntVec{1, -1, 1, 0});

  const WallRelation f = wall_relation(f1_fan(), {0});
  CHECK(f.j_zero == std::vector<int>{0});
  CHECK(f.j_plus == std::vector<int>{1, 3});
  CHECK(f.alpha() == 0);
  CHECK(f.curve_class(4) == IntVec{0, 1, 0, 1});

  CHECK_THROWS_AS(wall_relation(f1_fan(), {0, 1}), Error);
  CHECK_THROWS_AS(wall_relation(orthant(2), {0}), Error);
  CHECK_THROWS_AS(wall_relation(square_cone(), {0}), Error);
}

TEST_CASE("wall relations are well formed on random fans") {
  Rng rng = make_rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Fan fan = random_complete_fan(rng, uniform(rng, 2, 3));
    const std::size_t n = static_cast<std::size_t>(fan.rank());
    for (const auto& w : faces_and_walls(fan).walls) {
      const WallRelation rel = wall_relation(fan, w.wall);
      REQUIRE(rel.rays.size() == n + 1);
      CHECK(rel.a[n] == Rat(1));
      CHECK(rel.a[n - 1].sign() > 0);
      CHECK(fan.ray(rel.rays[n - 1]) < fan.ray(rel.rays[n]));
      for (std::size_t t = 0; t < n; ++t) {
        Rat s;
        for (std::size_t i = 0; i <= n; ++i) s += rel.a[i] * Rat(static_cast<long>(fan.ray(rel.rays[i])[t]));
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("sign convention: -K is positive on every wall of P^n") {
  for (const Fan& fan : {p2_fan(), p3_fan()}) {
    const ToricFoliatedPair pair(fan, GaussianSubspace::full(fan.rank()));
    for (const auto& wc : wall_classes(pair)) CHECK(wc.intersection.sign() < 0);
    const auto rays = extremal_rays(pair);
    REQUIRE(rays.size() == 1);
    CHECK(rays[0].intersection == Rat(-(fan.rank() + 1)));
  }
}

TEST_CASE("extremal rays of F1") {
  const ToricFoliatedPair pair(f1_fan(), span_of(2, {{"0", "1"}}));
  const auto rays = extremal_rays(pair);
  REQUIRE(rays.size() == 2);
  const ExtremalRay& f = ray_with_class(rays, {0, 1, 0, 1});
  const ExtremalRay& e = ray_with_class(rays, {1, -1, 1, 0});
  CHECK(f.intersection == Rat(-2));
  CHECK(f.walls == std::vector<ConeRays>{{0}, {2}});
  CHECK(e.intersection == Rat(1));
  // The wall Cone((0,-1)) has class E + f.
  const auto all = wall_classes(pair);
  CHECK(std::any_of(all.begin(), all.end(), [](const WallClass& w) { return w.curve_class == IntVec{1, 0, 1, 1}; }));
}

TEST_CASE("contraction examples") {
  const ToricFoliatedPair w10(f1_fan(), span_of(2, {{"1", "0"}}));
  const auto rays = extremal_rays(w10);
  const ExtremalRay& e = ray_with_class(rays, {1, -1, 1, 0});
  CHECK(e.sign() < 0);
  const MMPStep d = contract_ray(w10, e);
  CHECK(d.kind == StepKind::Divisorial);
  CHECK(d.contracted_ray == IntVec{0, 1});
  REQUIRE(d.after);
  CHECK(d.after->fan().rays() == std::vector<IntVec>{{1, 0}, {-1, 1}, {0, -1}});
  CHECK(d.after->fan().is_complete());
  CHECK_THROWS_AS(contract_ray(w10, ray_with_class(rays, {0, 1, 0, 1})), Error);

  const ToricFoliatedPair w01(f1_fan(), span_of(2, {{"0", "1"}}));
  const MMPStep m = contract_ray(w01, ray_with_class(extremal_rays(w01), {0, 1, 0, 1}));
  CHECK(m.kind == StepKind::MoriFiberSpace);
  CHECK(m.u_in_w_certified);
  REQUIRE(m.U);
  CHECK(m.U->dim() == 1);
  CHECK(m.U->contains(QVec{Rat(0), Rat(1)}));
  REQUIRE(m.after);
  CHECK(m.after->fan().rank() == 1);
  CHECK(m.after->fan().num_rays() == 2);
  CHECK(m.after->fan().is_complete());
  CHECK(m.after->W().dim() == 0);
}

TEST_CASE("flip on a triangulated quadrilateral") {
  const Fan fan = quad_fan();
  const ToricFoliatedPair pair(fan, span_of(3, {{"0", "0", "1"}, {"1", "1", "-1"}}));
  const WallRelation rel = wall_relation(fan, {0, 1});
  CHECK(rel.alpha() == 2);
  const IntVec cls{-1, -1, 1, 1, 0, 0, 0};
  CHECK(rel.curve_class(7) == cls);
  const auto rays = extremal_rays(pair);
  const ExtremalRay& r = ray_with_class(rays, cls);
  CHECK(r.intersection == Rat(-2));

  const MMPStep s = contract_ray(pair, r);
  CHECK(s.kind == StepKind::Flip);
  CHECK(s.alpha == 2);
  CHECK(s.removed_cones == std::vector<ConeRays>{{0, 1, 2}, {0, 1, 3}});
  CHECK(s.added_cones == std::vector<ConeRays>{{0, 2, 3}, {1, 2, 3}});
  REQUIRE(s.after);
  const Fan& plus = s.after->fan();
  CHECK(plus.is_complete());
  CHECK(plus.is_simplicial());
  CHECK(plus.rays() == fan.rays());

  // The flipped curve has the opposite class and positive degree.
  const WallRelation back = wall_relation(plus, {2, 3});
  IntVec neg = cls;
  for (auto& x : neg) x = -x;
  CHECK(back.curve_class(7) == neg);
  CHECK(degree(log_canonical_divisor(*s.after), neg).sign() > 0);
  CHECK(flip_fan(plus, {{2, 3}}) == fan);
}

TEST_CASE("run_mmp traces") {
  const MMPTrace a = run_mmp(ToricFoliatedPair(f1_fan(), span_of(2, {{"0", "1"}})));
  REQUIRE(a.steps.size() == 1);
  CHECK(a.last().kind == StepKind::MoriFiberSpace);
  CHECK(a.last().after->fan().rank() == 1);

  const MMPTrace b = run_mmp(ToricFoliatedPair(f1_fan(), span_of(2, {{"1", "0"}})));
  REQUIRE(b.steps.size() == 2);
  CHECK(b.steps[0].kind == StepKind::Divisorial);
  CHECK(b.steps[0].contracted_ray == IntVec{0, 1});
  CHECK(b.steps[1].kind == StepKind::MoriFiberSpace);
  CHECK(b.steps[1].after->fan().rank() == 0);
  CHECK(b.steps[1].U->dim() == 2);

  const MMPTrace c = run_mmp(ToricFoliatedPair(p3_fan(), GaussianSubspace::zero(3)));
  REQUIRE(c.steps.size() == 1);
  CHECK(c.last().kind == StepKind::Terminate);
  CHECK(c.last().nef_certificate.size() == 6);
  for (const auto& wc : c.last().nef_certificate) CHECK(wc.intersection.is_zero());

  const MMPTrace flip = run_mmp(ToricFoliatedPair(quad_fan(), span_of(3, {{"0", "0", "1"}, {"1", "1", "-1"}})));
  CHECK(std::any_of(flip.steps.begin(), flip.steps.end(), [](const MMPStep& s) { return s.kind == StepKind::Flip; }));

  CHECK_THROWS_AS(run_mmp(ToricFoliatedPair(orthant(2), GaussianSubspace::full(2))), Error);
  CHECK_THROWS_AS(run_mmp(ToricFoliatedPair(f1_fan(), GaussianSubspace::full(2), {Rat(-1), Rat(0), Rat(0), Rat(0)})), Error);
  CHECK_THROWS_AS(run_mmp(ToricFoliatedPair(f1_fan(), span_of(2, {{"1", "0"}})), 1), Error);
}

TEST_CASE("randomized MMP runs") {
  Rng rng = make_rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const Fan fan = random_complete_fan(rng, uniform(rng, 2, 3));
    const GaussianSubspace W = random_W(rng, fan);
    const ToricFoliatedPair pair(fan, W);
    MMPTrace t;
    try {
      t = run_mmp(pair);
    } catch (const Error& e) {
      FAIL("run_mmp threw " << e.what());
    }
    REQUIRE(!t.steps.empty());
    int divisorial = 0;
    for (const auto& s : t.steps) {
      if (s.kind == StepKind::Divisorial) ++divisorial;
      if (s.kind == StepKind::MoriFiberSpace && s.non_dicritical_before) CHECK(s.u_in_w_certified);
      if (s.kind == StepKind::Divisorial || s.kind == StepKind::Flip) {
        if (s.non_dicritical_before) CHECK(s.non_dicritical_after);
        if (s.f_dlt_before) CHECK(s.f_dlt_after);
      }
    }
    CHECK(divisorial <= fan.num_rays());
    CHECK((t.last().kind == StepKind::Terminate || t.last().kind == StepKind::MoriFiberSpace));
  }
}

TEST_CASE("cone certificates") {
  const ToricFoliatedPair w01(f1_fan(), span_of(2, {{"0", "1"}}));
  const auto cs = cone_certificate(w01);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].ray.curve_class == IntVec{0, 1, 0, 1});
  CHECK(cs[0].ell == 3);
  CHECK(cs[0].curve == ConeRays{0});  // Cone((1,0)), tangent since W + C(1,0) = C^2
  CHECK(cs[0].tangent);
  CHECK(is_tangent(f1_fan(), w01.W(), cs[0].curve));
  CHECK(!is_tangent(f1_fan(), w01.W(), {3}));

  const ToricFoliatedPair p2(p2_fan(), GaussianSubspace::full(2));
  const auto ps = cone_certificate(p2);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].tangent);

  CHECK(cone_certificate(ToricFoliatedPair(p3_fan(), GaussianSubspace::zero(3))).empty());
}

TEST_CASE("cone certificates on random pairs") {
  Rng rng = make_rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    const Fan fan = random_complete_fan(rng, uniform(rng, 2, 3));
    const ToricFoliatedPair pair(fan, random_W(rng, fan));
    const auto rays = extremal_rays(pair);
    const auto cs = cone_certificate(pair);
    CHECK(cs.size() == static_cast<std::size_t>(std::count_if(rays.begin(), rays.end(), [](const ExtremalRay& r) { return r.sign() < 0; })));
    for (const auto& c : cs) {
      CHECK(c.tangent);
      CHECK(pair.W().contains(fan.ray(c.ell)));
      CHECK(wall_relation(fan, c.curve).curve_class(fan.num_rays()) == c.ray.curve_class);
    }
  }
}
