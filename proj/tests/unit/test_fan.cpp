#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "random.hpp"
#include "torifol/errors.hpp"
#include "torifol/lattice.hpp"
#include "torifol/linalg.hpp"

using namespace torifol;
using namespace torifol::testing;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Validation;
}

std::set<std::set<IntVec>> geometric(const Fan& f) {
  std::set<std::set<IntVec>> out;
  for (const auto& c : f.max_cones()) {
    std::set<IntVec> s;
    for (int r : c) s.insert(f.ray(r));
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("standard fans validate with the right flags") {
  const Fan p2 = p2_fan();
  CHECK(p2.is_complete());
  CHECK(p2.is_smooth());
  CHECK(p2.is_simplicial());
  const Fan f1 = f1_fan();
  CHECK(f1.is_complete());
  CHECK(f1.is_smooth());
  const Fan sq = square_cone();
  CHECK_FALSE(sq.is_simplicial());
  CHECK_FALSE(sq.is_complete());
  const Fan a1 = Fan::make(2, {{1, 0}, {1, 2}}, {{0, 1}});
  CHECK(a1.is_simplicial());
  CHECK_FALSE(a1.is_smooth());
  CHECK(a1.multiplicity({0, 1}) == 2);
}

TEST_CASE("fan axioms are enforced") {
  CHECK(kind_of([] { Fan::make(2, {{1, 0}, {0, 1}, {1, 2}, {1, -1}}, {{0, 1}, {2, 3}}); }) == ErrorKind::Overlap);
  CHECK(kind_of([] { Fan::make(2, {{1, 0}, {-1, 0}}, {{0, 1}}); }) == ErrorKind::NotStronglyConvex);
  CHECK(kind_of([] { Fan::make(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}}); }) == ErrorKind::RedundantGenerator);
  CHECK(kind_of([] { Fan::make(2, {{2, 4}}, {{0}}); }) == ErrorKind::Validation);
  CHECK(kind_of([] { Fan::make(2, {{0, 0}}, {{0}}); }) == ErrorKind::Validation);
  CHECK(kind_of([] { Fan::make(2, {{1, 0}, {1, 0}}, {{0}, {1}}); }) == ErrorKind::Validation);
  CHECK(kind_of([] { Fan::make(2, {{1, 0}}, {{0, 3}}); }) == ErrorKind::UnknownRay);
  // Touching along a common face is fine, a shared ray that is not a face is not.
  CHECK_NOTHROW(Fan::make(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}}));
}

TEST_CASE("faces and walls") {
  const FaceData p2 = faces_and_walls(p2_fan());
  CHECK(p2.walls.size() == 3);
  for (const auto& w : p2.walls) CHECK(w.wall.size() == 1);
  CHECK(faces_and_walls(f1_fan()).walls.size() == 4);
  CHECK(kind_of([] { faces_and_walls(orthant(2)); }) == ErrorKind::DanglingWall);
}

TEST_CASE("wall count matches m*n = 2*walls on complete simplicial fans") {
  Rng rng = make_rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Fan fan = random_complete_fan(rng, uniform(rng, 2, 3));
    REQUIRE(fan.is_complete());
    const FaceData fd = faces_and_walls(fan);
    CHECK(fan.max_cones().size() * static_cast<std::size_t>(fan.rank()) == 2 * fd.walls.size());
    for (const auto& w : fd.walls) CHECK(w.cone_a < w.cone_b);
  }
}

TEST_CASE("star subdivision examples") {
  const Fan q = star_subdivide(orthant(2), {1, 1});
  CHECK(geometric(q) == std::set<std::set<IntVec>>{{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}});
  const Fan o3 = star_subdivide(orthant(3), {1, 1, 1});
  CHECK(o3.max_cones().size() == 3);
  const Fan p2b = star_subdivide(p2_fan(), {1, 1});
  CHECK(p2b.max_cones().size() == 4);
  CHECK(p2b.is_complete());
  CHECK(p2b.rays().back() == IntVec{1, 1});
  CHECK(kind_of([] { star_subdivide(orthant(2), {-1, 0}); }) == ErrorKind::OutsideSupport);
  // At an existing ray of a simplicial fan nothing changes.
  CHECK(star_subdivide(p2_fan(), {1, 0}) == p2_fan());
}

TEST_CASE("star subdivisions refine, keep support and never raise multiplicity") {
  Rng rng = make_rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const Fan fan = random_complete_fan(rng, uniform(rng, 2, 3));
    const IntVec u = random_primitive(rng, fan.rank(), 3);
    if (fan.find_ray(u) >= 0) continue;
    const Fan sub = star_subdivide(fan, u);
    CHECK(sub.is_complete());
    CHECK(sub.num_rays() == fan.num_rays() + 1);
    for (const auto& c : sub.max_cones()) {
      // Each new cone sits inside one old cone.
      QVec centre(static_cast<std::size_t>(fan.rank()));
      for (int r : c) {
        for (std::size_t t = 0; t < centre.size(); ++t) centre[t] += Rat(static_cast<long>(sub.ray(r)[t]));
      }
      const auto old = locate_cone(fan, centre);
      REQUIRE(old);
      CHECK(fan.has_cone(*old));
    }
  }
}

TEST_CASE("barycentric subdivision never raises multiplicity") {
  Rng rng = make_rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform(rng, 2, 3);
    const Fan fan = random_simplicial_cone(rng, n, n, 4);
    const ConeRays& c = fan.max_cones().front();
    IntVec sum(static_cast<std::size_t>(fan.rank()), 0);
    for (int r : c) {
      for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += fan.ray(r)[t];
    }
    const Int before = fan.multiplicity(c);
    const Fan sub = star_subdivide(fan, primitive_vector(sum));
    for (const auto& d : sub.max_cones()) CHECK(sub.multiplicity(d) <= before);
  }
}

TEST_CASE("locate_cone") {
  const Fan p2 = p2_fan();
  CHECK(locate_cone(p2, QVec{Rat(2), Rat(1)}) == ConeRays{0, 1});
  CHECK(locate_cone(p2, QVec{Rat(0), Rat(0)}) == ConeRays{});
  CHECK(locate_cone(p2, QVec{Rat(0), Rat(3)}) == ConeRays{1});
  CHECK_FALSE(locate_cone(Fan::make(2, {{1, 0}}, {{0}}), QVec{Rat(0), Rat(1)}));
}

TEST_CASE("locate_cone partitions random points") {
  Rng rng = make_rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Fan fan = random_complete_fan(rng, uniform(rng, 2, 3));
    for (int s = 0; s < 10; ++s) {
      QVec v;
      for (int t = 0; t < fan.rank(); ++t) v.emplace_back(uniform(rng, -5, 5), uniform(rng, 1, 3));
      int claims = 0;
      for (const auto& c : fan.cones()) {
        if (c.empty()) {
          claims += std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); }) ? 1 : 0;
          continue;
        }
        const ConeH h = cone_hrep(fan.generators(c), fan.rank());
        claims += h.in_relint(v) ? 1 : 0;
      }
      CHECK(claims == 1);
      const auto located = locate_cone(fan, v);
      REQUIRE(located);
      CHECK(fan.has_cone(*located));
    }
  }
}
