#include "fixtures.hpp"

#include <algorithm>

#include "torifol/divisor.hpp"
#include "torifol/lattice.hpp"
#include "torifol/linalg.hpp"

namespace torifol::testing {

Fan p2_fan() { return Fan::make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }

Fan p3_fan() {
  return Fan::make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Fan f1_fan() { return Fan::make(2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

Fan orthant(int n) {
  std::vector<IntVec> rays;
  ConeRays c;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    rays.push_back(e);
    c.push_back(i);
  }
  return Fan::make(n, rays, {c});
}

Fan square_cone() { return Fan::make(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 1, 2, 3}}); }

namespace {

GMat parse_rows(const std::vector<std::vector<std::string>>& rows) {
  GMat m;
  for (const auto& r : rows) {
    GVec v;
    for (const auto& s : r) v.push_back(GaussRat::parse(s));
    m.push_back(std::move(v));
  }
  return m;
}

// Exact coefficients of u in the generators, if u is in their span.
std::optional<QVec> coefficients(const std::vector<IntVec>& gens, const IntVec& u) {
  QMat g;
  for (const auto& v : gens) g.push_back(to_qvec(v));
  return solve(transpose(g, u.size()), to_qvec(u), gens.size());
}

bool next_point(IntVec& x, int bound) {
  for (std::size_t k = x.size(); k > 0; --k) {
    if (x[k - 1] < bound) {
      ++x[k - 1];
      return true;
    }
    x[k - 1] = -bound;
  }
  return false;
}

}  // namespace

GaussianSubspace span_of(int n, const std::vector<std::vector<std::string>>& rows) {
  return GaussianSubspace::span(n, parse_rows(rows));
}

GaussianSubspace kernel_of(int n, const std::vector<std::vector<std::string>>& rows) {
  return GaussianSubspace::kernel_of(n, parse_rows(rows));
}

std::optional<IntVec> brute_negative_discrepancy(const ToricFoliatedPair& pair, int bound) {
  const Fan& fan = pair.fan();
  const auto n = static_cast<std::size_t>(fan.rank());
  // Integer data for fast prefiltering: V's equations and, per maximal cone,
  // the coefficient solve happens only for points of V.
  std::vector<IntVec> eqs;
  for (const auto& e : pair.W().real_trace().equations()) eqs.push_back(to_intvec(clear_denominators(e)));
  IntVec x(n, -bound);
  do {
    if (std::all_of(x.begin(), x.end(), [](std::int64_t t) { return t == 0; })) continue;
    bool in_v = true;
    for (const auto& e : eqs) {
      std::int64_t s = 0;
      for (std::size_t t = 0; t < n; ++t) s += e[t] * x[t];
      if (s != 0) in_v = false;
    }
    // Points outside W have a = φ(u) >= 0 whenever φ >= 0; still check the
    // ones in some cone, but only W-points can be negative for Δ = 0.
    if (!in_v && pair.delta_is_zero()) continue;
    if (!is_primitive(x)) continue;
    bool inside = false;
    for (const auto& c : fan.max_cones()) {
      if (auto co = coefficients(fan.generators(c), x)) {
        if (std::all_of(co->begin(), co->end(), [](const Rat& r) { return r.sign() >= 0; })) inside = true;
      }
      if (inside) break;
    }
    if (!inside) continue;
    if (discrepancy_at(pair, x).a.sign() < 0) return x;
  } while (next_point(x, bound));
  return std::nullopt;
}

std::optional<IntVec> brute_relint_point(const std::vector<IntVec>& gens, const RatSubspace& V, int bound) {
  if (gens.empty()) return std::nullopt;
  const std::size_t n = gens.front().size();
  IntVec x(n, -bound);
  do {
    if (!V.contains(to_qvec(x))) continue;
    auto co = coefficients(gens, x);
    if (co && std::all_of(co->begin(), co->end(), [](const Rat& r) { return r.sign() > 0; })) return x;
  } while (next_point(x, bound));
  return std::nullopt;
}

}  // namespace torifol::testing
