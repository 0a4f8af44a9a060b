#include "torifol/divisor.hpp"

#include "torifol/errors.hpp"
#include "torifol/foliation.hpp"
#include "torifol/linalg.hpp"

namespace torifol {

SupportFunction support_function(const Fan& fan, const QVec& divisor) {
  if (static_cast<int>(divisor.size()) != fan.num_rays()) {
    throw Error(ErrorKind::DimensionMismatch, "divisor must have one coefficient per ray");
  }
  const auto n = static_cast<std::size_t>(fan.rank());
  SupportFunction sf;
  for (const auto& c : fan.max_cones()) {
    QMat rows;
    QVec rhs;
    for (int r : c) {
      rows.push_back(to_qvec(fan.ray(r)));
      rhs.push_back(-divisor[static_cast<std::size_t>(r)]);
    }
    auto m = solve(rows, rhs, n);
    if (!m) throw Error(ErrorKind::NotQCartier, "divisor is not Q-Cartier on a cone", c);
    sf.m.push_back(std::move(*m));
  }
  // Values on shared rays agree by construction; keep the check cheap and
  // explicit.
  for (std::size_t a = 0; a < fan.max_cones().size(); ++a) {
    for (int r : fan.max_cones()[a]) {
      if (dot(sf.m[a], fan.ray(r)) != -divisor[static_cast<std::size_t>(r)]) {
        throw Error(ErrorKind::TheoremViolation, "support function misses a ray value", fan.max_cones()[a]);
      }
    }
  }
  return sf;
}

Rat evaluate_phi(const SupportFunction& sf, const Fan& fan, const QVec& u) {
  const int a = fan.containing_max_cone(u);
  if (a < 0) throw Error(ErrorKind::OutsideSupport, "point " + to_string(u) + " is outside the support");
  return dot(sf.m[static_cast<std::size_t>(a)], u);
}

Rat evaluate_phi(const SupportFunction& sf, const Fan& fan, const IntVec& u) {
  return evaluate_phi(sf, fan, to_qvec(u));
}

Discrepancy discrepancy_at(const ToricFoliatedPair& pair, const IntVec& u) {
  if (static_cast<int>(u.size()) != pair.fan().rank()) throw Error(ErrorKind::DimensionMismatch, "discrepancy_at: wrong length");
  if (!is_primitive(u)) throw Error(ErrorKind::Validation, "discrepancy_at: " + to_string(u) + " is not primitive");
  Discrepancy d;
  d.iota = ray_iota(pair.W(), u);
  d.a = evaluate_phi(pair.phi(), pair.fan(), u) - Rat(d.iota);
  return d;
}

}  // namespace torifol
