#include "torifol/foliation.hpp"

#include <algorithm>

#include "torifol/errors.hpp"
#include "torifol/linalg.hpp"

namespace torifol {

GaussianSubspace GaussianSubspace::span(int ambient, const GMat& generators) {
  GaussianSubspace w;
  w.n_ = ambient;
  w.basis_ = rref(generators, static_cast<std::size_t>(ambient)).rows;
  w.trace_ = real_trace_subspace(ambient, w.basis_);
  return w;
}

GaussianSubspace GaussianSubspace::full(int ambient) {
  GMat id(static_cast<std::size_t>(ambient), GVec(static_cast<std::size_t>(ambient)));
  for (std::size_t i = 0; i < id.size(); ++i) id[i][i] = GaussRat(1);
  return span(ambient, id);
}

GaussianSubspace GaussianSubspace::kernel_of(int ambient, const GMat& rows) {
  return span(ambient, gauss_kernel(rows, static_cast<std::size_t>(ambient)));
}

bool GaussianSubspace::contains(const GVec& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "W membership: wrong length");
  GMat m = basis_;
  m.push_back(v);
  return gauss_rank(m, static_cast<std::size_t>(n_)) == dim();
}

GMat GaussianSubspace::annihilator() const { return gauss_kernel(basis_, static_cast<std::size_t>(n_)); }

GaussianSubspace GaussianSubspace::intersect(const GaussianSubspace& o) const {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "W intersection: ambient mismatch");
  GMat rows = annihilator();
  for (auto& r : o.annihilator()) rows.push_back(std::move(r));
  return kernel_of(n_, rows);
}

// ------------------------------------------------------------------ pairs

int ray_iota(const GaussianSubspace& W, const IntVec& v) { return W.contains(v) ? 1 : 0; }

QVec canonical_divisor(const Fan& fan, const GaussianSubspace& W) {
  QVec k(static_cast<std::size_t>(fan.num_rays()));
  for (int i = 0; i < fan.num_rays(); ++i) {
    if (W.contains(fan.ray(i))) k[static_cast<std::size_t>(i)] = -1;
  }
  return k;
}

ToricFoliatedPair::ToricFoliatedPair(Fan fan, GaussianSubspace W, QVec delta)
    : fan_(std::move(fan)), W_(std::move(W)), delta_(std::move(delta)) {
  if (fan_.rank() != W_.ambient()) throw Error(ErrorKind::DimensionMismatch, "fan rank and W ambient rank differ");
  if (static_cast<int>(delta_.size()) != fan_.num_rays()) {
    throw Error(ErrorKind::DimensionMismatch, "delta must have one coefficient per ray");
  }
  iota_.reserve(delta_.size());
  for (int i = 0; i < fan_.num_rays(); ++i) iota_.push_back(ray_iota(W_, fan_.ray(i)));
  phi_ = support_function(fan_, log_canonical_divisor(*this));
}

ToricFoliatedPair::ToricFoliatedPair(Fan fan, GaussianSubspace W)
    : ToricFoliatedPair(fan, std::move(W), QVec(static_cast<std::size_t>(fan.num_rays()))) {}

bool ToricFoliatedPair::delta_is_zero() const {
  return std::all_of(delta_.begin(), delta_.end(), [](const Rat& d) { return d.is_zero(); });
}

int ray_iota(const ToricFoliatedPair& pair, int ray) {
  if (ray < 0 || ray >= pair.fan().num_rays()) throw Error(ErrorKind::UnknownRay, "unknown ray " + std::to_string(ray));
  return pair.iota()[static_cast<std::size_t>(ray)];
}

QVec canonical_divisor(const ToricFoliatedPair& pair) {
  QVec k(pair.iota().size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = -pair.iota()[i];
  return k;
}

QVec log_canonical_divisor(const ToricFoliatedPair& pair) {
  QVec k = canonical_divisor(pair);
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += pair.delta()[i];
  return k;
}

// --------------------------------------------------------------- quotients

Quotient project_foliation(const GaussianSubspace& W, const RatSubspace& U) {
  const int n = W.ambient();
  if (U.ambient() != n) throw Error(ErrorKind::DimensionMismatch, "quotient: ambient mismatch");
  ZMat b;
  for (const auto& row : U.basis()) b.push_back(clear_denominators(row));
  Quotient q;
  q.projection = integer_kernel(b, static_cast<std::size_t>(n));
  const int m = static_cast<int>(q.projection.size());
  GMat images;
  for (const auto& w : W.basis()) {
    GVec img(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (q.projection[i][k] != 0) img[i] += GaussRat(Rat(q.projection[i][k])) * w[k];
      }
    }
    images.push_back(std::move(img));
  }
  q.W_bar = GaussianSubspace::span(m, images);
  return q;
}

Quotient quotient_foliation(const GaussianSubspace& W, const RatSubspace& U) {
  for (const auto& u : U.basis()) {
    if (!W.contains(u)) throw Error(ErrorKind::NotContained, "quotient: U_C is not contained in W");
  }
  Quotient q = project_foliation(W, U);
  if (q.W_bar.dim() != W.dim() - U.dim()) {
    throw Error(ErrorKind::TheoremViolation, "quotient: dim W/U differs from dim W - dim U");
  }
  return q;
}

IntVec project_vector(const ZMat& projection, const IntVec& v) {
  ZVec out(projection.size());
  for (std::size_t i = 0; i < projection.size(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) out[i] += projection[i][k] * Int(static_cast<long>(v[k]));
  }
  return to_intvec(out);
}

bool is_algebraically_integrable(const GaussianSubspace& W) { return W.real_trace().dim() == W.dim(); }

}  // namespace torifol
