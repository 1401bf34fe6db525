#include "dsgeo/ambient.hpp"

#include <cmath>

namespace dsgeo {

Signature::Signature(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.size() < 2) {
    throw GeometryError("signature needs at least two entries");
  }
  bool has_plus = false;
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw GeometryError("signature entries must be +1 or -1");
    }
    has_plus = has_plus || s == 1;
  }
  if (!has_plus) {
    throw GeometryError("signature needs at least one +1 entry");
  }
  diag_.resize(static_cast<Eigen::Index>(signs_.size()));
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    diag_[static_cast<Eigen::Index>(i)] = static_cast<double>(signs_[i]);
  }
}

Signature Signature::euclidean(int n) {
  return Signature(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Signature Signature::minus_first(int n) {
  std::vector<int> s(static_cast<std::size_t>(n), 1);
  s[0] = -1;
  return Signature(std::move(s));
}

Signature Signature::negated() const {
  std::vector<int> s(signs_);
  for (int& e : s) e = -e;
  return Signature(std::move(s));
}

int Signature::positives() const {
  int c = 0;
  for (int s : signs_) c += s == 1;
  return c;
}

int Signature::negatives() const { return dim() - positives(); }

double flat_inner(const Signature& sig, const Vec& a, const Vec& b) {
  if (a.size() != sig.dim() || b.size() != sig.dim()) {
    throw DimensionMismatch("flat_inner: vector size does not match signature");
  }
  return (a.array() * sig.diag().array() * b.array()).sum();
}

Quadric::Quadric(Signature s, double r) : sig(std::move(s)), radius(r) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw GeometryError("quadric radius must be positive and finite");
  }
}

double constraint_residual(const Quadric& q, const Vec& p) {
  return flat_inner(q.sig, p, p) - q.radius * q.radius;
}

}  // namespace dsgeo
