#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dsgeo/errors.hpp"

namespace dsgeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Sign sequence of a pseudo-Euclidean ambient space, e.g. (-,+,+,+,+).
// Entries are +1 or -1; at least one +1; length >= 2.
class Signature {
public:
  explicit Signature(std::vector<int> signs);

  static Signature euclidean(int n);
  // One -1 in slot 0, +1 elsewhere: the quadric-constraint convention used by
  // the embedded model spacetimes here (xi_0 carries the minus sign).
  static Signature minus_first(int n);

  Signature negated() const;

  int dim() const { return static_cast<int>(signs_.size()); }
  int sign(int i) const { return signs_.at(static_cast<std::size_t>(i)); }
  const Vec& diag() const { return diag_; }
  Mat matrix() const { return diag_.asDiagonal(); }
  int positives() const;
  int negatives() const;

  bool operator==(const Signature& o) const { return signs_ == o.signs_; }
  bool operator!=(const Signature& o) const { return !(*this == o); }

private:
  std::vector<int> signs_;
  Vec diag_;
};

// eta_AB a^A b^B with eta = diag(signs). Symmetric and bilinear by
// construction; throws DimensionMismatch if sizes disagree.
double flat_inner(const Signature& sig, const Vec& a, const Vec& b);

// Level set flat_inner(p, p) = R^2 inside the ambient space.
struct Quadric {
  Signature sig;
  double radius;

  Quadric(Signature s, double r);
};

// flat_inner(p, p) - R^2; zero iff p lies on the quadric.
double constraint_residual(const Quadric& q, const Vec& p);

}  // namespace dsgeo
