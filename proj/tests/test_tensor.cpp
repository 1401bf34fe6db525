#include <doctest.h>

#include <cmath>

#include "dsgeo/chart_catalog.hpp"
#include "dsgeo/tensor.hpp"

using namespace dsgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec vec4(double a, double b, double c, double d) {
  Vec v(4);
  v << a, b, c, d;
  return v;
}

StepPolicy rich() {
  StepPolicy pol;
  pol.richardson = true;
  return pol;
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("flat metric has vanishing christoffel and curvature") {
  const MetricField f = flat_metric(3);
  Vec p(3);
  p << 0.3, -0.7, 1.1;
  const ChristoffelField cf = christoffel(f, p);
  for (const Mat& g : cf.gamma) CHECK(g.cwiseAbs().maxCoeff() == 0.0);
  const CurvatureReport rep = riemann_curvature(f, p);
  double maxr = 0.0;
  for (double v : rep.riemann) maxr = std::max(maxr, std::abs(v));
  CHECK(maxr < 1e-12);
  CHECK(rep.ricci.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("static model christoffel closed-form values") {
  // At rho = 0.5, R = 1 (u2 = 0.75): the full nonzero list.
  const MetricField f = static_model_field(1.0);
  const Vec p = vec4(0.1, 0.5, kPi / 3.0, 0.2);
  const ChristoffelField cf = christoffel(f, p, rich());
  const double u2 = 0.75;
  const double st = std::sin(kPi / 3.0), ct = std::cos(kPi / 3.0);
  CHECK(std::abs(cf.gamma[1](0, 0) - (-0.5 * u2)) < 1e-8);      // -rho u2 / R^2
  CHECK(std::abs(cf.gamma[0](0, 1) - (-0.5 / u2)) < 1e-8);      // -rho / (R^2 u2)
  CHECK(std::abs(cf.gamma[0](1, 0) - (-0.5 / u2)) < 1e-8);
  CHECK(std::abs(cf.gamma[1](1, 1) - (0.5 / u2)) < 1e-8);
  CHECK(std::abs(cf.gamma[1](2, 2) - (-0.5 * u2)) < 1e-8);      // -rho u2
  CHECK(std::abs(cf.gamma[1](3, 3) - (-0.5 * u2 * st * st)) < 1e-8);
  CHECK(std::abs(cf.gamma[2](1, 2) - 2.0) < 1e-8);              // 1 / rho
  CHECK(std::abs(cf.gamma[3](1, 3) - 2.0) < 1e-8);
  CHECK(std::abs(cf.gamma[2](3, 3) - (-st * ct)) < 1e-8);
  CHECK(std::abs(cf.gamma[3](2, 3) - (ct / st)) < 1e-8);
  // A few symbols outside the list stay zero.
  CHECK(std::abs(cf.gamma[0](0, 0)) < 1e-9);
  CHECK(std::abs(cf.gamma[0](2, 2)) < 1e-9);
  CHECK(std::abs(cf.gamma[2](0, 0)) < 1e-9);
  CHECK(std::abs(cf.gamma[3](0, 3)) < 1e-9);
}

TEST_CASE("christoffel symmetry in the lower pair") {
  const MetricField f = static_model_field(1.0);
  const Vec p = vec4(0.3, 0.4, 1.0, 0.5);
  const ChristoffelField cf = christoffel(f, p);
  for (const Mat& g : cf.gamma) {
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("sectional curvature sign convention") {
  // Round sphere of radius 2: K = +1/4 in the convention used here.
  const MetricField sphere =
      metric_from_chart(make_chart("sphere-polar", 2.0), rich());
  const Vec p = vec4(0.7, 1.1, 0.9, 0.5);
  const Vec u = vec4(1, 0, 0, 0), v = vec4(0, 1, 0, 0);
  CHECK(std::abs(sectional_curvature(sphere, p, u, v, rich()) - 0.25) < 1e-5);
  // Mostly-minus static model flips the lowered tensor: K = -1/R^2.
  const MetricField stat = static_model_field(1.0);
  const Vec q = vec4(0.1, 0.5, kPi / 3.0, 0.2);
  CHECK(std::abs(sectional_curvature(stat, q, u, v, rich()) + 1.0) < 1e-5);
}

TEST_CASE("degenerate planes are rejected") {
  const MetricField stat = static_model_field(1.0);
  const Vec q = vec4(0.1, 0.5, kPi / 3.0, 0.2);
  const Vec u = vec4(0.3, -0.2, 0.5, 0.1);
  CHECK_THROWS_AS(sectional_curvature(stat, q, u, u, rich()), DegeneratePlane);
  CHECK_THROWS_AS(sectional_curvature(stat, q, u, 2.0 * u, rich()),
                  DegeneratePlane);
}

TEST_CASE("curvature identities on the static model") {
  const MetricField f = static_model_field(1.0);
  const Vec p = vec4(0.2, 0.45, 1.2, 0.8);
  const CurvatureReport rep = riemann_curvature(f, p, rich());
  CHECK(first_bianchi_residual(rep) < 1e-10);
  CHECK(metric_compatibility_residual(f, p, rich()) < 1e-10);
  // Antisymmetry of the lowered tensor in both pairs.
  double dev = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          dev = std::max(dev, std::abs(rep.lowered(a, b, c, d) +
                                       rep.lowered(b, a, c, d)));
          dev = std::max(dev, std::abs(rep.lowered(a, b, c, d) +
                                       rep.lowered(a, b, d, c)));
        }
  CHECK(dev < 1e-9);
}

TEST_CASE("hessian and laplacian on flat space") {
  const MetricField f = flat_metric(2);
  Vec p(2);
  p << 0.4, -0.6;
  const ScalarFn fn = [](const Vec& x) {
    return x[0] * x[0] + 2.0 * x[1] * x[1];
  };
  const Mat H = hessian_scalar(f, fn, p);
  CHECK(std::abs(H(0, 0) - 2.0) < 1e-6);
  CHECK(std::abs(H(1, 1) - 4.0) < 1e-6);
  CHECK(std::abs(H(0, 1)) < 1e-6);
  CHECK(std::abs(laplacian_scalar(f, fn, p) - 6.0) < 1e-6);
}

TEST_CASE("covariant derivative reduces to the directional derivative") {
  const MetricField f = flat_metric(2);
  Vec p(2);
  p << 0.3, 0.7;
  const VectorFn X = [](const Vec& x) {
    Vec v(2);
    v << x[1], x[0];
    return v;
  };
  const VectorFn Y = [](const Vec& x) {
    Vec v(2);
    v << x[0] * x[0], 1.0;
    return v;
  };
  const Vec d = covariant_derivative(f, X, Y, p);
  CHECK(std::abs(d[0] - 2.0 * 0.3 * 0.7) < 1e-8);
  CHECK(std::abs(d[1]) < 1e-8);
}

TEST_CASE("coordinate_field basis vectors") {
  const Vec e = coordinate_field(4, 2)(vec4(1, 2, 3, 4));
  CHECK(e[2] == 1.0);
  CHECK(e[0] == 0.0);
  CHECK(e.sum() == 1.0);
}

TEST_CASE("invert_metric conditioning and failure") {
  Mat id = Mat::Identity(3, 3);
  const MetricInverse mi = invert_metric(id);
  CHECK((mi.inv - id).cwiseAbs().maxCoeff() == 0.0);
  CHECK(mi.condition >= 1.0);
  Mat sing = Mat::Zero(2, 2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(invert_metric(sing), DegenerateMetric);
}

TEST_CASE("validate_metric enforces eigenvalue-sign expectations") {
  MetricField f = flat_metric(2);
  f.expected_positive = 1;
  f.expected_negative = 1;
  Vec p(2);
  p.setZero();
  CHECK_THROWS_AS(validate_metric(f, p), GeometryError);
  f.expected_positive = 2;
  f.expected_negative = 0;
  CHECK_NOTHROW(validate_metric(f, p));
}

}  // TEST_SUITE
