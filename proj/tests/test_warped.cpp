#include <doctest.h>

#include <cmath>
#include <vector>

#include "dsgeo/warped.hpp"

using namespace dsgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * i / (n - 1));
  }
  return out;
}

}  // namespace

TEST_SUITE("warped") {

TEST_CASE("warp_psi closed-form values") {
  CHECK(warp_psi(-1.0, 2.0) == doctest::Approx(3.626860407847019).epsilon(1e-15));
  CHECK(warp_dpsi(-1.0, 2.0) == doctest::Approx(std::cosh(2.0)).epsilon(1e-15));
  CHECK(warp_psi(0.0, 1.7) == 1.7);
  CHECK(warp_dpsi(0.0, 1.7) == 1.0);
  CHECK(warp_psi(1.0, 0.5 * kPi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(warp_dpsi(1.0, 0.5 * kPi)) < 1e-15);
  // Scaling: psi_k(r) = sin(sqrt(k) r)/sqrt(k).
  CHECK(warp_psi(4.0, 0.3) == doctest::Approx(0.5 * std::sin(0.6)));
  CHECK(warp_psi(-4.0, 0.3) == doctest::Approx(0.5 * std::sinh(0.6)));
}

TEST_CASE("warp_psi is continuous in k at zero") {
  for (double r : {0.5, 1.0, 2.0}) {
    for (double k : {1e-8, -1e-8}) {
      CHECK(std::abs(warp_psi(k, r) - r) < 1e-6);
      CHECK(std::abs(warp_dpsi(k, r) - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("model laplacian of the distance function") {
  CHECK(model_laplacian_r(0.0, 4, 2.0) == doctest::Approx(1.5));
  CHECK(model_laplacian_r(-1.0, 4, 1.2) ==
        doctest::Approx(3.0 / std::tanh(1.2)));
  CHECK(model_laplacian_r(1.0, 3, 0.7) ==
        doctest::Approx(2.0 * std::cos(0.7) / std::sin(0.7)));
  CHECK(warp_hessian_coeff(-1.0, 0.7) ==
        doctest::Approx(std::cosh(0.7) / std::sinh(0.7)));
}

TEST_CASE("warped metric components carry the sine chain") {
  const WarpedMetric w = make_warped(-1.0, 4);
  const Vec p = warped_point(4, 1.3);
  CHECK(p.size() == 4);
  CHECK(p[0] == 1.3);
  const Mat g = w.field.components(p);
  const double s = std::sinh(1.3);
  CHECK(g(0, 0) == doctest::Approx(1.0));
  CHECK(g(1, 1) == doctest::Approx(s * s));
  CHECK(g(2, 2) / g(1, 1) ==
        doctest::Approx(std::sin(p[1]) * std::sin(p[1])));
  CHECK(g(0, 1) == 0.0);
  const WarpedMetric w2 = make_warped(-1.0, 2);
  const Mat g2 = w2.field.components(warped_point(2, 0.9));
  CHECK(g2.rows() == 2);
  CHECK(g2(1, 1) == doctest::Approx(std::sinh(0.9) * std::sinh(0.9)));
}

TEST_CASE("laplacian comparison is an equality on the model space") {
  const WarpedMetric w = make_warped(-1.0, 4);
  const LctResult res = lct_check(-1.0, w, grid(0.5, 3.0, 10));
  CHECK(res.hypothesis_ok);
  CHECK(res.hypothesis_min_eig > -1e-6);
  CHECK(res.all_ok);
  CHECK(res.max_equality_dev < 1e-4);
  CHECK(res.rows.size() == 10);
  for (const auto& row : res.rows) {
    CHECK(row.inequality_ok);
    CHECK(row.laplacian_bound ==
          doctest::Approx(3.0 / std::tanh(row.r)).epsilon(1e-12));
  }
}

TEST_CASE("sphere satisfies the k = -1 comparison strictly") {
  const WarpedMetric sphere = make_warped(1.0, 4);
  const LctResult res = lct_check(-1.0, sphere, grid(0.3, 2.5, 8));
  CHECK(res.hypothesis_ok);
  CHECK(res.all_ok);
  for (const auto& row : res.rows) {
    CHECK(row.laplacian_numeric < row.laplacian_bound);  // strict margin
  }
}

TEST_CASE("hypothesis failure is detected") {
  // Ric = -3 g on the k = -1 model cannot dominate (n-1) * (+1) * g.
  const WarpedMetric w = make_warped(-1.0, 4);
  const LctResult res = lct_check(1.0, w, grid(0.5, 2.0, 4));
  CHECK_FALSE(res.hypothesis_ok);
  CHECK(res.hypothesis_min_eig < -1.0);
}

TEST_CASE("comparison ode witness") {
  CHECK(comparison_ode_witness(-1.0, 4) < 1e-10);
  CHECK(comparison_ode_witness(0.0, 4) < 1e-10);
  CHECK(comparison_ode_witness(1.0, 4) < 1e-10);
  CHECK(comparison_ode_witness(-4.0, 2) < 1e-10);
  CHECK(comparison_ode_witness(-1.0, 5) < 1e-10);
}

TEST_CASE("comparison ode rejects a non-solution") {
  const double res = comparison_ode_residual(
      -1.0, 4, [](double r) { return r; }, [](double) { return 1.0; });
  CHECK(res > 1.0);
}

TEST_CASE("bochner residual stays small at the reference radii") {
  const WarpedMetric w = make_warped(-1.0, 4);
  CHECK(bochner_residual(w, 1.0) < 1e-3);
  CHECK(bochner_residual(w, 2.0) < 1e-3);
  CHECK(bochner_residual(w, 0.25 * kPi) < 1e-3);
  const WarpedMetric s = make_warped(1.0, 4);
  CHECK(bochner_residual(s, 1.0) < 1e-3);
}

TEST_CASE("hessian of the distance function") {
  const WarpedMetric w = make_warped(-1.0, 4);
  CHECK(hessian_identity_dev(w, 1.5) < 1e-4);
  CHECK(hessian_radial_dev(w, 1.5) < 1e-6);
  CHECK(hessian_radial_dev(w, 0.4) < 1e-6);
}

}  // TEST_SUITE
