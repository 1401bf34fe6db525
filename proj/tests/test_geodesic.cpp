#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dsgeo/chart_catalog.hpp"
#include "dsgeo/geodesic.hpp"
#include "dsgeo/isometry.hpp"

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

// A radial timelike geodesic released from rest at rho0 obeys
// rho(tau) = rho0 cosh(tau/R); rest means v = (1/sqrt(1 - rho0^2), 0, 0, 0)
// so that g(v, v) = 1.
GeodesicState radial_rest_state(double rho0) {
  GeodesicState s;
  s.x = vec4(0.0, rho0, 0.5 * kPi, 0.0);
  s.v = vec4(1.0 / std::sqrt(1.0 - rho0 * rho0), 0.0, 0.0, 0.0);
  return s;
}

}  // namespace

TEST_SUITE("geodesic") {

TEST_CASE("geodesic_rhs at a static-chart point") {
  const MetricField g = static_model_field(1.0);
  GeodesicState s;
  s.x = vec4(0.0, 0.5, 0.5 * kPi, 0.0);
  s.v = vec4(1.0, 0.0, 0.0, 0.0);
  Vec dx, dv;
  geodesic_rhs(g, s, dx, dv, rich());
  CHECK((dx - s.v).cwiseAbs().maxCoeff() == 0.0);
  // dv^rho = -Gamma^rho_tt (v^t)^2 = rho (1 - rho^2)/R^2 = +0.375.
  CHECK(std::abs(dv[1] - 0.375) < 1e-8);
  CHECK(std::abs(dv[0]) < 1e-9);
  CHECK(std::abs(dv[2]) < 1e-9);
  CHECK(std::abs(dv[3]) < 1e-9);
}

TEST_CASE("radial geodesic matches the cosh solution") {
  const MetricField g = static_model_field(1.0);
  const Trajectory tr = integrate(g, radial_rest_state(0.3), 1.0, 1e-3, rich());
  REQUIRE(tr.status == TrajectoryStatus::Completed);
  const GeodesicState& last = tr.samples.back();
  CHECK(last.tau == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(last.x[1] - 0.46292419044457314) < 1e-8);  // 0.3 cosh(1)
  CHECK(std::abs(last.x[2] - 0.5 * kPi) < 1e-12);
  CHECK(norm_drift(g, tr) < 1e-8);
}

TEST_CASE("rk4 exhibits fourth-order convergence") {
  const MetricField g = static_model_field(1.0);
  const double exact = 0.46292419044457314;
  const GeodesicState s0 = radial_rest_state(0.3);
  const double e1 =
      std::abs(integrate(g, s0, 1.0, 0.05, rich()).samples.back().x[1] - exact);
  const double e2 =
      std::abs(integrate(g, s0, 1.0, 0.025, rich()).samples.back().x[1] - exact);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("trajectory terminates cleanly at the domain boundary") {
  const Chart chart = make_chart("static-47-corrected", 1.0, 0.1);
  const MetricField g = metric_from_chart(chart, rich());
  const Trajectory tr = integrate(g, radial_rest_state(0.3), 10.0, 1e-3, rich());
  CHECK(tr.status == TrajectoryStatus::BoundaryHit);
  CHECK(tr.samples.back().x[1] <= 0.9);
  // cosh(tau) reaches 3 at tau = 1.7627; the trajectory stops right there.
  CHECK(tr.samples.back().tau > 1.5);
  CHECK(tr.samples.back().tau < 2.0);

  const Trajectory done = integrate(g, radial_rest_state(0.3), 0.5, 1e-3, rich());
  CHECK(done.status == TrajectoryStatus::Completed);
  CHECK(done.samples.size() == 501);
}

TEST_CASE("charges are conserved along geodesics") {
  const double R = 1.0;
  const Chart chart = make_chart("static-47-corrected", R, 0.1);
  const MetricField g = metric_from_chart(chart, rich());
  const auto gens = ambient_generators(Quadric(Signature::minus_first(5), R));
  const VectorFn time_field = pulled_back_field(chart, gens[3], rich());
  GeodesicState s0;
  s0.x = vec4(0.0, 0.4, 1.1, 0.7);
  s0.v = vec4(1.0, 0.05, 0.1, -0.2);
  const Trajectory tr = integrate(g, s0, 1.0, 1e-3, rich());
  std::vector<double> q;
  q.reserve(tr.samples.size());
  for (const auto& s : tr.samples) {
    q.push_back(conserved_charge(g, time_field, s));
  }
  CHECK(series_drift(q) < 1e-8);
  CHECK(norm_drift(g, tr) < 1e-8);
}

TEST_CASE("drift statistics") {
  CHECK(series_drift({1.0, 1.0, 1.0 + 2e-9}) == doctest::Approx(2e-9));
  CHECK(series_drift({2.0, 2.5}) == doctest::Approx(0.25));
  CHECK(series_drift({0.5, 0.4}) == doctest::Approx(0.1));  // max(1, |q0|)
  const MetricField g = static_model_field(1.0);
  GeodesicState s;
  s.x = vec4(0.0, 0.5, 0.5 * kPi, 0.0);
  s.v = vec4(1.0, 0.0, 0.0, 0.0);
  CHECK(velocity_norm(g, s) == doctest::Approx(0.75));
}

TEST_CASE("frame accelerations match the closed forms") {
  const MetricField g = static_model_field(1.0);
  const Vec p = vec4(0.0, 0.5, kPi / 3.0, 0.0);
  const Vec at = frame_acceleration(g, 0, p, rich());
  CHECK(std::abs(at[1] + 0.375) < 1e-8);  // -rho u2 / R^2
  CHECK(std::abs(at[0]) < 1e-9);
  const Vec ar = frame_acceleration(g, 1, p, rich());
  CHECK(std::abs(ar[1] - 2.0 / 3.0) < 1e-8);  // +rho / (R^2 u2)
  const Vec ath = frame_acceleration(g, 2, p, rich());
  CHECK(std::abs(ath[1] + 0.375) < 1e-8);  // -rho u2
}

TEST_CASE("integrator rejects a vanishing step") {
  const MetricField g = static_model_field(1.0);
  CHECK_THROWS_AS(integrate(g, radial_rest_state(0.3), 1.0, 0.0),
                  StepUnderflow);
  CHECK_THROWS_AS(integrate(g, radial_rest_state(0.3), 1.0, -1e-3),
                  StepUnderflow);
}

TEST_CASE("trajectory csv format and determinism") {
  const MetricField g = static_model_field(1.0);
  const Trajectory tr = integrate(g, radial_rest_state(0.3), 0.01, 1e-3, rich());
  const VectorFn dt_field = [](const Vec&) {
    Vec v(4);
    v << 1, 0, 0, 0;
    return v;
  };
  std::ostringstream a, b;
  write_trajectory_csv(a, g, tr, {dt_field});
  write_trajectory_csv(b, g, tr, {dt_field});
  CHECK(a.str() == b.str());
  std::istringstream lines(a.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "tau,x0,x1,x2,x3,v0,v1,v2,v3,norm,Q1,Q2,Q3,Q4,Q5,Q6,Q7,Q8,Q9,Q10");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == static_cast<int>(tr.samples.size()));
  // Charges beyond the supplied Killing fields are written as zero.
  CHECK(a.str().find(",0,0,0,0,0,0,0,0,0\n") != std::string::npos);
}

}  // TEST_SUITE
