#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dsgeo/chart.hpp"
#include "dsgeo/metric.hpp"

namespace dsgeo {

// Registered chart names:
//   "schrodinger-40"      reduced 2d model, nowhere-singular global map
//   "schrodinger-43"      reduced 2d model, band chart |chi| < pi/2
//   "static-47-printed"   static 4d chart exactly as printed (fails the
//                         constraint; kept for comparison, never asserted)
//   "static-47-corrected" static 4d chart with the hyperbolic functions
//                         exchanged between xi_0 and xi_4 (canonical)
//   "sphere-polar"        round 4d model in polar coordinates
//   "hyperboloid-polar"   Lorentzian 4d model in spatial-radius coordinates
//   "beltrami"            projective coordinates of the 4d hyperboloid
std::vector<std::string> chart_names();

// Builds a chart for radius R. delta scales the domain margins: rho-type
// coordinates keep a delta*R margin from their critical values, angles a
// delta margin from the axis.
Chart make_chart(const std::string& name, double R, double delta = 1e-6);

// sigma^2 = -x0^2 + x1^2 + x2^2 + x3^2 (indefinite).
double minkowski_sigma2(const Vec& x);

// x^mu = -R xi^mu / xi^4. Throws EquatorialSingularity when |xi^4| <= eps.
Vec beltrami_project(const Vec& xi, double R, double eps = 1e-12);

// xi^mu = x^mu / sqrt(1 + sigma^2/R^2), xi^4 = -R / sqrt(1 + sigma^2/R^2).
// Throws ProjectiveCone when 1 + sigma^2/R^2 <= eps.
Vec beltrami_lift(const Vec& x, double R, double eps = 1e-12);

// diag(-1, a^2/(1 - k r^2), a^2 r^2, a^2 r^2 sin^2 theta) at p = (t, r,
// theta, phi).
struct ExpansionProfile {
  std::function<double(double)> a;  // scale factor a(t) > 0
  double k = 0.0;                   // spatial curvature
};
Mat robertson_walker_metric(const ExpansionProfile& prof, const Vec& p);

// Closed-form static model metric
// diag(1 - rho^2/R^2, -(1 - rho^2/R^2)^{-1}, -rho^2, -rho^2 sin^2 theta)
// at p = (t, rho, theta, phi).
Mat static_model_metric(double R, const Vec& p);
// Same, packaged with domain and sampler (delta as in make_chart).
MetricField static_model_field(double R, double delta = 1e-6);

// Change-of-variables check for the polar-angle/radius relation on the round
// model: integrates d zeta / d r = sin(zeta) / r with RK4 from r0 (seeded on
// the closed form) to r1 and returns max |cos zeta_num - (1 - k r^2)/(1 + k
// r^2)| over the nodes. Requires k > 0 and 0 < r0 < r1.
double polar_angle_ode_max_dev(double k, double r0, double r1, int steps);

// Change-of-variables check for the band chart: substitutes eta = R t,
// rho = R sin chi into the metric R^2 cos^2 chi dt^2 - R^2 dchi^2 quoted with
// that chart and returns the max deviation from the static reduced form
// (1 - rho^2/R^2) deta^2 - (1 - rho^2/R^2)^{-1} drho^2 over random samples.
double substitution_44_max_dev(double R, int samples, SampleRng& rng);

// A printed closed-form expression kept under audit for a chart: it is
// compared against the Jacobian pullback and reported, never used as an
// oracle.
struct MetricClaim {
  std::string id;
  std::string anchor;
  std::function<Mat(const Vec&)> form;
};
std::vector<MetricClaim> printed_metric_claims(const std::string& chart_name,
                                               double R);

// The printed projective-coordinate Jacobian (second term with a plus sign);
// compared against finite differences and reported.
Mat beltrami_printed_jacobian(const Vec& x, double R);

}  // namespace dsgeo
