#include "dsgeo/geodesic.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace dsgeo {

namespace {

void check_state(const MetricField& g, const GeodesicState& s) {
  if (s.x.size() != g.dim || s.v.size() != g.dim) {
    throw DimensionMismatch("geodesic: state dimension mismatch with metric '" +
                            g.name + "'");
  }
  if (!s.x.allFinite() || !s.v.allFinite() || !std::isfinite(s.tau)) {
    throw OutsideDomain("geodesic: non-finite state");
  }
  if (!g.domain(s.x)) {
    throw OutsideDomain("geodesic: state outside metric domain");
  }
}

// rhs evaluation that reports domain exit instead of throwing, for stage
// points probing past the boundary.
bool try_rhs(const MetricField& g, const Vec& x, const Vec& v, Vec& dx,
             Vec& dv, const StepPolicy& pol) {
  if (!x.allFinite() || !g.domain(x)) return false;
  try {
    const ChristoffelField G = christoffel(g, x, pol);
    dx = v;
    dv = Vec::Zero(g.dim);
    for (int a = 0; a < g.dim; ++a) {
      dv[a] = -v.dot(G.gamma[static_cast<std::size_t>(a)] * v);
    }
    return true;
  } catch (const StepTooLarge&) {
    return false;
  }
}

}  // namespace

void geodesic_rhs(const MetricField& g, const GeodesicState& s, Vec& dx,
                  Vec& dv, const StepPolicy& pol) {
  check_state(g, s);
  if (!try_rhs(g, s.x, s.v, dx, dv, pol)) {
    throw StepTooLarge("geodesic_rhs: stencil leaves the domain at this state");
  }
}

Trajectory integrate(const MetricField& g, const GeodesicState& s0,
                     double tau_end, double dt, const StepPolicy& pol) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw StepUnderflow("integrate: dt must be positive and finite");
  }
  if (!(tau_end > s0.tau)) {
    throw ConfigInvalid("integrate: tau_end must exceed the initial tau");
  }
  check_state(g, s0);

  Trajectory tr;
  tr.dt = dt;
  tr.samples.push_back(s0);
  GeodesicState s = s0;
  Vec k1x, k1v, k2x, k2v, k3x, k3v, k4x, k4v;
  while (s.tau < tau_end - 1e-12) {
    const double h = std::min(dt, tau_end - s.tau);
    if (s.tau + h == s.tau) {
      throw StepUnderflow("integrate: step underflow at tau=" +
                          std::to_string(s.tau));
    }
    const bool ok =
        try_rhs(g, s.x, s.v, k1x, k1v, pol) &&
        try_rhs(g, s.x + 0.5 * h * k1x, s.v + 0.5 * h * k1v, k2x, k2v, pol) &&
        try_rhs(g, s.x + 0.5 * h * k2x, s.v + 0.5 * h * k2v, k3x, k3v, pol) &&
        try_rhs(g, s.x + h * k3x, s.v + h * k3v, k4x, k4v, pol);
    if (!ok) {
      tr.status = TrajectoryStatus::BoundaryHit;
      return tr;
    }
    GeodesicState next;
    next.x = s.x + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    next.v = s.v + (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    next.tau = s.tau + h;
    if (!next.x.allFinite() || !g.domain(next.x)) {
      tr.status = TrajectoryStatus::BoundaryHit;
      return tr;
    }
    tr.samples.push_back(next);
    s = next;
  }
  return tr;
}

double velocity_norm(const MetricField& g, const GeodesicState& s) {
  return s.v.dot(g.components(s.x) * s.v);
}

double norm_drift(const MetricField& g, const Trajectory& tr) {
  if (tr.samples.empty()) return 0.0;
  std::vector<double> q;
  q.reserve(tr.samples.size());
  for (const auto& s : tr.samples) q.push_back(velocity_norm(g, s));
  return series_drift(q);
}

double series_drift(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  const double q0 = values.front();
  const double scale = std::max(1.0, std::abs(q0));
  double worst = 0.0;
  for (double q : values) worst = std::max(worst, std::abs(q - q0) / scale);
  return worst;
}

Vec frame_acceleration(const MetricField& g, int mu, const Vec& p,
                       const StepPolicy& pol) {
  if (mu < 0 || mu >= g.dim) {
    throw DimensionMismatch("frame_acceleration: coordinate index out of range");
  }
  const ChristoffelField G = christoffel(g, p, pol);
  Vec a(g.dim);
  for (int i = 0; i < g.dim; ++i) {
    a[i] = G.gamma[static_cast<std::size_t>(i)](mu, mu);
  }
  return a;
}

void write_trajectory_csv(std::ostream& os, const MetricField& g,
                          const Trajectory& tr,
                          const std::vector<VectorFn>& killing) {
  os << "tau,x0,x1,x2,x3,v0,v1,v2,v3,norm";
  for (int i = 1; i <= 10; ++i) os << ",Q" << i;
  os << "\n";
  char buf[32];
  auto put = [&os, &buf](double v, bool lead_comma) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    if (lead_comma) os << ',';
    os << buf;
  };
  for (const auto& s : tr.samples) {
    put(s.tau, false);
    for (int i = 0; i < 4; ++i) put(i < g.dim ? s.x[i] : 0.0, true);
    for (int i = 0; i < 4; ++i) put(i < g.dim ? s.v[i] : 0.0, true);
    const Mat gp = g.components(s.x);
    put(s.v.dot(gp * s.v), true);
    for (int i = 0; i < 10; ++i) {
      double q = 0.0;
      if (i < static_cast<int>(killing.size())) {
        q = s.v.dot(gp * killing[static_cast<std::size_t>(i)](s.x));
      }
      put(q, true);
    }
    os << "\n";
  }
}

}  // namespace dsgeo
