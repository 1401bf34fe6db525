#pragma once

#include <iosfwd>
#include <vector>

#include "dsgeo/metric.hpp"
#include "dsgeo/tensor.hpp"

namespace dsgeo {

struct GeodesicState {
  Vec x;
  Vec v;           // d/dtau of x
  double tau = 0.0;
};

enum class TrajectoryStatus { Completed, BoundaryHit };

struct Trajectory {
  std::vector<GeodesicState> samples;  // tau strictly increasing
  double dt = 0.0;
  TrajectoryStatus status = TrajectoryStatus::Completed;
};

// First-order reduction of the geodesic equation:
//   dx^a = v^a,  dv^a = -Gamma^a_bc v^b v^c.
void geodesic_rhs(const MetricField& g, const GeodesicState& s, Vec& dx,
                  Vec& dv, const StepPolicy& pol = {});

// Classical fixed-step RK4. Velocities are never re-normalized; norm drift is
// a measurement. If any stage point leaves the metric domain the trajectory
// terminates cleanly at the last valid state with BoundaryHit status.
Trajectory integrate(const MetricField& g, const GeodesicState& s0,
                     double tau_end, double dt, const StepPolicy& pol = {});

// g(v, v) at one sample.
double velocity_norm(const MetricField& g, const GeodesicState& s);

// max_t |q(t) - q(0)| / max(1, |q(0)|) over the trajectory for q = g(v, v).
double norm_drift(const MetricField& g, const Trajectory& tr);

// Same relative-drift statistic for a precomputed scalar series.
double series_drift(const std::vector<double>& values);

// a = D_{d_mu} d_mu; components a^a = Gamma^a_{mu mu}.
Vec frame_acceleration(const MetricField& g, int mu, const Vec& p,
                       const StepPolicy& pol = {});

// CSV with header (tau, x0..x3, v0..v3, norm, Q1..Q10). Coordinates beyond
// the metric dimension and charges beyond the supplied Killing fields are
// written as 0. Full double precision.
void write_trajectory_csv(std::ostream& os, const MetricField& g,
                          const Trajectory& tr,
                          const std::vector<VectorFn>& killing);

}  // namespace dsgeo
