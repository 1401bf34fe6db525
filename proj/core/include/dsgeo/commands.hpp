#pragma once

#include "dsgeo/report.hpp"
#include "dsgeo/runconfig.hpp"

namespace dsgeo {

// Each command validates the config, seeds one SampleRng, runs its checks in
// report order (sampling order is the check order) and returns the report.
// "reported" records audit printed formulas and never affect the exit code.

Report run_verify_christoffel(const RunConfig& cfg);
Report run_verify_killing(const RunConfig& cfg);
Report run_curvature(const RunConfig& cfg);
Report run_lct(const RunConfig& cfg);
Report run_beltrami(const RunConfig& cfg);
// Also writes the trajectory CSV when cfg.traj is set.
Report run_geodesic(const RunConfig& cfg);

}  // namespace dsgeo
