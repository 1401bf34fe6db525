#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dsgeo/fd.hpp"

namespace dsgeo {

struct GridSpec {
  double min = 0.1;
  double max = 5.0;
  int count = 50;
  bool log_spacing = false;
};

// One configuration drives every command; unused keys are ignored by
// commands that do not need them but always echoed into the report.
struct RunConfig {
  double radius = 1.0;
  std::uint64_t seed = 42;
  int samples = 100;
  double step = 1e-5;
  bool richardson = false;
  double tol_first = 1e-6;
  double tol_second = 1e-4;
  double tol_integrator = 1e-8;
  GridSpec grid;
  std::string chart = "static-47-corrected";
  double dt = 1e-3;
  double tau_end = 10.0;
  // Geodesic initial state, coordinates then velocity components; empty
  // selects the command's default state.
  std::vector<double> state;
  std::string out;   // report path; empty writes to stdout
  std::string traj;  // trajectory CSV path; empty skips the export

  // Throws ConfigInvalid; the step must lie strictly inside (1e-9, 1e-2).
  void validate() const;

  // Verification stencil policy derived from step/richardson.
  StepPolicy policy() const;

  std::vector<double> grid_points() const;

  // Stable key order, full-precision values; embedded in every report.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

// Applies the file's keys on top of `base` and returns the result. Format:
// flat key = value lines under [run], [tolerances], [grid], [geodesic] and
// [output] sections; '#' or ';' comments; unknown sections or keys are
// errors. Every key corresponds to a command-line flag of the same name.
RunConfig parse_config_text(const std::string& text, const RunConfig& base);
RunConfig load_config_file(const std::string& path, const RunConfig& base);

}  // namespace dsgeo
