#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsgeo/commands.hpp"
#include "dsgeo/errors.hpp"
#include "dsgeo/runconfig.hpp"
#include "dsgeo/version.hpp"

namespace {

using dsgeo::Report;
using dsgeo::RunConfig;

struct Command {
  const char* name;
  const char* help;
  Report (*fn)(const RunConfig&);
};

constexpr Command kCommands[] = {
    {"verify-christoffel",
     "connection coefficients, covariant derivatives and frame accelerations "
     "against finite differences",
     dsgeo::run_verify_christoffel},
    {"verify-killing",
     "Killing residuals of the ten plane generators and the tabulated fields",
     dsgeo::run_verify_killing},
    {"curvature",
     "sectional curvature, Ricci proportionality and curvature identities",
     dsgeo::run_curvature},
    {"lct", "Laplacian comparison on the warped model spaces", dsgeo::run_lct},
    {"beltrami",
     "embedding constraints, closed-form metrics and the projective chart",
     dsgeo::run_beltrami},
    {"geodesic", "integrate a geodesic and track its conserved charges",
     dsgeo::run_geodesic},
};

std::vector<double> parse_state_csv(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw dsgeo::ConfigInvalid("bad --state entry '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) {
      throw dsgeo::ConfigInvalid("bad --state entry '" + item + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int emit(const Report& rpt, const std::string& out) {
  const std::string text = rpt.serialize();
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }
    os << text;
  }
  return rpt.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  // --config seeds the defaults; explicit flags then override its keys.
  RunConfig cfg;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    }
    if (!path.empty()) {
      try {
        cfg = dsgeo::load_config_file(path, cfg);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }

  CLI::App app{"numerical checks for constant-curvature hypersurface geometry"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dsgeo::kVersion);

  std::string config_path;
  std::string state_csv;
  const Command* chosen = nullptr;
  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path,
                    "INI config file, applied before the other flags");
    sub->add_option("--radius", cfg.radius, "curvature radius R");
    sub->add_option("--seed", cfg.seed, "sample RNG seed");
    sub->add_option("--samples", cfg.samples, "sample-point count");
    sub->add_option("--step", cfg.step,
                    "base finite-difference step, in (1e-9, 1e-2)");
    sub->add_flag("--richardson,!--no-richardson", cfg.richardson,
                  "Richardson-extrapolated verification stencils");
    sub->add_option("--chart", cfg.chart, "chart name from the catalog");
    sub->add_option("--out", cfg.out, "report file instead of stdout");
    if (c.fn == dsgeo::run_geodesic) {
      sub->add_option("--state", state_csv,
                      "initial x then v, comma separated");
      sub->add_option("--dt", cfg.dt, "integrator step in tau");
      sub->add_option("--tau-end", cfg.tau_end, "integrate to this tau");
      sub->add_option("--traj", cfg.traj, "trajectory CSV path");
    } else if (c.fn == dsgeo::run_lct) {
      sub->add_option("--grid-min", cfg.grid.min, "first radius of the grid");
      sub->add_option("--grid-max", cfg.grid.max, "last radius of the grid");
      sub->add_option("--grid-count", cfg.grid.count, "grid point count");
    }
    sub->callback([&chosen, &c] { chosen = &c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!state_csv.empty()) cfg.state = parse_state_csv(state_csv);
    return emit(chosen->fn(cfg), cfg.out);
  } catch (const dsgeo::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
