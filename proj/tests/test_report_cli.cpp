#include <doctest.h>

#include <json.hpp>
#include <string>

#include "dsgeo/commands.hpp"
#include "dsgeo/report.hpp"
#include "dsgeo/runconfig.hpp"
#include "dsgeo/version.hpp"

using namespace dsgeo;

TEST_SUITE("report-cli") {

TEST_CASE("check records and exit codes") {
  CHECK(checked("a", "Eq(1)", 1e-9, 1e-6).status == CheckStatus::Pass);
  CHECK(checked("a", "Eq(1)", 2e-6, 1e-6).status == CheckStatus::Fail);
  CHECK(checked("a", "Eq(1)", 1e-6, 1e-6).status == CheckStatus::Pass);
  const CheckRecord r = reported("b", "Table 1", 0.5, "note");
  CHECK(r.status == CheckStatus::Reported);
  CHECK(r.tolerance < 0.0);

  Report rpt;
  rpt.add(checked("one", "Eq(1)", 0.0, 1.0));
  rpt.add(reported("two", "Eq(2)", 9.0));
  CHECK(rpt.all_pass());
  CHECK(rpt.exit_code() == 0);
  rpt.add(checked("three", "Eq(3)", 2.0, 1.0));
  CHECK_FALSE(rpt.all_pass());
  CHECK(rpt.exit_code() == 1);
  CHECK(rpt.count(CheckStatus::Pass) == 1);
  CHECK(rpt.count(CheckStatus::Fail) == 1);
  CHECK(rpt.count(CheckStatus::Reported) == 1);
  CHECK_THROWS_AS(rpt.add(checked("one", "Eq(1)", 0.0, 1.0)), ConfigInvalid);
}

TEST_CASE("serialization is canonical json") {
  Report rpt;
  rpt.version = kVersion;
  rpt.command = "demo";
  rpt.config_echo = {{"radius", "1"}, {"seed", "42"}};
  rpt.add(checked("c1", "Eq(48)", 1e-9, 1e-6, "note"));
  rpt.add(reported("c2", "Table 1 row 7", 0.3));
  const std::string s = rpt.serialize();
  CHECK(s == rpt.serialize());
  CHECK(s.back() == '\n');
  const auto j = nlohmann::json::parse(s);
  CHECK(j["tool"] == "dsgeo");
  CHECK(j["version"] == kVersion);
  CHECK(j["command"] == "demo");
  CHECK(j["config"]["radius"] == "1");
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["id"] == "c1");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["tolerance"] == 1e-6);
  CHECK(j["checks"][1]["status"] == "reported");
  CHECK_FALSE(j["checks"][1].contains("tolerance"));
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["reported"] == 1);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.step = 1e-2;
  CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
  cfg.step = 1e-9;
  CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
  cfg.step = 5e-3;
  CHECK_NOTHROW(cfg.validate());
  cfg.radius = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
  cfg.radius = 1.0;
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
  cfg.samples = 10;
  cfg.grid.count = 1;
  CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
  cfg.grid.count = 5;
  cfg.state = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
}

TEST_CASE("step policy derivation") {
  RunConfig cfg;
  cfg.step = 2e-5;
  cfg.richardson = true;
  const StepPolicy pol = cfg.policy();
  CHECK(pol.base == 2e-5);
  CHECK(pol.second_base == 1e-4);  // floor for direct second differences
  CHECK(pol.richardson);
  cfg.step = 5e-4;
  CHECK(cfg.policy().second_base == 5e-4);
}

TEST_CASE("grid points") {
  RunConfig cfg;
  cfg.grid = {1.0, 2.0, 3, false};
  const auto lin = cfg.grid_points();
  REQUIRE(lin.size() == 3);
  CHECK(lin[0] == doctest::Approx(1.0));
  CHECK(lin[1] == doctest::Approx(1.5));
  CHECK(lin[2] == doctest::Approx(2.0));
  cfg.grid = {1.0, 100.0, 3, true};
  const auto lg = cfg.grid_points();
  CHECK(lg[1] == doctest::Approx(10.0));
}

TEST_CASE("config text parsing") {
  const std::string text =
      "# comment\n"
      "[run]\n"
      "radius = 2.5\n"
      "seed = 7\n"
      "samples = 12\n"
      "richardson = true\n"
      "chart = beltrami\n"
      "[tolerances]\n"
      "first = 1e-5\n"
      "[grid]\n"
      "min = 0.2\n"
      "max = 3 ; trailing comment\n"
      "count = 7\n"
      "[geodesic]\n"
      "dt = 0.002\n"
      "state = 0, 0.3, 1.5, 0, 1, 0, 0, 0\n"
      "[output]\n"
      "report = out.json\n";
  const RunConfig cfg = parse_config_text(text, RunConfig{});
  CHECK(cfg.radius == 2.5);
  CHECK(cfg.seed == 7);
  CHECK(cfg.samples == 12);
  CHECK(cfg.richardson);
  CHECK(cfg.chart == "beltrami");
  CHECK(cfg.tol_first == 1e-5);
  CHECK(cfg.grid.min == 0.2);
  CHECK(cfg.grid.max == 3.0);
  CHECK(cfg.grid.count == 7);
  CHECK(cfg.dt == 0.002);
  REQUIRE(cfg.state.size() == 8);
  CHECK(cfg.state[1] == 0.3);
  CHECK(cfg.out == "out.json");
  CHECK(cfg.tau_end == 10.0);  // untouched keys keep their defaults

  CHECK_THROWS_AS(parse_config_text("[nope]\n", RunConfig{}), ConfigInvalid);
  CHECK_THROWS_AS(parse_config_text("[run]\nbogus = 1\n", RunConfig{}),
                  ConfigInvalid);
  CHECK_THROWS_AS(parse_config_text("radius = 1\n", RunConfig{}),
                  ConfigInvalid);
  CHECK_THROWS_AS(parse_config_text("[run]\nradius : 1\n", RunConfig{}),
                  ConfigInvalid);
  CHECK_THROWS_AS(parse_config_text("[run]\nradius = abc\n", RunConfig{}),
                  ConfigInvalid);
}

TEST_CASE("config echo covers every key") {
  RunConfig cfg;
  cfg.state = {1.0, 2.0};
  const auto echo = cfg.echo();
  const char* keys[] = {"radius", "seed", "samples", "step", "richardson",
                        "tol-first", "tol-second", "tol-integrator",
                        "grid-min", "grid-max", "grid-count", "grid-log",
                        "chart", "dt", "tau-end", "state", "out", "traj"};
  REQUIRE(echo.size() == sizeof(keys) / sizeof(keys[0]));
  for (std::size_t i = 0; i < echo.size(); ++i) CHECK(echo[i].first == keys[i]);
  CHECK(echo[15].second == "1,2");
}

TEST_CASE("commands produce identical reports for identical configs") {
  RunConfig cfg;
  cfg.samples = 5;
  const Report a = run_curvature(cfg);
  const Report b = run_curvature(cfg);
  CHECK(a.serialize() == b.serialize());
  CHECK(a.command == "curvature");
  CHECK(a.version == kVersion);
}

TEST_CASE("christoffel command passes at desk scale") {
  RunConfig cfg;
  cfg.samples = 10;
  const Report rpt = run_verify_christoffel(cfg);
  CHECK(rpt.all_pass());
  CHECK(rpt.exit_code() == 0);
  CHECK(rpt.count(CheckStatus::Reported) >= 2);  // the two audited misprints
}

TEST_CASE("geodesic command validates the state length") {
  RunConfig cfg;
  cfg.state = {0.0, 0.3, 1.5, 0.0, 1.0, 0.0};  // needs 8 entries
  CHECK_THROWS_AS(run_geodesic(cfg), ConfigInvalid);
}

TEST_CASE("commands reject invalid configs") {
  RunConfig cfg;
  cfg.step = 1.0;
  CHECK_THROWS_AS(run_curvature(cfg), ConfigInvalid);
  RunConfig bad_chart;
  bad_chart.chart = "no-such-chart";
  CHECK_THROWS_AS(run_geodesic(bad_chart), UnknownChart);
}

}  // TEST_SUITE
