#include <doctest.h>

#include <cmath>

#include "dsgeo/chart_catalog.hpp"
#include "dsgeo/isometry.hpp"

using namespace dsgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec vec4(double a, double b, double c, double d) {
  Vec v(4);
  v << a, b, c, d;
  return v;
}

Vec vec5(double a, double b, double c, double d, double e) {
  Vec v(5);
  v << a, b, c, d, e;
  return v;
}

StepPolicy rich() {
  StepPolicy pol;
  pol.richardson = true;
  return pol;
}

Quadric ds_quadric(double R) { return Quadric(Signature::minus_first(5), R); }

}  // namespace

TEST_SUITE("isometry") {

TEST_CASE("plane generator components") {
  const Quadric q = ds_quadric(1.0);
  const AmbientGenerator g12 = ambient_generator(1, 2, q);
  const Vec u = g12(vec5(0, 1, 0, 0, 0));
  CHECK(u[0] == 0.0);
  CHECK(u[1] == 0.0);
  CHECK(u[2] == -1.0);
  CHECK(u[3] == 0.0);
  // Boost generator mixes sign through the lowered index.
  const AmbientGenerator g01 = ambient_generator(0, 1, q);
  const Vec b = g01(vec5(1, 2, 0, 0, 0));
  CHECK(b[0] == -2.0);
  CHECK(b[1] == -1.0);
}

TEST_CASE("ten generators in lexicographic order") {
  const auto gens = ambient_generators(ds_quadric(1.0));
  CHECK(gens.size() == 10);
  CHECK(gens[0].A == 0);
  CHECK(gens[0].B == 1);
  CHECK(gens[3].name == "u_04");
  CHECK(gens[4].A == 1);
  CHECK(gens[4].B == 2);
  CHECK(gens[9].A == 3);
  CHECK(gens[9].B == 4);
}

TEST_CASE("generators are tangent and antisymmetric when lowered") {
  const Quadric q = ds_quadric(1.3);
  const Mat eta = q.sig.matrix();
  const Chart chart = make_chart("static-47-corrected", 1.3);
  SampleRng rng(23);
  for (const auto& gen : ambient_generators(q)) {
    const Mat lowered = eta * gen.coeff;
    CHECK((lowered + lowered.transpose()).cwiseAbs().maxCoeff() < 1e-15);
    for (int i = 0; i < 5; ++i) {
      const Vec xi = embed(chart, chart.sample(rng));
      CHECK(std::abs(flat_inner(q.sig, xi, gen(xi))) < 1e-13);
    }
  }
}

TEST_CASE("translations are not tangent to the quadric") {
  const Quadric q = ds_quadric(1.0);
  const Chart chart = make_chart("static-47-corrected", 1.0);
  // At (t, rho, theta, phi) = (0, 0.5, pi/2, 0) the embedding has xi_1 =
  // 0.5, so the axis-1 translation has a normal component there. (The axis-2
  // translation happens to be pointwise tangent at phi = 0.)
  const AmbientGenerator tr = translation_generator(1, q);
  const Vec p = vec4(0.0, 0.5, 0.5 * kPi, 0.0);
  CHECK_THROWS_AS(
      pullback_at(chart, [&tr](const Vec& xi) { return tr(xi); }, p, rich()),
      NonTangentField);
}

TEST_CASE("distinguished pullbacks on the static chart") {
  const double R = 1.4;
  const Chart chart = make_chart("static-47-corrected", R);
  const auto gens = ambient_generators(ds_quadric(R));
  const VectorFn time_field = pulled_back_field(chart, gens[3], rich());  // u_04
  const VectorFn phi_field = pulled_back_field(chart, gens[4], rich());   // u_12
  SampleRng rng(29);
  for (int i = 0; i < 5; ++i) {
    const Vec p = chart.sample(rng);
    const Vec t = time_field(p);
    CHECK((t - vec4(R, 0, 0, 0)).cwiseAbs().maxCoeff() < 1e-9);
    const Vec f = phi_field(p);
    CHECK((f - vec4(0, 0, 0, -1)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("pulled-back generators satisfy the killing equation") {
  const Chart chart = make_chart("static-47-corrected", 1.0);
  const MetricField g = metric_from_chart(chart, rich());
  const auto gens = ambient_generators(ds_quadric(1.0));
  const Vec p = vec4(0.2, 0.5, 1.1, 0.7);
  for (int idx : {0, 2, 4, 9}) {
    const VectorFn X = pulled_back_field(chart, gens[idx], rich());
    CHECK(killing_residual(g, X, p, rich()).cwiseAbs().maxCoeff() < 1e-7);
  }
  // The radial coordinate field is not Killing.
  const VectorFn bad = coordinate_field(4, 1);
  CHECK(killing_residual(g, bad, p, rich()).cwiseAbs().maxCoeff() > 0.1);
}

TEST_CASE("conserved charge against the closed-form metric") {
  const MetricField g = static_model_field(1.0);
  GeodesicState s;
  s.x = vec4(0.0, 0.5, 0.5 * kPi, 0.0);
  s.v = vec4(1.0, 0.0, 0.0, 0.0);
  const VectorFn dt_field = [](const Vec&) {
    Vec v(4);
    v << 1, 0, 0, 0;
    return v;
  };
  CHECK(conserved_charge(g, dt_field, s) == doctest::Approx(0.75));
}

TEST_CASE("table field values under both readings") {
  // Row 4 is (R Omega^2, 0, 0, 0).
  const Vec p = vec4(0.0, 0.5, 1.1, 0.7);
  const Vec w = table1_field(4, 1.0)(p);
  CHECK(w[0] == doctest::Approx(0.140625));  // Omega = rho (1 - rho^2)
  CHECK(w[1] == 0.0);
  const Vec walt = table1_field(4, 1.0, true)(p);
  CHECK(walt[0] == doctest::Approx(0.75));   // Omega^2 = 1 - rho^2
  // Row 5 carries no Omega at all.
  const Vec r5 = table1_field(5, 1.0)(vec4(0.3, 0.5, 0.5 * kPi, 0.2));
  CHECK(r5[3] == doctest::Approx(-0.25));
  CHECK(r5[0] == 0.0);
  CHECK((table1_field(5, 1.0, true)(vec4(0.3, 0.5, 0.5 * kPi, 0.2)) - r5)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK_THROWS_AS(table1_field(0, 1.0), GeometryError);
  CHECK_THROWS_AS(table1_field(11, 1.0), GeometryError);
}

TEST_CASE("table audit outcome is stable") {
  SampleRng rng(7);
  const auto matches = table1_audit(1.0, 25, rng, rich());
  REQUIRE(matches.size() == 10);
  for (int i = 0; i < 10; ++i) CHECK(matches[i].row == i + 1);

  // Row 5 is the one literal generator match: -1 * u_12 after raising.
  CHECK(matches[4].matched);
  CHECK(matches[4].best_generator == 4);
  CHECK(std::abs(matches[4].coefficient + 1.0) < 1e-9);
  CHECK(matches[4].single_residual < 1e-9);

  // Rows 1, 4, 9 become exact pullbacks under the square-root reading.
  CHECK_FALSE(matches[0].matched);
  CHECK(matches[0].alt_generator == 6);  // u_14
  CHECK(std::abs(matches[0].alt_coefficient - 1.0) < 1e-9);
  CHECK(matches[0].alt_residual < 1e-9);
  CHECK(matches[3].alt_generator == 3);  // u_04
  CHECK(std::abs(matches[3].alt_coefficient - 1.0) < 1e-9);
  CHECK(matches[3].alt_residual < 1e-9);
  CHECK(matches[8].alt_generator == 1);  // u_02
  CHECK(std::abs(matches[8].alt_coefficient + 1.0) < 1e-9);
  CHECK(matches[8].alt_residual < 1e-9);

  // Rows 6 and 8 carry no Omega, so both readings coincide.
  for (int i : {5, 7}) {
    CHECK_FALSE(matches[i].matched);
    CHECK(matches[i].alt_generator == matches[i].best_generator);
    CHECK(std::abs(matches[i].alt_residual - matches[i].single_residual) <
          1e-12);
  }

  // Every unmatched row still reports a nearest generator.
  for (const auto& m : matches) {
    CHECK(m.best_generator >= 0);
    CHECK(m.best_generator < 10);
    CHECK(m.span_residual >= 0.0);
  }
}

TEST_CASE("printed killing equations split into exact and flagged") {
  CHECK(printed_killing_equation_count() == 8);
  const Chart chart = make_chart("static-47-corrected", 1.0);
  const auto gens = ambient_generators(ds_quadric(1.0));
  const VectorFn time_field = pulled_back_field(chart, gens[3], rich());
  const Vec p = vec4(0.2, 0.5, 1.1, 0.7);
  // Equation 2 is printed correctly, so a true Killing field annihilates it.
  CHECK(printed_killing_equation_residual(2, 1.0, time_field, p, rich()) <
        1e-7);
  // Equation 6 carries a misprinted coefficient; u_04 has u_t != 0 and
  // exposes it.
  CHECK(printed_killing_equation_residual(6, 1.0, time_field, p, rich()) >
        0.1);
}

}  // TEST_SUITE
