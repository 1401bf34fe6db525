#pragma once

#include <string>
#include <vector>

#include "dsgeo/chart.hpp"
#include "dsgeo/geodesic.hpp"
#include "dsgeo/tensor.hpp"

namespace dsgeo {

// Linear ambient field u(xi) = coeff * xi + sigma. The rotation/boost
// generators have sigma = 0 and coeff antisymmetric after lowering with the
// flat metric; translations have coeff = 0.
struct AmbientGenerator {
  int A = -1;
  int B = -1;
  Mat coeff;
  Vec sigma;
  std::string name;

  Vec operator()(const Vec& xi) const { return coeff * xi + sigma; }
};

// Generator of rotations/boosts in the (A, B) ambient plane:
//   u^A = s_A xi^B,  u^B = -s_B xi^A,  other components zero,
// where s is the sign vector of the flat metric. Tangent to every centered
// quadric of that signature.
AmbientGenerator ambient_generator(int A, int B, const Quadric& q);

// All C(n,2) plane generators in lexicographic (A, B) order.
std::vector<AmbientGenerator> ambient_generators(const Quadric& q);

// Constant translation field along ambient axis A. Killing for the flat
// metric but not tangent to the quadric; used as a negative control.
AmbientGenerator translation_generator(int A, const Quadric& q);

struct PullbackResult {
  Vec v;                    // chart components solving J v = U
  double residual = 0.0;    // ||J v - U|| (tangency defect)
  double min_singular = 0.0;
};

// Solves J(p) v = U(embed(p)) in the least-squares sense. Throws
// RankDeficientJacobian below rank_tol and NonTangentField when the
// reconstruction residual exceeds tangency_tol * max(1, ||U||).
PullbackResult pullback_at(const Chart& c,
                           const std::function<Vec(const Vec&)>& ambient_u,
                           const Vec& p, const StepPolicy& pol = {},
                           double tangency_tol = 1e-8,
                           double rank_tol = 1e-8);

// The pullback as a chart vector field (evaluates pullback_at pointwise).
VectorFn pulled_back_field(const Chart& c, const AmbientGenerator& u,
                           const StepPolicy& pol = {});

// Killing residual K_ab = d_a u_b + d_b u_a - 2 Gamma^c_ab u_c with
// u_b = g_bc X^c. Symmetric; vanishes iff X is Killing at p.
Mat killing_residual(const MetricField& g, const VectorFn& X, const Vec& p,
                     const StepPolicy& pol = {});

// Q = g_ab u^a v^b, constant along geodesics when u is Killing.
double conserved_charge(const MetricField& g, const VectorFn& u,
                        const GeodesicState& s);

// Printed covector components (u_0p, u_1p, u_2p, u_3p) of the given table
// row (1-based), evaluated on the static chart coordinates (t, rho, theta,
// phi) with c = cosh(t/R), s = sinh(t/R), Omega = rho (1 - rho^2/R^2).
// omega_sqrt swaps in the alternative reading Omega = sqrt(1 - rho^2/R^2),
// under which several rows become exact generator pullbacks.
VectorFn table1_field(int row, double R, bool omega_sqrt = false);

// One table row audited against the span of the ten pulled-back plane
// generators: the printed covector is raised with the inverse closed-form
// metric and matched by least squares over sample points. The alt_* fields
// repeat the single-generator fit under the square-root Omega reading.
struct Table1Match {
  int row = 0;
  int best_generator = -1;        // index into ambient_generators order
  double coefficient = 0.0;       // scale of the best single-generator match
  double single_residual = 0.0;   // relative residual of that match
  double span_residual = 0.0;     // relative residual against the full span
  bool matched = false;           // single_residual <= tol
  int alt_generator = -1;
  double alt_coefficient = 0.0;
  double alt_residual = 0.0;
};

std::vector<Table1Match> table1_audit(double R, int points, SampleRng& rng,
                                      const StepPolicy& pol = {},
                                      double tol = 1e-6);

// Max-abs residual of one printed Killing equation (1-based index into the
// eight-equation list) evaluated on a vector field given in raised
// components. The printed equations act on lowered components.
double printed_killing_equation_residual(int equation, double R,
                                         const VectorFn& X_raised,
                                         const Vec& p,
                                         const StepPolicy& pol = {});

// Residual of the generated (from christoffel) Killing equation restricted
// to the same lowered-component form, for cross-checking the printed list.
int printed_killing_equation_count();

}  // namespace dsgeo
