#pragma once

#include <functional>
#include <vector>

#include "dsgeo/metric.hpp"

namespace dsgeo {

using ScalarFn = std::function<double(const Vec&)>;
using VectorFn = std::function<Vec(const Vec&)>;

// Unit coordinate frame field e_mu on an m-dimensional chart.
VectorFn coordinate_field(int dim, int mu);

// Levi-Civita connection coefficients at a point.
// gamma[a](b, c) = Gamma^a_{bc}, exactly symmetric in (b, c) by construction.
struct ChristoffelField {
  std::vector<Mat> gamma;
  double metric_condition = 0.0;

  int dim() const { return static_cast<int>(gamma.size()); }
};

// Gamma^a_{bc} = 1/2 g^{ad} (d_b g_{dc} + d_c g_{db} - d_d g_{bc}) with
// central-difference metric derivatives.
ChristoffelField christoffel(const MetricField& g, const Vec& p,
                             const StepPolicy& pol = {});

// (D_X Y)^a = X^b d_b Y^a + Gamma^a_{bc} X^b Y^c at p.
Vec covariant_derivative(const MetricField& g, const VectorFn& X,
                         const VectorFn& Y, const Vec& p,
                         const StepPolicy& pol = {});

// Curvature at a point. riemann holds R^a_{bcd} flattened as
// ((a m + b) m + c) m + d.
struct CurvatureReport {
  int dim = 0;
  std::vector<double> riemann;
  Mat ricci;  // (a, c) contraction: Ric_{bd} = R^a_{bad}
  Mat g;      // metric at the point
  Mat ginv;
  double metric_condition = 0.0;

  double up(int a, int b, int c, int d) const {
    return riemann[static_cast<std::size_t>(((a * dim + b) * dim + c) * dim + d)];
  }
  // R_{abcd} = g_{ae} R^e_{bcd}
  double lowered(int a, int b, int c, int d) const;
};

// R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
//           + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}.
CurvatureReport riemann_curvature(const MetricField& g, const Vec& p,
                                  const StepPolicy& pol = {});
Mat ricci(const MetricField& g, const Vec& p, const StepPolicy& pol = {});

// K(u, v) = R_{abcd} u^a v^b u^c v^d / (g(u,u) g(v,v) - g(u,v)^2), the
// convention with K = +1 on the round unit sphere. Throws DegeneratePlane
// when |Gram| <= 1e-8 |u|^2 |v|^2 (Euclidean norms), which covers null
// planes in Lorentzian signature.
double sectional_curvature(const CurvatureReport& R, const Vec& u, const Vec& v);
double sectional_curvature(const MetricField& g, const Vec& p, const Vec& u,
                           const Vec& v, const StepPolicy& pol = {});

// (Hf)_{ab} = d_a d_b f - Gamma^c_{ab} d_c f. Direct second differences use
// the wider StepPolicy::second_base step; the Gamma term keeps the
// first-derivative step.
Mat hessian_scalar(const MetricField& g, const ScalarFn& f, const Vec& p,
                   const StepPolicy& pol = {});
// g^{ab} (Hf)_{ab}
double laplacian_scalar(const MetricField& g, const ScalarFn& f, const Vec& p,
                        const StepPolicy& pol = {});

// max_abs over (a,b,c) of d_a g_{bc} - Gamma^d_{ab} g_{dc} - Gamma^d_{ac} g_{bd}
double metric_compatibility_residual(const MetricField& g, const Vec& p,
                                     const StepPolicy& pol = {});
// max_abs over (a,b,c,d) of R^a_{bcd} + R^a_{cdb} + R^a_{dbc}
double first_bianchi_residual(const CurvatureReport& R);

}  // namespace dsgeo
