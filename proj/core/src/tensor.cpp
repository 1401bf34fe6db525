#include "dsgeo/tensor.hpp"

#include <cmath>
#include <string>

namespace dsgeo {

namespace {

void check_metric_point(const MetricField& g, const Vec& p) {
  if (p.size() != g.dim) {
    throw DimensionMismatch("metric '" + g.name + "': point has dimension " +
                            std::to_string(p.size()) + ", expected " +
                            std::to_string(g.dim));
  }
  if (!p.allFinite()) {
    throw OutsideDomain("metric '" + g.name + "': point has non-finite coordinates");
  }
  if (!g.domain(p)) {
    throw OutsideDomain("metric '" + g.name + "': point outside domain");
  }
}

// First-derivative stencils must stay inside the domain.
void require_stencil(const MetricField& g, const Vec& p, const StepPolicy& pol) {
  for (int i = 0; i < g.dim; ++i) {
    const double h = pol.step_for(p[i]);
    Vec pp = p, pm = p;
    pp[i] += h;
    pm[i] -= h;
    if (!g.domain(pp) || !g.domain(pm)) {
      throw StepTooLarge("metric '" + g.name + "': step h=" + std::to_string(h) +
                         " leaves the domain along coordinate " + std::to_string(i));
    }
  }
}

double domain_checked(const MetricField& g, const ScalarFn& f, const Vec& q) {
  if (!g.domain(q)) {
    throw StepTooLarge("metric '" + g.name +
                       "': second-derivative stencil leaves the domain");
  }
  return f(q);
}

}  // namespace

VectorFn coordinate_field(int dim, int mu) {
  if (mu < 0 || mu >= dim) {
    throw DimensionMismatch("coordinate_field: index out of range");
  }
  return [dim, mu](const Vec&) {
    Vec e = Vec::Zero(dim);
    e[mu] = 1.0;
    return e;
  };
}

ChristoffelField christoffel(const MetricField& g, const Vec& p,
                             const StepPolicy& pol) {
  check_metric_point(g, p);
  require_stencil(g, p, pol);
  const int m = g.dim;
  const MetricInverse gi = invert_metric(g.components(p));
  std::vector<Mat> dg(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b) {
    dg[static_cast<std::size_t>(b)] =
        detail::central_difference(g.components, p, b, pol);
  }
  ChristoffelField out;
  out.metric_condition = gi.condition;
  out.gamma.assign(static_cast<std::size_t>(m), Mat::Zero(m, m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = b; c < m; ++c) {
        double s = 0.0;
        for (int d = 0; d < m; ++d) {
          s += gi.inv(a, d) *
               (dg[static_cast<std::size_t>(b)](d, c) +
                dg[static_cast<std::size_t>(c)](d, b) -
                dg[static_cast<std::size_t>(d)](b, c));
        }
        const double val = 0.5 * s;
        out.gamma[static_cast<std::size_t>(a)](b, c) = val;
        out.gamma[static_cast<std::size_t>(a)](c, b) = val;
      }
    }
  }
  return out;
}

Vec covariant_derivative(const MetricField& g, const VectorFn& X,
                         const VectorFn& Y, const Vec& p,
                         const StepPolicy& pol) {
  const ChristoffelField G = christoffel(g, p, pol);
  const int m = g.dim;
  const Vec Xp = X(p);
  const Vec Yp = Y(p);
  if (Xp.size() != m || Yp.size() != m) {
    throw DimensionMismatch("covariant_derivative: field dimension mismatch");
  }
  Mat dY(m, m);  // dY(a, b) = d_b Y^a
  for (int b = 0; b < m; ++b) {
    dY.col(b) = detail::central_difference(Y, p, b, pol);
  }
  Vec out = dY * Xp;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        out[a] += G.gamma[static_cast<std::size_t>(a)](b, c) * Xp[b] * Yp[c];
      }
    }
  }
  return out;
}

double CurvatureReport::lowered(int a, int b, int c, int d) const {
  double s = 0.0;
  for (int e = 0; e < dim; ++e) s += g(a, e) * up(e, b, c, d);
  return s;
}

CurvatureReport riemann_curvature(const MetricField& g, const Vec& p,
                                  const StepPolicy& pol) {
  check_metric_point(g, p);
  const int m = g.dim;
  const ChristoffelField G0 = christoffel(g, p, pol);
  auto gamma_flat = [&g, &pol, m](const Vec& q) {
    const ChristoffelField Gq = christoffel(g, q, pol);
    Vec f(m * m * m);
    for (int a = 0; a < m; ++a) {
      for (int d = 0; d < m; ++d) {
        for (int b = 0; b < m; ++b) {
          f[(a * m + d) * m + b] = Gq.gamma[static_cast<std::size_t>(a)](d, b);
        }
      }
    }
    return f;
  };
  std::vector<Vec> dG(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    dG[static_cast<std::size_t>(c)] = detail::central_difference(gamma_flat, p, c, pol);
  }
  auto dgam = [&dG, m](int c, int a, int d, int b) {
    return dG[static_cast<std::size_t>(c)][(a * m + d) * m + b];
  };

  CurvatureReport R;
  R.dim = m;
  R.g = g.components(p);
  const MetricInverse gi = invert_metric(R.g);
  R.ginv = gi.inv;
  R.metric_condition = gi.condition;
  R.riemann.assign(static_cast<std::size_t>(m * m * m * m), 0.0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        for (int d = 0; d < m; ++d) {
          double v = dgam(c, a, d, b) - dgam(d, a, c, b);
          for (int e = 0; e < m; ++e) {
            v += G0.gamma[static_cast<std::size_t>(a)](c, e) *
                     G0.gamma[static_cast<std::size_t>(e)](d, b) -
                 G0.gamma[static_cast<std::size_t>(a)](d, e) *
                     G0.gamma[static_cast<std::size_t>(e)](c, b);
          }
          R.riemann[static_cast<std::size_t>(((a * m + b) * m + c) * m + d)] = v;
        }
      }
    }
  }
  R.ricci = Mat::Zero(m, m);
  for (int b = 0; b < m; ++b) {
    for (int d = 0; d < m; ++d) {
      double s = 0.0;
      for (int a = 0; a < m; ++a) s += R.up(a, b, a, d);
      R.ricci(b, d) = s;
    }
  }
  return R;
}

Mat ricci(const MetricField& g, const Vec& p, const StepPolicy& pol) {
  return riemann_curvature(g, p, pol).ricci;
}

double sectional_curvature(const CurvatureReport& R, const Vec& u, const Vec& v) {
  if (u.size() != R.dim || v.size() != R.dim) {
    throw DimensionMismatch("sectional_curvature: vector dimension mismatch");
  }
  const double guu = u.dot(R.g * u);
  const double gvv = v.dot(R.g * v);
  const double guv = u.dot(R.g * v);
  const double gram = guu * gvv - guv * guv;
  if (std::abs(gram) <= 1e-8 * u.squaredNorm() * v.squaredNorm()) {
    throw DegeneratePlane("sectional_curvature: plane has (near-)zero Gram determinant");
  }
  double num = 0.0;
  for (int a = 0; a < R.dim; ++a) {
    for (int b = 0; b < R.dim; ++b) {
      for (int c = 0; c < R.dim; ++c) {
        for (int d = 0; d < R.dim; ++d) {
          num += R.lowered(a, b, c, d) * u[a] * v[b] * u[c] * v[d];
        }
      }
    }
  }
  return num / gram;
}

double sectional_curvature(const MetricField& g, const Vec& p, const Vec& u,
                           const Vec& v, const StepPolicy& pol) {
  return sectional_curvature(riemann_curvature(g, p, pol), u, v);
}

Mat hessian_scalar(const MetricField& g, const ScalarFn& f, const Vec& p,
                   const StepPolicy& pol) {
  const ChristoffelField G = christoffel(g, p, pol);
  const int m = g.dim;
  const double f0 = f(p);

  auto second_diag = [&](int a, double h) {
    Vec pp = p, pm = p;
    pp[a] += h;
    pm[a] -= h;
    return (domain_checked(g, f, pp) - 2.0 * f0 + domain_checked(g, f, pm)) /
           (h * h);
  };
  auto second_cross = [&](int a, int b, double ha, double hb) {
    Vec q1 = p, q2 = p, q3 = p, q4 = p;
    q1[a] += ha; q1[b] += hb;
    q2[a] += ha; q2[b] -= hb;
    q3[a] -= ha; q3[b] += hb;
    q4[a] -= ha; q4[b] -= hb;
    return (domain_checked(g, f, q1) - domain_checked(g, f, q2) -
            domain_checked(g, f, q3) + domain_checked(g, f, q4)) /
           (4.0 * ha * hb);
  };

  Mat H(m, m);
  for (int a = 0; a < m; ++a) {
    const double ha = pol.second_step_for(p[a]);
    double dd = second_diag(a, ha);
    if (pol.richardson) dd = (16.0 * second_diag(a, 0.5 * ha) - dd) / 15.0;
    H(a, a) = dd;
    for (int b = a + 1; b < m; ++b) {
      const double hb = pol.second_step_for(p[b]);
      double cc = second_cross(a, b, ha, hb);
      if (pol.richardson) {
        cc = (16.0 * second_cross(a, b, 0.5 * ha, 0.5 * hb) - cc) / 15.0;
      }
      H(a, b) = cc;
      H(b, a) = cc;
    }
  }
  Vec df(m);
  for (int c = 0; c < m; ++c) {
    df[c] = detail::central_difference_scalar(f, p, c, pol);
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        H(a, b) -= G.gamma[static_cast<std::size_t>(c)](a, b) * df[c];
      }
    }
  }
  return H;
}

double laplacian_scalar(const MetricField& g, const ScalarFn& f, const Vec& p,
                        const StepPolicy& pol) {
  const Mat H = hessian_scalar(g, f, p, pol);
  const MetricInverse gi = invert_metric(g.components(p));
  return (gi.inv * H).trace();
}

double metric_compatibility_residual(const MetricField& g, const Vec& p,
                                     const StepPolicy& pol) {
  const ChristoffelField G = christoffel(g, p, pol);
  const int m = g.dim;
  const Mat gp = g.components(p);
  double worst = 0.0;
  for (int a = 0; a < m; ++a) {
    const Mat dga = detail::central_difference(g.components, p, a, pol);
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        double r = dga(b, c);
        for (int d = 0; d < m; ++d) {
          r -= G.gamma[static_cast<std::size_t>(d)](a, b) * gp(d, c) +
               G.gamma[static_cast<std::size_t>(d)](a, c) * gp(b, d);
        }
        worst = std::max(worst, std::abs(r));
      }
    }
  }
  return worst;
}

double first_bianchi_residual(const CurvatureReport& R) {
  double worst = 0.0;
  for (int a = 0; a < R.dim; ++a) {
    for (int b = 0; b < R.dim; ++b) {
      for (int c = 0; c < R.dim; ++c) {
        for (int d = 0; d < R.dim; ++d) {
          worst = std::max(worst, std::abs(R.up(a, b, c, d) + R.up(a, c, d, b) +
                                           R.up(a, d, b, c)));
        }
      }
    }
  }
  return worst;
}

}  // namespace dsgeo
