#include "dsgeo/isometry.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "dsgeo/chart_catalog.hpp"

namespace dsgeo {

AmbientGenerator ambient_generator(int A, int B, const Quadric& q) {
  const int n = q.sig.dim();
  if (A < 0 || A >= n || B < 0 || B >= n) {
    throw DimensionMismatch("ambient_generator: plane index out of range");
  }
  if (A == B) {
    throw ConfigInvalid("ambient_generator: plane indices must differ");
  }
  AmbientGenerator u;
  u.A = A;
  u.B = B;
  u.coeff = Mat::Zero(n, n);
  u.coeff(A, B) = q.sig.sign(A);
  u.coeff(B, A) = -q.sig.sign(B);
  u.sigma = Vec::Zero(n);
  u.name = "u_" + std::to_string(A) + std::to_string(B);
  return u;
}

std::vector<AmbientGenerator> ambient_generators(const Quadric& q) {
  std::vector<AmbientGenerator> out;
  const int n = q.sig.dim();
  for (int A = 0; A < n; ++A) {
    for (int B = A + 1; B < n; ++B) {
      out.push_back(ambient_generator(A, B, q));
    }
  }
  return out;
}

AmbientGenerator translation_generator(int A, const Quadric& q) {
  const int n = q.sig.dim();
  if (A < 0 || A >= n) {
    throw DimensionMismatch("translation_generator: axis index out of range");
  }
  AmbientGenerator u;
  u.A = A;
  u.B = A;
  u.coeff = Mat::Zero(n, n);
  u.sigma = Vec::Zero(n);
  u.sigma[A] = 1.0;
  u.name = "t_" + std::to_string(A);
  return u;
}

PullbackResult pullback_at(const Chart& c,
                           const std::function<Vec(const Vec&)>& ambient_u,
                           const Vec& p, const StepPolicy& pol,
                           double tangency_tol, double rank_tol) {
  const Mat J = jacobian(c, p, pol);
  const Vec U = ambient_u(embed(c, p));
  if (U.size() != J.rows()) {
    throw DimensionMismatch("pullback_at: ambient field dimension mismatch");
  }
  Eigen::JacobiSVD<Mat> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin <= rank_tol * std::max(1.0, smax)) {
    throw RankDeficientJacobian("pullback_at: chart '" + c.name +
                                "' Jacobian loses rank at this point");
  }
  PullbackResult r;
  r.v = svd.solve(U);
  r.residual = (J * r.v - U).norm();
  r.min_singular = smin;
  if (r.residual > tangency_tol * std::max(1.0, U.norm())) {
    throw NonTangentField("pullback_at: field '" + c.name +
                          "' reconstruction residual " +
                          std::to_string(r.residual) +
                          " exceeds the tangency threshold");
  }
  return r;
}

VectorFn pulled_back_field(const Chart& c, const AmbientGenerator& u,
                           const StepPolicy& pol) {
  const std::function<Vec(const Vec&)> fu = u;
  return [c, fu, pol](const Vec& p) { return pullback_at(c, fu, p, pol).v; };
}

Mat killing_residual(const MetricField& g, const VectorFn& X, const Vec& p,
                     const StepPolicy& pol) {
  const ChristoffelField G = christoffel(g, p, pol);
  const int m = g.dim;
  auto lowered = [&g, &X](const Vec& q) { return (g.components(q) * X(q)).eval(); };
  const Vec Lp = lowered(p);
  std::vector<Vec> dL(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    dL[static_cast<std::size_t>(a)] = detail::central_difference(lowered, p, a, pol);
  }
  Mat K(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      double k = dL[static_cast<std::size_t>(a)][b] +
                 dL[static_cast<std::size_t>(b)][a];
      for (int cI = 0; cI < m; ++cI) {
        k -= 2.0 * G.gamma[static_cast<std::size_t>(cI)](a, b) * Lp[cI];
      }
      K(a, b) = k;
      K(b, a) = k;
    }
  }
  return K;
}

double conserved_charge(const MetricField& g, const VectorFn& u,
                        const GeodesicState& s) {
  return s.v.dot(g.components(s.x) * u(s.x));
}

VectorFn table1_field(int row, double R, bool omega_sqrt) {
  if (row < 1 || row > 10) {
    throw ConfigInvalid("table1_field: row must be in 1..10");
  }
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw ConfigInvalid("table1_field: radius must be positive");
  }
  return [row, R, omega_sqrt](const Vec& p) {
    const double t = p[0], rho = p[1], th = p[2], ph = p[3];
    const double c = std::cosh(t / R);
    const double s = std::sinh(t / R);
    const double u2 = 1.0 - rho * rho / (R * R);
    const double om = omega_sqrt ? std::sqrt(u2) : rho * u2;
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    Vec w = Vec::Zero(4);
    switch (row) {
      case 1:
        w << rho * om * st * cp * s, -R / om * st * cp * c,
            -rho * R * om * ct * cp * c, rho * R * om * st * sp * c;
        break;
      case 2:
        w << -rho * om * st * sp * s, -R / om * st * sp * c,
            -rho * R * om * ct * sp * c, rho * R * om * st * cp * c;
        break;
      case 3:
        w << rho * om * ct * c, -R / om * ct * c, rho * R * om * st * c, 0.0;
        break;
      case 4:
        w << R * om * om, 0.0, 0.0, 0.0;
        break;
      case 5:
        w << 0.0, 0.0, 0.0, -rho * rho * st * st;
        break;
      case 6:
        w << 0.0, 0.0, rho * rho * cp, -rho * rho * st * st * ct * sp;
        break;
      case 7:
        w << -rho * om * st * cp * c, R / om * st * cp * s,
            rho * R * om * ct * cp * s, rho * R * om * st * sp * s;
        break;
      case 8:
        w << 0.0, 0.0, rho * rho * sp, rho * rho * st * st * ct * cp;
        break;
      case 9:
        w << -rho * om * st * sp * c, R / om * st * sp * s,
            rho * R * om * ct * sp * s, rho * R * om * st * cp * s;
        break;
      case 10:
        w << -rho * om * ct * s, R / om * ct * s, -rho * R * om * st * s, 0.0;
        break;
    }
    return w;
  };
}

std::vector<Table1Match> table1_audit(double R, int points, SampleRng& rng,
                                      const StepPolicy& pol, double tol) {
  if (points < 2) throw ConfigInvalid("table1_audit: need at least two points");
  const Chart c = make_chart("static-47-corrected", R);
  const std::vector<AmbientGenerator> gens = ambient_generators(c.target);
  const int ng = static_cast<int>(gens.size());

  std::vector<Vec> ps;
  ps.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) ps.push_back(c.sample(rng));

  Mat G(4 * points, ng);
  for (int j = 0; j < ng; ++j) {
    const std::function<Vec(const Vec&)> fu = gens[static_cast<std::size_t>(j)];
    for (int i = 0; i < points; ++i) {
      G.block(4 * i, j, 4, 1) =
          pullback_at(c, fu, ps[static_cast<std::size_t>(i)], pol).v;
    }
  }
  Eigen::ColPivHouseholderQR<Mat> qr(G);

  auto raised_samples = [&](const VectorFn& w) {
    Vec Y(4 * points);
    for (int i = 0; i < points; ++i) {
      const Vec& p = ps[static_cast<std::size_t>(i)];
      const MetricInverse gi = invert_metric(static_model_metric(R, p));
      Y.segment(4 * i, 4) = gi.inv * w(p);
    }
    return Y;
  };
  auto best_single = [&](const Vec& Y, int* gen, double* coeff) {
    const double yscale = std::max(Y.norm(), 1e-300);
    double best = 1.0;
    for (int j = 0; j < ng; ++j) {
      const Vec Gj = G.col(j);
      const double cj = Gj.dot(Y) / Gj.squaredNorm();
      const double res = (Y - cj * Gj).norm() / yscale;
      if (res < best) {
        best = res;
        *gen = j;
        *coeff = cj;
      }
    }
    return best;
  };

  std::vector<Table1Match> out;
  for (int row = 1; row <= 10; ++row) {
    Table1Match m;
    m.row = row;
    const Vec Y = raised_samples(table1_field(row, R));
    m.single_residual = best_single(Y, &m.best_generator, &m.coefficient);
    const Vec beta = qr.solve(Y);
    m.span_residual = (Y - G * beta).norm() / std::max(Y.norm(), 1e-300);
    m.matched = m.single_residual <= tol;
    const Vec Ya = raised_samples(table1_field(row, R, true));
    m.alt_residual = best_single(Ya, &m.alt_generator, &m.alt_coefficient);
    out.push_back(m);
  }
  return out;
}

double printed_killing_equation_residual(int equation, double R,
                                         const VectorFn& X_raised,
                                         const Vec& p, const StepPolicy& pol) {
  if (equation < 1 || equation > printed_killing_equation_count()) {
    throw ConfigInvalid("printed_killing_equation_residual: index out of range");
  }
  auto lowered = [R, &X_raised](const Vec& q) {
    return (static_model_metric(R, q) * X_raised(q)).eval();
  };
  const Vec Lp = lowered(p);
  std::vector<Vec> dL(4);
  for (int a = 0; a < 4; ++a) {
    dL[static_cast<std::size_t>(a)] = detail::central_difference(lowered, p, a, pol);
  }
  const double rho = p[1];
  const double om = rho * (1.0 - rho * rho / (R * R));
  double v = 0.0;
  switch (equation) {
    case 1: v = dL[2][2] + om * Lp[1]; break;
    case 2: v = dL[1][2] + dL[2][1] - 2.0 / rho * Lp[2]; break;
    case 3: v = dL[1][3] + dL[3][1] - 2.0 / rho * Lp[3]; break;
    case 4: v = dL[0][3] + dL[3][0]; break;
    case 5: v = dL[0][2] + dL[2][0]; break;
    case 6: v = dL[0][1] + dL[1][0] + 2.0 / (R * R) * om * Lp[0]; break;
    case 7: v = dL[1][1] - 1.0 / (R * R) / om * Lp[0]; break;
    case 8: v = dL[0][0] + 1.0 / (R * R) * om * Lp[1]; break;
  }
  return std::abs(v);
}

int printed_killing_equation_count() { return 8; }

}  // namespace dsgeo
