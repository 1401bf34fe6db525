#include "dsgeo/chart_catalog.hpp"

#include <cmath>

namespace dsgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Overflow guard on hyperbolic arguments: |t| < 50 R keeps cosh(t/R) ~ 2.6e21.
bool time_ok(double t, double R) { return std::isfinite(t) && std::abs(t) < 50.0 * R; }

Vec sample_box(SampleRng& rng, const std::vector<std::pair<double, double>>& box) {
  Vec p(static_cast<Eigen::Index>(box.size()));
  for (std::size_t i = 0; i < box.size(); ++i) {
    p[static_cast<Eigen::Index>(i)] = rng.uniform(box[i].first, box[i].second);
  }
  return p;
}

Chart make_schrodinger_40(double R, double delta) {
  Chart c{.name = "schrodinger-40",
          .dim = 2,
          .target = Quadric(Signature::minus_first(3), R),
          .metric_sig = Signature::minus_first(3).negated(),
          .embed_fn = {},
          .domain = {}};
  (void)delta;  // globally regular; no interior margin needed
  c.coord_names = {"t", "chi"};
  c.embed_fn = [R](const Vec& p) {
    const double t = p[0], chi = p[1];
    Vec xi(3);
    xi[0] = R * std::sinh(t / R);
    xi[1] = R * std::cos(chi) * std::cosh(t / R);
    xi[2] = R * std::sin(chi) * std::cosh(t / R);
    return xi;
  };
  c.domain = [R](const Vec& p) { return time_ok(p[0], R) && std::isfinite(p[1]); };
  c.analytic_jacobian = [R](const Vec& p) {
    const double t = p[0], chi = p[1];
    const double ch = std::cosh(t / R), sh = std::sinh(t / R);
    Mat J(3, 2);
    J << ch, 0.0,                                        //
        std::cos(chi) * sh, -R * std::sin(chi) * ch,     //
        std::sin(chi) * sh, R * std::cos(chi) * ch;
    return J;
  };
  c.closed_form_metric = [R](const Vec& p) {
    const double ch = std::cosh(p[0] / R);
    Mat g = Mat::Zero(2, 2);
    g(0, 0) = 1.0;
    g(1, 1) = -R * R * ch * ch;
    return g;
  };
  c.sample = [R](SampleRng& rng) {
    return sample_box(rng, {{-1.2 * R, 1.2 * R}, {0.1, 2.0 * kPi - 0.1}});
  };
  c.metric_positive = 1;
  c.metric_negative = 1;
  return c;
}

Chart make_schrodinger_43(double R, double delta) {
  Chart c{.name = "schrodinger-43",
          .dim = 2,
          .target = Quadric(Signature::minus_first(3), R),
          .metric_sig = Signature::minus_first(3).negated(),
          .embed_fn = {},
          .domain = {}};
  c.coord_names = {"t", "chi"};
  c.embed_fn = [R](const Vec& p) {
    const double t = p[0], chi = p[1];
    Vec xi(3);
    xi[0] = R * std::cos(chi) * std::sinh(t / R);
    xi[1] = R * std::sin(chi);
    xi[2] = R * std::cos(chi) * std::cosh(t / R);
    return xi;
  };
  c.domain = [R, delta](const Vec& p) {
    return time_ok(p[0], R) && std::abs(p[1]) < 0.5 * kPi - delta;
  };
  c.analytic_jacobian = [R](const Vec& p) {
    const double t = p[0], chi = p[1];
    const double ch = std::cosh(t / R), sh = std::sinh(t / R);
    const double cc = std::cos(chi), sc = std::sin(chi);
    Mat J(3, 2);
    J << cc * ch, -R * sc * sh,  //
        0.0, R * cc,             //
        cc * sh, -R * sc * ch;
    return J;
  };
  // The pullback of the embedding as printed. The prose quotes R^2 cos^2 chi
  // on the dt term, which matches only at R = 1 (a dimensionless-time
  // convention); the pullback is the authority here.
  c.closed_form_metric = [R](const Vec& p) {
    const double cc = std::cos(p[1]);
    Mat g = Mat::Zero(2, 2);
    g(0, 0) = cc * cc;
    g(1, 1) = -R * R;
    return g;
  };
  c.sample = [R](SampleRng& rng) {
    return sample_box(rng, {{-1.2 * R, 1.2 * R}, {-1.3, 1.3}});
  };
  c.metric_positive = 1;
  c.metric_negative = 1;
  return c;
}

// The two static charts share everything but the hyperbolic functions in the
// xi_0 / xi_4 slots. `corrected` exchanges them so the constraint holds.
Chart make_static_47(double R, double delta, bool corrected) {
  Chart c{.name = corrected ? "static-47-corrected" : "static-47-printed",
          .dim = 4,
          .target = Quadric(Signature::minus_first(5), R),
          .metric_sig = Signature::minus_first(5).negated(),
          .embed_fn = {},
          .domain = {}};
  c.coord_names = {"t", "rho", "theta", "phi"};
  c.embed_fn = [R, corrected](const Vec& p) {
    const double t = p[0], rho = p[1], th = p[2], ph = p[3];
    const double f = std::sqrt(1.0 - rho * rho / (R * R));
    const double ch = std::cosh(t / R), sh = std::sinh(t / R);
    Vec xi(5);
    xi[0] = -R * f * (corrected ? sh : ch);
    xi[1] = rho * std::sin(th) * std::cos(ph);
    xi[2] = rho * std::sin(th) * std::sin(ph);
    xi[3] = rho * std::cos(th);
    xi[4] = R * f * (corrected ? ch : sh);
    return xi;
  };
  c.domain = [R, delta](const Vec& p) {
    const double rho = p[1], th = p[2];
    return time_ok(p[0], R) && rho > delta * R && rho < R * (1.0 - delta) &&
           th > delta && th < kPi - delta && std::isfinite(p[3]);
  };
  c.analytic_jacobian = [R, corrected](const Vec& p) {
    const double t = p[0], rho = p[1], th = p[2], ph = p[3];
    const double f = std::sqrt(1.0 - rho * rho / (R * R));
    const double ch = std::cosh(t / R), sh = std::sinh(t / R);
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    const double dfdr = -rho / (R * R * f);
    Mat J = Mat::Zero(5, 4);
    if (corrected) {
      J(0, 0) = -f * ch;
      J(0, 1) = -R * dfdr * sh;
      J(4, 0) = f * sh;
      J(4, 1) = R * dfdr * ch;
    } else {
      J(0, 0) = -f * sh;
      J(0, 1) = -R * dfdr * ch;
      J(4, 0) = f * ch;
      J(4, 1) = R * dfdr * sh;
    }
    J(1, 1) = st * cp;
    J(1, 2) = rho * ct * cp;
    J(1, 3) = -rho * st * sp;
    J(2, 1) = st * sp;
    J(2, 2) = rho * ct * sp;
    J(2, 3) = rho * st * cp;
    J(3, 1) = ct;
    J(3, 2) = -rho * st;
    return J;
  };
  if (corrected) {
    c.closed_form_metric = [R](const Vec& p) { return static_model_metric(R, p); };
    c.metric_positive = 1;
    c.metric_negative = 3;
  } else {
    c.constraint_asserted = false;  // fails the constraint; kept for comparison
  }
  c.sample = [R](SampleRng& rng) {
    return sample_box(rng, {{-1.5 * R, 1.5 * R},
                            {0.12 * R, 0.88 * R},
                            {0.25, kPi - 0.25},
                            {0.1, 2.0 * kPi - 0.1}});
  };
  return c;
}

// Shared spatial polar block: the 3-sphere of radius r in slots 1..4.
void polar_spatial(const Vec& p, Vec& xi) {
  const double r = p[0], ze = p[1], th = p[2], ph = p[3];
  xi[1] = r * std::sin(ze) * std::sin(th) * std::sin(ph);
  xi[2] = r * std::sin(ze) * std::sin(th) * std::cos(ph);
  xi[3] = r * std::sin(ze) * std::cos(th);
  xi[4] = r * std::cos(ze);
}

void polar_spatial_jacobian(const Vec& p, Mat& J) {
  const double r = p[0], ze = p[1], th = p[2], ph = p[3];
  const double sz = std::sin(ze), cz = std::cos(ze);
  const double st = std::sin(th), ct = std::cos(th);
  const double sp = std::sin(ph), cp = std::cos(ph);
  J(1, 0) = sz * st * sp;
  J(1, 1) = r * cz * st * sp;
  J(1, 2) = r * sz * ct * sp;
  J(1, 3) = r * sz * st * cp;
  J(2, 0) = sz * st * cp;
  J(2, 1) = r * cz * st * cp;
  J(2, 2) = r * sz * ct * cp;
  J(2, 3) = -r * sz * st * sp;
  J(3, 0) = sz * ct;
  J(3, 1) = r * cz * ct;
  J(3, 2) = -r * sz * st;
  J(4, 0) = cz;
  J(4, 1) = -r * sz;
}

Mat polar_closed_metric(double R, const Vec& p) {
  const double r = p[0], ze = p[1], th = p[2];
  const double sz = std::sin(ze), st = std::sin(th);
  Mat g = Mat::Zero(4, 4);
  g(0, 0) = 1.0 / (1.0 - r * r / (R * R));
  g(1, 1) = r * r;
  g(2, 2) = r * r * sz * sz;
  g(3, 3) = r * r * sz * sz * st * st;
  return g;
}

Chart make_sphere_polar(double R, double delta) {
  Chart c{.name = "sphere-polar",
          .dim = 4,
          .target = Quadric(Signature::euclidean(5), R),
          .metric_sig = Signature::euclidean(5),
          .embed_fn = {},
          .domain = {}};
  c.coord_names = {"r", "zeta", "theta", "phi"};
  c.embed_fn = [R](const Vec& p) {
    Vec xi(5);
    xi[0] = std::sqrt(R * R - p[0] * p[0]);
    polar_spatial(p, xi);
    return xi;
  };
  c.domain = [R, delta](const Vec& p) {
    return p[0] > delta * R && p[0] < R * (1.0 - delta) && p[1] > delta &&
           p[1] < kPi - delta && p[2] > delta && p[2] < kPi - delta &&
           std::isfinite(p[3]);
  };
  c.analytic_jacobian = [R](const Vec& p) {
    Mat J = Mat::Zero(5, 4);
    J(0, 0) = -p[0] / std::sqrt(R * R - p[0] * p[0]);
    polar_spatial_jacobian(p, J);
    return J;
  };
  c.closed_form_metric = [R](const Vec& p) { return polar_closed_metric(R, p); };
  c.sample = [R](SampleRng& rng) {
    return sample_box(rng, {{0.1 * R, 0.85 * R},
                            {0.25, kPi - 0.25},
                            {0.25, kPi - 0.25},
                            {0.1, 2.0 * kPi - 0.1}});
  };
  c.metric_positive = 4;
  c.metric_negative = 0;
  return c;
}

Chart make_hyperboloid_polar(double R, double delta) {
  Chart c{.name = "hyperboloid-polar",
          .dim = 4,
          .target = Quadric(Signature::minus_first(5), R),
          .metric_sig = Signature::minus_first(5),
          .embed_fn = {},
          .domain = {}};
  c.coord_names = {"r", "zeta", "theta", "phi"};
  c.embed_fn = [R](const Vec& p) {
    Vec xi(5);
    xi[0] = std::sqrt(p[0] * p[0] - R * R);
    polar_spatial(p, xi);
    return xi;
  };
  c.domain = [R, delta](const Vec& p) {
    return p[0] > R * (1.0 + delta) && p[0] < 50.0 * R && p[1] > delta &&
           p[1] < kPi - delta && p[2] > delta && p[2] < kPi - delta &&
           std::isfinite(p[3]);
  };
  c.analytic_jacobian = [R](const Vec& p) {
    Mat J = Mat::Zero(5, 4);
    J(0, 0) = p[0] / std::sqrt(p[0] * p[0] - R * R);
    polar_spatial_jacobian(p, J);
    return J;
  };
  // g_rr = 1/(1 - r^2/R^2) < 0 on r > R; angular block is the round 3-sphere.
  c.closed_form_metric = [R](const Vec& p) { return polar_closed_metric(R, p); };
  c.sample = [R](SampleRng& rng) {
    return sample_box(rng, {{1.15 * R, 3.0 * R},
                            {0.25, kPi - 0.25},
                            {0.25, kPi - 0.25},
                            {0.1, 2.0 * kPi - 0.1}});
  };
  c.metric_positive = 3;
  c.metric_negative = 1;
  return c;
}

// Lowered Minkowski components (-x0, x1, x2, x3).
Vec minkowski_lower(const Vec& x) {
  Vec xl = x;
  xl[0] = -xl[0];
  return xl;
}

Chart make_beltrami(double R, double delta) {
  Chart c{.name = "beltrami",
          .dim = 4,
          .target = Quadric(Signature::minus_first(5), R),
          .metric_sig = Signature::minus_first(5),
          .embed_fn = {},
          .domain = {}};
  c.coord_names = {"x0", "x1", "x2", "x3"};
  c.embed_fn = [R](const Vec& x) { return beltrami_lift(x, R); };
  c.domain = [R, delta](const Vec& x) {
    if (!x.allFinite() || x.cwiseAbs().maxCoeff() >= 50.0 * R) return false;
    return 1.0 + minkowski_sigma2(x) / (R * R) > std::max(delta, 1e-12);
  };
  c.analytic_jacobian = [R](const Vec& x) {
    const double D2 = 1.0 + minkowski_sigma2(x) / (R * R);
    const double D = std::sqrt(D2);
    const double D3 = D2 * D;
    const Vec xl = minkowski_lower(x);
    Mat J(5, 4);
    for (int nu = 0; nu < 4; ++nu) {
      for (int a = 0; a < 4; ++a) {
        J(nu, a) = (nu == a ? 1.0 / D : 0.0) - x[nu] * xl[a] / (R * R * D3);
      }
    }
    for (int a = 0; a < 4; ++a) J(4, a) = xl[a] / (R * D3);
    return J;
  };
  c.closed_form_metric = [R](const Vec& x) {
    const double D2 = 1.0 + minkowski_sigma2(x) / (R * R);
    const Vec xl = minkowski_lower(x);
    Mat eta = Mat::Zero(4, 4);
    eta.diagonal() << -1.0, 1.0, 1.0, 1.0;
    return Mat(eta / D2 - xl * xl.transpose() / (R * R * D2 * D2));
  };
  c.sample = [R](SampleRng& rng) {
    // Rejection keeps a 0.15 margin off the projective cone; a rejected draw
    // discards the whole 4-tuple and redraws, preserving determinism.
    for (;;) {
      Vec x = sample_box(rng, {{-0.8 * R, 0.8 * R},
                               {-0.8 * R, 0.8 * R},
                               {-0.8 * R, 0.8 * R},
                               {-0.8 * R, 0.8 * R}});
      if (1.0 + minkowski_sigma2(x) / (R * R) > 0.15) return x;
    }
  };
  c.metric_positive = 3;
  c.metric_negative = 1;
  return c;
}

}  // namespace

std::vector<std::string> chart_names() {
  return {"schrodinger-40", "schrodinger-43", "static-47-printed",
          "static-47-corrected", "sphere-polar", "hyperboloid-polar",
          "beltrami"};
}

Chart make_chart(const std::string& name, double R, double delta) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw GeometryError("chart radius must be positive and finite");
  }
  if (!(delta > 0.0) || delta >= 0.5) {
    throw GeometryError("chart domain margin must lie in (0, 0.5)");
  }
  if (name == "schrodinger-40") return make_schrodinger_40(R, delta);
  if (name == "schrodinger-43") return make_schrodinger_43(R, delta);
  if (name == "static-47-printed") return make_static_47(R, delta, false);
  if (name == "static-47-corrected") return make_static_47(R, delta, true);
  if (name == "sphere-polar") return make_sphere_polar(R, delta);
  if (name == "hyperboloid-polar") return make_hyperboloid_polar(R, delta);
  if (name == "beltrami") return make_beltrami(R, delta);
  throw UnknownChart("no chart registered under '" + name + "'");
}

double minkowski_sigma2(const Vec& x) {
  if (x.size() != 4) {
    throw DimensionMismatch("minkowski_sigma2 expects 4 components");
  }
  return -x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
}

Vec beltrami_project(const Vec& xi, double R, double eps) {
  if (xi.size() != 5) {
    throw DimensionMismatch("beltrami_project expects 5 components");
  }
  if (std::abs(xi[4]) <= eps) {
    throw EquatorialSingularity("beltrami_project: |xi^4| <= eps");
  }
  return Vec(-R * xi.head(4) / xi[4]);
}

Vec beltrami_lift(const Vec& x, double R, double eps) {
  const double D2 = 1.0 + minkowski_sigma2(x) / (R * R);
  if (D2 <= eps) {
    throw ProjectiveCone("beltrami_lift: 1 + sigma^2/R^2 <= eps");
  }
  const double D = std::sqrt(D2);
  Vec xi(5);
  xi.head(4) = x / D;
  xi[4] = -R / D;
  return xi;
}

Mat robertson_walker_metric(const ExpansionProfile& prof, const Vec& p) {
  if (p.size() != 4) {
    throw DimensionMismatch("robertson_walker_metric expects (t, r, theta, phi)");
  }
  const double t = p[0], r = p[1], th = p[2];
  const double a = prof.a(t);
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw GeometryError("robertson_walker_metric: scale factor must be positive");
  }
  const double denom = 1.0 - prof.k * r * r;
  if (!(denom > 0.0)) {
    throw OutsideDomain("robertson_walker_metric: 1 - k r^2 must stay positive");
  }
  Mat g = Mat::Zero(4, 4);
  g(0, 0) = -1.0;
  g(1, 1) = a * a / denom;
  g(2, 2) = a * a * r * r;
  g(3, 3) = a * a * r * r * std::sin(th) * std::sin(th);
  return g;
}

Mat static_model_metric(double R, const Vec& p) {
  if (p.size() != 4) {
    throw DimensionMismatch("static_model_metric expects (t, rho, theta, phi)");
  }
  const double rho = p[1], th = p[2];
  const double u2 = 1.0 - rho * rho / (R * R);
  Mat g = Mat::Zero(4, 4);
  g(0, 0) = u2;
  g(1, 1) = -1.0 / u2;
  g(2, 2) = -rho * rho;
  g(3, 3) = -rho * rho * std::sin(th) * std::sin(th);
  return g;
}

MetricField static_model_field(double R, double delta) {
  Chart c = make_chart("static-47-corrected", R, delta);
  MetricField m;
  m.name = "static-model";
  m.dim = 4;
  m.components = [R](const Vec& p) { return static_model_metric(R, p); };
  m.domain = c.domain;
  m.sample = c.sample;
  m.expected_positive = 1;
  m.expected_negative = 3;
  return m;
}

double polar_angle_ode_max_dev(double k, double r0, double r1, int steps) {
  if (!(k > 0.0)) {
    throw GeometryError("polar_angle_ode_max_dev requires k > 0");
  }
  if (!(0.0 < r0 && r0 < r1) || steps < 1) {
    throw GeometryError("polar_angle_ode_max_dev: need 0 < r0 < r1 and steps >= 1");
  }
  auto closed = [k](double r) { return (1.0 - k * r * r) / (1.0 + k * r * r); };
  auto rhs = [](double r, double z) { return std::sin(z) / r; };
  double z = std::acos(closed(r0));
  double r = r0;
  const double h = (r1 - r0) / steps;
  double max_dev = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double k1 = rhs(r, z);
    const double k2 = rhs(r + 0.5 * h, z + 0.5 * h * k1);
    const double k3 = rhs(r + 0.5 * h, z + 0.5 * h * k2);
    const double k4 = rhs(r + h, z + h * k3);
    z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    r = r0 + (i + 1) * h;
    max_dev = std::max(max_dev, std::abs(std::cos(z) - closed(r)));
  }
  return max_dev;
}

double substitution_44_max_dev(double R, int samples, SampleRng& rng) {
  if (!(R > 0.0) || samples < 1) {
    throw GeometryError("substitution_44_max_dev: need R > 0 and samples >= 1");
  }
  double max_dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double chi = rng.uniform(-1.3, 1.3);
    const double cc = std::cos(chi);
    // Band-chart metric in the form quoted with the chart, in (t, chi).
    Mat g = Mat::Zero(2, 2);
    g(0, 0) = R * R * cc * cc;
    g(1, 1) = -R * R;
    // eta = R t, rho = R sin chi; B = d(t, chi)/d(eta, rho).
    Mat B = Mat::Zero(2, 2);
    B(0, 0) = 1.0 / R;
    B(1, 1) = 1.0 / (R * cc);
    const Mat got = B.transpose() * g * B;
    const double rho = R * std::sin(chi);
    const double u2 = 1.0 - rho * rho / (R * R);
    Mat want = Mat::Zero(2, 2);
    want(0, 0) = u2;
    want(1, 1) = -1.0 / u2;
    max_dev = std::max(max_dev, (got - want).cwiseAbs().maxCoeff());
  }
  return max_dev;
}

std::vector<MetricClaim> printed_metric_claims(const std::string& chart_name,
                                               double R) {
  std::vector<MetricClaim> claims;
  if (chart_name == "schrodinger-40") {
    claims.push_back({"eq41-as-printed", "Eq(41)", [R](const Vec& p) {
                        const double ch = std::cosh(p[0] / R);
                        Mat g = Mat::Zero(2, 2);
                        g(0, 0) = R * R;
                        g(1, 1) = -R * R * ch * ch;
                        return g;
                      }});
  } else if (chart_name == "hyperboloid-polar") {
    claims.push_back({"gh-expanded-line", "Sec. 2.2 g_h expanded line",
                      [R](const Vec& p) {
                        Mat g = polar_closed_metric(R, p);
                        const double r = p[0];
                        g(0, 0) = 1.0 + 1.0 / (1.0 - R * R / (r * r));
                        return g;
                      }});
    claims.push_back({"gh-k-coefficient", "Sec. 2.2 g_h k-form",
                      [R](const Vec& p) {
                        Mat g = polar_closed_metric(R, p);
                        const double r = p[0], k = 1.0 / (R * R);
                        g(0, 0) = (2.0 - 1.0 / (k * r * r)) / (1.0 - k * r * r);
                        return g;
                      }});
  } else if (chart_name == "beltrami") {
    claims.push_back({"eq54-as-printed", "Eq(54)", [R](const Vec& x) {
                        const double D2 = 1.0 + minkowski_sigma2(x) / (R * R);
                        const Vec xl = minkowski_lower(x);
                        Mat eta = Mat::Zero(4, 4);
                        eta.diagonal() << -1.0, 1.0, 1.0, 1.0;
                        return Mat(eta / D2 +
                                   3.0 * xl * xl.transpose() / (R * R * D2 * D2));
                      }});
  }
  return claims;
}

Mat beltrami_printed_jacobian(const Vec& x, double R) {
  const double s2 = minkowski_sigma2(x);
  const double D2 = 1.0 + s2 / (R * R);
  const double D3 = D2 * std::sqrt(D2);
  const Vec xl = minkowski_lower(x);
  Mat J(5, 4);
  for (int nu = 0; nu < 4; ++nu) {
    for (int a = 0; a < 4; ++a) {
      J(nu, a) =
          ((nu == a ? R * R + s2 : 0.0) + xl[a] * x[nu]) / (R * R * D3);
    }
  }
  for (int a = 0; a < 4; ++a) J(4, a) = xl[a] / (R * D3);
  return J;
}

}  // namespace dsgeo
