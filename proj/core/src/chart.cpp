#include "dsgeo/chart.hpp"

#include <cmath>

#include "dsgeo/metric.hpp"

namespace dsgeo {

namespace {

void check_point(const Chart& c, const Vec& p) {
  if (p.size() != c.dim) {
    throw DimensionMismatch("chart '" + c.name + "': point has dimension " +
                            std::to_string(p.size()) + ", expected " +
                            std::to_string(c.dim));
  }
  if (!p.allFinite()) {
    throw OutsideDomain("chart '" + c.name + "': point has non-finite coordinates");
  }
  if (!c.domain(p)) {
    throw OutsideDomain("chart '" + c.name + "': point outside domain");
  }
}

}  // namespace

Vec embed(const Chart& c, const Vec& p) {
  check_point(c, p);
  Vec xi = c.embed_fn(p);
  if (xi.size() != c.target.sig.dim()) {
    throw DimensionMismatch("chart '" + c.name + "': embedding has wrong ambient dimension");
  }
  return xi;
}

Mat jacobian_fd(const Chart& c, const Vec& p, const StepPolicy& pol) {
  check_point(c, p);
  const int n = c.target.sig.dim();
  Mat J(n, c.dim);
  for (int i = 0; i < c.dim; ++i) {
    const double h = pol.step_for(p[i]);
    Vec pp = p, pm = p;
    pp[i] += h;
    pm[i] -= h;
    if (!c.domain(pp) || !c.domain(pm)) {
      throw StepTooLarge("chart '" + c.name + "': step h=" + std::to_string(h) +
                         " leaves the domain along coordinate " + std::to_string(i));
    }
    J.col(i) = detail::central_difference(c.embed_fn, p, i, pol);
  }
  return J;
}

Mat jacobian(const Chart& c, const Vec& p, const StepPolicy& pol) {
  if (c.analytic_jacobian) {
    check_point(c, p);
    return (*c.analytic_jacobian)(p);
  }
  return jacobian_fd(c, p, pol);
}

Mat pullback_metric(const Chart& c, const Vec& p, const StepPolicy& pol,
                    bool force_fd) {
  Mat J = force_fd ? jacobian_fd(c, p, pol) : jacobian(c, p, pol);
  Mat g = J.transpose() * c.metric_sig.diag().asDiagonal() * J;
  // Enforce exact symmetry; the product is symmetric up to roundoff.
  return 0.5 * (g + g.transpose());
}

MetricInverse invert_metric(const Mat& g) {
  const Eigen::Index m = g.rows();
  Eigen::PartialPivLU<Mat> lu(g);
  // |det| relative to the matrix scale flags numerically singular input.
  const double scale = g.cwiseAbs().maxCoeff();
  const double det = std::abs(lu.determinant());
  if (!(det > 1e-12 * std::pow(std::max(scale, 1e-300), static_cast<double>(m)))) {
    throw DegenerateMetric("metric is singular to working precision");
  }
  Mat inv = lu.solve(Mat::Identity(m, m));
  const double n1 = g.cwiseAbs().colwise().sum().maxCoeff();
  const double n2 = inv.cwiseAbs().colwise().sum().maxCoeff();
  return {inv, n1 * n2};
}

void validate_metric(const MetricField& g, const Vec& p) {
  if (p.size() != g.dim) {
    throw DimensionMismatch("metric '" + g.name + "': point has wrong dimension");
  }
  if (!g.domain(p)) {
    throw OutsideDomain("metric '" + g.name + "': point outside domain");
  }
  Mat G = g.components(p);
  if (G.rows() != g.dim || G.cols() != g.dim) {
    throw DimensionMismatch("metric '" + g.name + "': components have wrong shape");
  }
  const double scale = std::max(G.cwiseAbs().maxCoeff(), 1e-300);
  if ((G - G.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw GeometryError("metric '" + g.name + "': components not symmetric");
  }
  invert_metric(G);  // throws DegenerateMetric if singular
  if (g.expected_positive >= 0 || g.expected_negative >= 0) {
    Eigen::SelfAdjointEigenSolver<Mat> es(G);
    int pos = 0, neg = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double ev = es.eigenvalues()[i];
      pos += ev > 0;
      neg += ev < 0;
    }
    if ((g.expected_positive >= 0 && pos != g.expected_positive) ||
        (g.expected_negative >= 0 && neg != g.expected_negative)) {
      throw GeometryError("metric '" + g.name + "': eigenvalue signs (" +
                          std::to_string(pos) + "," + std::to_string(neg) +
                          ") do not match the expected signature");
    }
  }
}

MetricField metric_from_chart(const Chart& c, const StepPolicy& pol,
                              bool use_closed_form) {
  MetricField m;
  m.name = c.name;
  m.dim = c.dim;
  m.domain = c.domain;
  m.sample = c.sample;
  m.expected_positive = c.metric_positive;
  m.expected_negative = c.metric_negative;
  if (use_closed_form && c.closed_form_metric) {
    m.components = *c.closed_form_metric;
  } else {
    Chart chart = c;
    m.components = [chart, pol](const Vec& p) {
      return pullback_metric(chart, p, pol);
    };
  }
  return m;
}

MetricField flat_metric(int dim) {
  MetricField m;
  m.name = "flat-" + std::to_string(dim);
  m.dim = dim;
  m.components = [dim](const Vec&) { return Mat::Identity(dim, dim); };
  m.expected_positive = dim;
  m.expected_negative = 0;
  m.sample = [dim](SampleRng& rng) {
    Vec p(dim);
    for (int i = 0; i < dim; ++i) p[i] = rng.uniform(-1.0, 1.0);
    return p;
  };
  return m;
}

}  // namespace dsgeo
