#include "dsgeo/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "dsgeo/chart_catalog.hpp"
#include "dsgeo/geodesic.hpp"
#include "dsgeo/isometry.hpp"
#include "dsgeo/tensor.hpp"
#include "dsgeo/version.hpp"
#include "dsgeo/warped.hpp"

namespace dsgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

Report make_report(const char* command, const RunConfig& cfg) {
  cfg.validate();
  Report r;
  r.version = kVersion;
  r.command = command;
  r.config_echo = cfg.echo();
  return r;
}

std::vector<Vec> draw_points(const std::function<Vec(SampleRng&)>& sampler,
                             int n, SampleRng& rng) {
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(sampler(rng));
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

// Closed-form connection of the static model, with the two printed entries
// corrected: Gamma^1_00 carries a minus sign (fixed by the t-acceleration and
// the (tt) Killing equation) and Gamma^1_33 carries sin^2 theta.
std::vector<Mat> static_gamma_closed(double R, const Vec& p) {
  const double rho = p[1], th = p[2];
  const double u2 = 1.0 - rho * rho / (R * R);
  const double st = std::sin(th), ct = std::cos(th);
  std::vector<Mat> G(4, Mat::Zero(4, 4));
  G[0](0, 1) = G[0](1, 0) = -rho / (R * R * u2);
  G[1](0, 0) = -rho * u2 / (R * R);
  G[1](1, 1) = rho / (R * R * u2);
  G[1](2, 2) = -rho * u2;
  G[1](3, 3) = -rho * u2 * st * st;
  G[2](1, 2) = G[2](2, 1) = 1.0 / rho;
  G[2](3, 3) = -st * ct;
  G[3](1, 3) = G[3](3, 1) = 1.0 / rho;
  G[3](2, 3) = G[3](3, 2) = ct / st;
  return G;
}

bool gamma_position_listed(int a, int b, int c) {
  static constexpr std::array<std::array<int, 3>, 13> listed = {{
      {0, 0, 1}, {0, 1, 0},
      {1, 0, 0}, {1, 1, 1}, {1, 2, 2}, {1, 3, 3},
      {2, 1, 2}, {2, 2, 1}, {2, 3, 3},
      {3, 1, 3}, {3, 3, 1}, {3, 2, 3}, {3, 3, 2},
  }};
  for (const auto& e : listed) {
    if (e[0] == a && e[1] == b && e[2] == c) return true;
  }
  return false;
}

// The four printed covariant-derivative lines, transcribed: entry (a, b) is
// the coefficient of dx^b (x) d_a in D(d_mu).
Mat printed_D_table(double R, const Vec& p, int mu) {
  const double rho = p[1], th = p[2];
  const double u2 = 1.0 - rho * rho / (R * R);
  const double st = std::sin(th), ct = std::cos(th);
  Mat D = Mat::Zero(4, 4);
  switch (mu) {
    case 0:
      D(0, 1) = -rho / (R * R * u2);
      D(1, 0) = -rho * u2 / (R * R);
      break;
    case 1:
      D(0, 0) = -rho / (R * R * u2);
      D(1, 1) = rho / (R * R * u2);
      D(2, 2) = 1.0 / rho;
      D(3, 3) = 1.0 / rho;
      break;
    case 2:
      D(1, 2) = -rho * u2;
      D(3, 3) = ct / st;
      D(2, 1) = 1.0 / rho;
      break;
    case 3:
      D(3, 2) = ct / st;
      D(2, 3) = -st * ct;
      D(1, 3) = -rho * u2 * st * st;
      D(3, 1) = 1.0 / rho;
      break;
  }
  return D;
}

// The four printed acceleration closed forms.
Vec printed_acceleration(double R, const Vec& p, int mu) {
  const double rho = p[1], th = p[2];
  const double u2 = 1.0 - rho * rho / (R * R);
  const double st = std::sin(th), ct = std::cos(th);
  Vec a = Vec::Zero(4);
  switch (mu) {
    case 0: a[1] = -rho * u2 / (R * R); break;
    case 1: a[1] = rho / (R * R * u2); break;
    case 2: a[1] = -rho * u2; break;
    case 3:
      a[1] = -rho * u2 * st * st;
      a[2] = -st * ct;
      break;
  }
  return a;
}

}  // namespace

Report run_verify_christoffel(const RunConfig& cfg) {
  Report rpt = make_report("verify-christoffel", cfg);
  SampleRng rng(cfg.seed);
  const double R = cfg.radius;
  const StepPolicy pol = cfg.policy();
  const MetricField field = static_model_field(R);
  const std::vector<Vec> pts = draw_points(field.sample, cfg.samples, rng);

  std::vector<ChristoffelField> fd;
  fd.reserve(pts.size());
  for (const Vec& p : pts) fd.push_back(christoffel(field, p, pol));

  double dev_closed = 0.0, dev_unlisted = 0.0;
  double dev_100 = 0.0, dev_133 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::vector<Mat> G = static_gamma_closed(R, pts[i]);
    const double rho = pts[i][1], th = pts[i][2];
    const double u2 = 1.0 - rho * rho / (R * R);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
          const double num = fd[i].gamma[static_cast<std::size_t>(a)](b, c);
          const double diff = std::abs(num - G[static_cast<std::size_t>(a)](b, c));
          dev_closed = std::max(dev_closed, diff);
          if (!gamma_position_listed(a, b, c)) {
            dev_unlisted = std::max(dev_unlisted, std::abs(num));
          }
        }
      }
    }
    dev_100 = std::max(dev_100, std::abs(fd[i].gamma[1](0, 0) -
                                         rho * u2 / (R * R)));
    dev_133 = std::max(dev_133, std::abs(fd[i].gamma[1](3, 3) +
                                         rho * u2 * std::sin(th)));
  }
  rpt.add(checked("christoffel-vs-closed-form", "Sec. 3 Christoffel list",
                  dev_closed, cfg.tol_first,
                  "finite differences vs the closed forms, with the "
                  "Gamma^1_00 sign and Gamma^1_33 power corrected; the two "
                  "reported records audit the printed variants"));
  rpt.add(checked("christoffel-unlisted-zero", "Sec. 3 Christoffel list",
                  dev_unlisted, cfg.tol_first,
                  "every symbol outside the thirteen printed positions vanishes"));
  rpt.add(reported("gamma-100-as-printed", "Sec. 3 Christoffel list", dev_100,
                   "printed as +rho R^-2 (1 - rho^2/R^2); the t-acceleration "
                   "closed form and the (tt) Killing equation both require "
                   "the minus sign"));
  rpt.add(reported("gamma-133-as-printed", "Sec. 3 Christoffel list", dev_133,
                   "printed with sin theta; the phi-acceleration closed form "
                   "requires sin^2 theta"));

  double dev_D = 0.0;
  for (const Vec& p : pts) {
    for (int mu = 0; mu < 4; ++mu) {
      const Mat D = printed_D_table(R, p, mu);
      for (int b = 0; b < 4; ++b) {
        const Vec col = covariant_derivative(field, coordinate_field(4, b),
                                             coordinate_field(4, mu), p, pol);
        dev_D = std::max(dev_D, (col - D.col(b)).cwiseAbs().maxCoeff());
      }
    }
  }
  rpt.add(checked("covariant-derivative-table",
                  "Sec. 3 covariant derivative table", dev_D, cfg.tol_first,
                  "all four printed D lines hold as written"));

  const char* mu_names[4] = {"t", "rho", "theta", "phi"};
  for (int mu = 0; mu < 4; ++mu) {
    double dev = 0.0;
    for (const Vec& p : pts) {
      const Vec a = frame_acceleration(field, mu, p, pol);
      dev = std::max(dev, (a - printed_acceleration(R, p, mu)).cwiseAbs().maxCoeff());
    }
    rpt.add(checked(std::string("acceleration-") + mu_names[mu],
                    "Sec. 3 acceleration list", dev, cfg.tol_first, ""));
  }
  return rpt;
}

Report run_curvature(const RunConfig& cfg) {
  Report rpt = make_report("curvature", cfg);
  SampleRng rng(cfg.seed);
  const double R = cfg.radius;
  const StepPolicy pol = cfg.policy();
  const MetricField field = static_model_field(R);
  const std::vector<Vec> pts = draw_points(field.sample, cfg.samples, rng);

  // Nested second differences at the default base are roundoff-dominated at
  // large radius, so the curvature cache uses extrapolated stencils on a
  // coarser base; the configured policy still governs the compatibility check.
  StepPolicy curv = pol;
  curv.richardson = true;
  curv.base = std::max(pol.base, 5e-4);

  std::vector<CurvatureReport> reps;
  reps.reserve(pts.size());
  for (const Vec& p : pts) reps.push_back(riemann_curvature(field, p, curv));

  auto random_plane_k = [&rng](const CurvatureReport& rep) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Vec u(rep.dim), v(rep.dim);
      for (int i = 0; i < rep.dim; ++i) u[i] = rng.uniform(-1.0, 1.0);
      for (int i = 0; i < rep.dim; ++i) v[i] = rng.uniform(-1.0, 1.0);
      // Near-null planes divide the stencil noise by an arbitrarily small
      // Gram determinant; redraw until the plane carries a healthy margin.
      const double gu = u.dot(rep.g * u);
      const double gv = v.dot(rep.g * v);
      const double guv = u.dot(rep.g * v);
      const double gram = gu * gv - guv * guv;
      if (std::abs(gram) <= 1e-2 * (std::abs(gu * gv) + guv * guv)) continue;
      try {
        return sectional_curvature(rep, u, v);
      } catch (const DegeneratePlane&) {
      }
    }
    throw DegeneratePlane("curvature: no non-degenerate plane found");
  };

  double kmin = 0.0, kmax = 0.0, ksum = 0.0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const double K = random_plane_k(reps[i]);
    kmin = i == 0 ? K : std::min(kmin, K);
    kmax = i == 0 ? K : std::max(kmax, K);
    ksum += K;
  }
  rpt.add(checked("sectional-spread", "Eq(31)", kmax - kmin, cfg.tol_second,
                  "one random plane per sample point; measured K = " +
                      fmt(ksum / static_cast<double>(reps.size())) +
                      " across the static model"));

  double dev_ric = 0.0, lam_sum = 0.0;
  for (const auto& rep : reps) {
    const double lam = (rep.ginv * rep.ricci).trace() / 4.0;
    lam_sum += lam;
    dev_ric = std::max(dev_ric,
                       (rep.ricci - lam * rep.g).cwiseAbs().maxCoeff());
  }
  const double lam_mean = lam_sum / static_cast<double>(reps.size());
  rpt.add(checked("ricci-proportional", "Intro, R_munu = Lambda g_munu",
                  dev_ric, cfg.tol_second, "per-point proportionality"));
  rpt.add(checked("lambda-R2-value", "Intro, R_munu = Lambda g_munu",
                  std::abs(std::abs(lam_mean * R * R) - 3.0), 1e-3,
                  "measured Lambda R^2 = " + fmt(lam_mean * R * R) +
                      " in the mostly-minus convention; the magnitude is "
                      "asserted, the sign recorded"));

  {
    const WarpedMetric w = make_warped(-1.0, 4);
    const std::vector<Vec> wpts = draw_points(w.field.sample, 20, rng);
    double dev = 0.0;
    for (const Vec& p : wpts) {
      const CurvatureReport rep = riemann_curvature(w.field, p, curv);
      dev = std::max(dev, std::abs(random_plane_k(rep) + 1.0));
    }
    rpt.add(checked("sectional-warped-k-neg", "Eq(31)", dev, cfg.tol_second,
                    "K = k = -1 on every sampled plane of the hyperbolic model"));
  }

  {
    const MetricField flat = flat_metric(4);
    const std::vector<Vec> fpts = draw_points(flat.sample, 5, rng);
    double dev = 0.0;
    for (const Vec& p : fpts) {
      const CurvatureReport rep = riemann_curvature(flat, p, curv);
      for (double r : rep.riemann) dev = std::max(dev, std::abs(r));
      dev = std::max(dev, rep.ricci.cwiseAbs().maxCoeff());
    }
    rpt.add(checked("flat-curvature-zero", "flat-space control", dev,
                    cfg.tol_second, ""));
  }

  double dev_bianchi = 0.0, dev_compat = 0.0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    dev_bianchi = std::max(dev_bianchi, first_bianchi_residual(reps[i]));
    dev_compat = std::max(dev_compat,
                          metric_compatibility_residual(field, pts[i], pol));
  }
  rpt.add(checked("first-bianchi", "Riemann symmetries", dev_bianchi,
                  cfg.tol_second, ""));
  rpt.add(checked("metric-compatibility", "Levi-Civita connection", dev_compat,
                  cfg.tol_second, ""));
  return rpt;
}

Report run_verify_killing(const RunConfig& cfg) {
  Report rpt = make_report("verify-killing", cfg);
  SampleRng rng(cfg.seed);
  const double R = cfg.radius;
  const StepPolicy pol = cfg.policy();
  const Chart chart = make_chart("static-47-corrected", R);
  const MetricField field = static_model_field(R);
  const std::vector<AmbientGenerator> gens = ambient_generators(chart.target);
  const std::vector<Vec> pts = draw_points(chart.sample, cfg.samples, rng);

  std::vector<VectorFn> fields;
  fields.reserve(gens.size());
  for (const auto& gen : gens) fields.push_back(pulled_back_field(chart, gen, pol));

  for (std::size_t i = 0; i < gens.size(); ++i) {
    double dev = 0.0;
    for (const Vec& p : pts) {
      dev = std::max(dev,
                     killing_residual(field, fields[i], p, pol).cwiseAbs().maxCoeff());
    }
    rpt.add(checked("generator-" + gens[i].name + "-killing", "Eq(50)", dev,
                    cfg.tol_first, ""));
  }

  {
    const int npts = 20;
    const std::vector<Vec> rpts = draw_points(chart.sample, npts, rng);
    Mat G(4 * npts, static_cast<int>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (int i = 0; i < npts; ++i) {
        G.block(4 * i, static_cast<int>(j), 4, 1) =
            fields[j](rpts[static_cast<std::size_t>(i)]);
      }
    }
    Eigen::JacobiSVD<Mat> svd(G);
    const Vec sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
      if (sv[i] > 1e-10 * sv[0]) ++rank;
    }
    rpt.add(checked("generator-rank", "Sec. 3, ten Killing vectors",
                    std::abs(rank - 10.0), 0.0,
                    "singular values of the 10-field sample matrix span " +
                        fmt(sv[sv.size() - 1]) + " to " + fmt(sv[0])));
  }

  {
    const std::vector<Table1Match> audit =
        table1_audit(R, std::min(cfg.samples, 50), rng, pol, cfg.tol_first);
    for (const auto& m : audit) {
      const std::string id = "table1-row-" + std::to_string(m.row);
      const std::string anchor = "Table 1 row " + std::to_string(m.row);
      const std::string gname =
          m.best_generator >= 0
              ? gens[static_cast<std::size_t>(m.best_generator)].name
              : "none";
      if (m.matched) {
        rpt.add(checked(id, anchor, m.single_residual, cfg.tol_first,
                        "raised with the inverse Eq(48) metric; matches " +
                            gname + " with coefficient " + fmt(m.coefficient)));
        continue;
      }
      const std::string aname =
          m.alt_generator >= 0
              ? gens[static_cast<std::size_t>(m.alt_generator)].name
              : "none";
      std::string note = "no single generator matches under Omega = rho (1 - "
                         "rho^2/R^2); closest is " + gname + " (coefficient " +
                         fmt(m.coefficient) + "), span residual " +
                         fmt(m.span_residual);
      if (m.alt_residual <= cfg.tol_first) {
        note += "; reading Omega as sqrt(1 - rho^2/R^2) the row is exactly " +
                fmt(m.alt_coefficient) + " * " + aname + " (residual " +
                fmt(m.alt_residual) + ")";
      } else if (m.alt_generator == m.best_generator &&
                 std::abs(m.alt_residual - m.single_residual) < 1e-12) {
        note += "; the row carries no Omega factor, so the reading is "
                "immaterial";
      } else {
        note += "; under the sqrt(1 - rho^2/R^2) reading the nearest is " +
                aname + " (coefficient " + fmt(m.alt_coefficient) +
                ", residual " + fmt(m.alt_residual) + ")";
      }
      rpt.add(reported(id, anchor, m.single_residual, note));
    }
  }

  const int small = std::min<int>(10, static_cast<int>(pts.size()));
  {
    double dev = 0.0;
    for (const auto& f : fields) {
      for (int i = 0; i < small; ++i) {
        const Mat K = killing_residual(field, f, pts[static_cast<std::size_t>(i)], pol);
        dev = std::max(dev, std::max(std::abs(K(2, 3)), std::abs(K(3, 3))));
      }
    }
    rpt.add(checked("killing-equations-generated", "Sec. 3 Killing equations",
                    dev, cfg.tol_first,
                    "the printed list omits the (theta,phi) and (phi,phi) "
                    "component equations; both hold for all ten fields"));
  }

  for (int eq = 1; eq <= printed_killing_equation_count(); ++eq) {
    double dev = 0.0;
    for (const auto& f : fields) {
      for (int i = 0; i < small; ++i) {
        dev = std::max(dev, printed_killing_equation_residual(
                                eq, R, f, pts[static_cast<std::size_t>(i)], pol));
      }
    }
    std::string note = "matches the equation generated from the connection";
    if (eq == 6) {
      note = "printed coefficient 2 R^-2 Omega u_t; the generated (t,rho) "
             "equation carries 2 rho R^-2 (1 - rho^2/R^2)^-1 u_t";
    } else if (eq == 7) {
      note = "printed term -R^-2 Omega^-1 u_t; the generated (rho,rho) "
             "equation carries -rho R^-2 (1 - rho^2/R^2)^-1 u_rho";
    }
    rpt.add(reported("printed-killing-eq-" + std::to_string(eq),
                     "Sec. 3 Killing equations, line " + std::to_string(eq),
                     dev, note));
  }
  return rpt;
}

Report run_lct(const RunConfig& cfg) {
  Report rpt = make_report("lct", cfg);
  const StepPolicy pol = cfg.policy();
  const int n = 4;
  const std::vector<double> grid = cfg.grid_points();

  {
    const LctResult r = lct_check(-1.0, make_warped(-1.0, n), grid, pol);
    rpt.add(checked("lct-hypothesis-k-neg1", "Theorem 1",
                    std::max(0.0, -r.hypothesis_min_eig), 1e-6,
                    "min eigenvalue of Ric - 3 k g over the grid = " +
                        fmt(r.hypothesis_min_eig)));
    rpt.add(checked("lct-equality-k-neg1", "Eq(16)", r.max_equality_dev,
                    cfg.tol_second,
                    "Delta r vs 3 coth(r) on the k = -1 model"));
    double excess = 0.0;
    for (const auto& row : r.rows) {
      excess = std::max(excess, row.laplacian_numeric - row.laplacian_bound);
    }
    rpt.add(checked("lct-inequality-k-neg1", "Eq(17)", std::max(0.0, excess),
                    cfg.tol_second, ""));
  }

  {
    const LctResult r = lct_check(0.0, make_warped(0.0, n), grid, pol);
    rpt.add(checked("lct-flat-equality", "Eq(16), k = 0", r.max_equality_dev,
                    cfg.tol_second, "Delta r vs 3/r on the k = 0 model"));
  }

  {
    const std::vector<double> sgrid = linspace(0.1, kPi - 0.1, cfg.grid.count);
    const LctResult r = lct_check(-1.0, make_warped(1.0, n), sgrid, pol);
    double min_margin = 0.0;
    bool first = true;
    for (const auto& row : r.rows) {
      const double margin = row.laplacian_bound - row.laplacian_numeric;
      min_margin = first ? margin : std::min(min_margin, margin);
      first = false;
    }
    rpt.add(checked("lct-strict-sphere", "Eq(17)",
                    std::max(0.0, 1e-6 - min_margin), 0.0,
                    "sphere against the k = -1 bound: 3 cot(r) < 3 coth(r) "
                    "strictly on (0, pi - 0.1); minimum margin " +
                        fmt(min_margin) + "; hypothesis min eigenvalue " +
                        fmt(r.hypothesis_min_eig)));
  }

  for (double k : {-1.0, 0.0, 1.0}) {
    const WarpedMetric w = make_warped(k, n);
    const double hi = k > 0.0 ? 0.8 * kPi : 4.0;
    double dev = 0.0;
    for (double r : linspace(0.3, hi, 20)) {
      dev = std::max(dev, bochner_residual(w, r, pol));
    }
    const std::string id = k < 0.0 ? "bochner-k-neg1"
                         : k > 0.0 ? "bochner-k-pos1" : "bochner-k0";
    rpt.add(checked(id, "Eq(22)", dev, 1e-3,
                    "|Hess r|^2 + (Delta r)' + Ric(d_r, d_r) over 20 radii"));
  }

  {
    double dev = 0.0;
    for (double k : {-1.0, 0.0, 1.0}) {
      dev = std::max(dev, comparison_ode_witness(k, n));
    }
    rpt.add(checked("ode-witness", "Eq(26)", dev, 1e-10,
                    "the Eq(26) normalization sqrt(|k|) coth satisfies the "
                    "Riccati equation for all three curvature signs"));
    const double res = comparison_ode_residual(
        -1.0, n, [](double r) { return r; }, [](double) { return 1.0; });
    rpt.add(checked("ode-witness-negative-control", "Eq(25)",
                    std::max(0.0, 1.0 - res), 0.0,
                    "trial phi(r) = r leaves residual " + fmt(res) +
                        ", vs ~1e-15 for the Eq(26) solution"));
  }

  {
    const WarpedMetric w = make_warped(-1.0, n);
    double dev_id = 0.0, dev_rad = 0.0;
    for (double r : grid) {
      dev_id = std::max(dev_id, hessian_identity_dev(w, r, pol));
      dev_rad = std::max(dev_rad, hessian_radial_dev(w, r, pol));
    }
    rpt.add(checked("hessian-identity", "Eq(10)", dev_id, cfg.tol_second,
                    "Hess r = (psi'/psi)(g - dr (x) dr) on the k = -1 model"));
    rpt.add(checked("hessian-radial-zero", "Sec. 2, Hr(d_r, d_r) = 0", dev_rad,
                    cfg.tol_first, ""));
  }

  {
    double dev = 0.0, gap = 0.0;
    for (double k : {-1.0, 0.0, 1.0}) {
      const WarpedMetric w = make_warped(k, n);
      const double hi = k > 0.0 ? 0.8 * kPi : 4.0;
      for (double r : linspace(0.1, hi, 20)) {
        const Vec p = warped_point(n, r);
        const Mat H = hessian_scalar(w.field, [](const Vec& q) { return q[0]; },
                                     p, pol);
        const MetricInverse gi = invert_metric(w.field.components(p));
        const Mat Hup = gi.inv * H;
        const double hess_sq = (Hup * Hup).trace();
        const double lap = Hup.trace();
        dev = std::max(dev, lap * lap / (n - 1) - hess_sq);
        gap = std::max(gap, std::abs(lap * lap / (n - 1) - hess_sq));
      }
    }
    rpt.add(checked("eq23-eigen-bound", "Eq(23)", std::max(0.0, dev), 1e-6,
                    "|Hess r|^2 >= (Delta r)^2/(n-1); equality on the model "
                    "spaces (max equality gap " + fmt(gap) + ")"));
  }

  {
    const double k = -4.0;
    double dev = 0.0;
    for (double r : linspace(0.25, 3.0, 20)) {
      const double eq16 = (n - 1) * std::cosh(std::sqrt(-k) * r) /
                          std::sinh(std::sqrt(-k) * r) / std::sqrt(-k);
      dev = std::max(dev, std::abs(eq16 - model_laplacian_r(k, n, r)));
    }
    rpt.add(reported("eq16-eq26-normalization", "Eq(16)", dev,
                     "Eq(16) prints the prefactor 1/sqrt(-k) on coth; the "
                     "Riccati solution Eq(26) and the model Laplacian carry "
                     "sqrt(-k). The two readings agree only at k = -1; the "
                     "deviation here is taken at k = -4, where they differ "
                     "by the factor |k| = 4"));
  }
  return rpt;
}

Report run_beltrami(const RunConfig& cfg) {
  Report rpt = make_report("beltrami", cfg);
  SampleRng rng(cfg.seed);
  const double R = cfg.radius;
  const StepPolicy pol = cfg.policy();

  auto constraint_anchor = [](const std::string& name) -> std::string {
    if (name == "schrodinger-40") return "Eq(39)-(40)";
    if (name == "schrodinger-43") return "Eq(43)";
    if (name == "static-47-corrected") return "Eq(47)";
    if (name == "sphere-polar") return "Eq(32)";
    if (name == "hyperboloid-polar") return "Eq(37)";
    if (name == "beltrami") return "Eq(51)-(52)";
    return "Eq(47)";
  };
  auto closed_anchor = [](const std::string& name) -> std::string {
    if (name == "schrodinger-40") return "Eq(40) pullback";
    if (name == "schrodinger-43") return "Eq(43) pullback";
    if (name == "static-47-corrected") return "Eq(48)";
    if (name == "sphere-polar") return "Sec. 2.1 g_s";
    if (name == "hyperboloid-polar") return "Sec. 2.2 g_h";
    if (name == "beltrami") return "Eq(54) corrected";
    return name;
  };
  auto claim_note = [](const std::string& id) -> std::string {
    if (id == "eq41-as-printed") {
      return "printed dt coefficient R^2; the Eq(40) pullback carries 1 "
             "(the deviation scales with |R^2 - 1| and vanishes at R = 1)";
    }
    if (id == "gh-expanded-line") {
      return "dr coefficient 1 + 1/(1 - R^2/r^2) vs the pullback "
             "1/(1 - r^2/R^2); at r = 2R they give 7/3 vs -1/3";
    }
    if (id == "gh-k-coefficient") {
      return "dr coefficient (2 - 1/(k r^2))/(1 - k r^2) with k = 1/R^2 "
             "disagrees with both the pullback and the expanded line";
    }
    if (id == "eq54-as-printed") {
      return "printed bracket eta/D^2 + 3 x_a x_b/(R^2 D^4); expanding "
             "J^T Sigma J gives -x_a x_b/(R^2 D^4)";
    }
    return "";
  };

  std::vector<Vec> beltrami_pts;
  for (const std::string& name : chart_names()) {
    const Chart c = make_chart(name, R);
    const std::vector<Vec> pts = draw_points(c.sample, cfg.samples, rng);
    if (name == "beltrami") beltrami_pts = pts;

    if (c.constraint_asserted) {
      double dev = 0.0;
      for (const Vec& p : pts) {
        dev = std::max(dev, std::abs(constraint_residual(c.target, embed(c, p))));
      }
      rpt.add(checked("constraint-" + name, constraint_anchor(name), dev,
                      1e-12 * R * R, ""));
    } else {
      double dev = 0.0;
      for (const Vec& p : pts) {
        const Vec xi = embed(c, p);
        const double lhs = flat_inner(c.target.sig, xi, xi);
        const double rho = p[1];
        dev = std::max(dev, std::abs(lhs - (2.0 * rho * rho - R * R)));
      }
      rpt.add(reported("constraint-" + name, "Eq(47)", dev,
                       "the printed parametrization satisfies -xi_0^2 + |x|^2 "
                       "+ xi_4^2 = 2 rho^2 - R^2 rather than R^2 (deviation "
                       "measured against that reading); exchanging sinh and "
                       "cosh between xi_0 and xi_4 restores the constraint"));
    }

    if (c.closed_form_metric) {
      double dev = 0.0;
      for (const Vec& p : pts) {
        dev = std::max(dev, (pullback_metric(c, p, pol) -
                             (*c.closed_form_metric)(p)).cwiseAbs().maxCoeff());
      }
      rpt.add(checked("closed-form-" + name, closed_anchor(name), dev,
                      cfg.tol_first, ""));
    }

    if (c.analytic_jacobian) {
      double dev = 0.0;
      for (const Vec& p : pts) {
        dev = std::max(dev, (jacobian_fd(c, p, pol) -
                             (*c.analytic_jacobian)(p)).cwiseAbs().maxCoeff());
      }
      rpt.add(checked("jacobian-fd-" + name,
                      name == "beltrami" ? "Eq(53)" : "Eq(47) Jacobian", dev,
                      1e-8, ""));
    }

    for (const MetricClaim& claim : printed_metric_claims(name, R)) {
      double dev = 0.0;
      for (const Vec& p : pts) {
        dev = std::max(dev, (claim.form(p) -
                             pullback_metric(c, p, pol)).cwiseAbs().maxCoeff());
      }
      rpt.add(reported(claim.id, claim.anchor, dev, claim_note(claim.id)));
    }
  }

  {
    const Chart c = make_chart("beltrami", R);
    double dev = 0.0;
    for (const Vec& p : beltrami_pts) {
      dev = std::max(dev, (beltrami_printed_jacobian(p, R) -
                           jacobian_fd(c, p, pol)).cwiseAbs().maxCoeff());
    }
    rpt.add(reported("eq53-as-printed", "Eq(53)", dev,
                     "second term printed as +x_a x^nu/(R^2 D^3); "
                     "differentiating xi^nu = x^nu/D gives the minus sign"));

    double dev_rt = 0.0;
    for (const Vec& p : beltrami_pts) {
      dev_rt = std::max(dev_rt, (beltrami_project(beltrami_lift(p, R), R) - p)
                                    .cwiseAbs().maxCoeff());
    }
    rpt.add(checked("roundtrip-beltrami", "Sec. 4 Beltrami map", dev_rt, 1e-12,
                    "lift to the hyperboloid and project back"));

    const Vec origin = Vec::Zero(4);
    Mat eta = Mat::Identity(4, 4);
    eta(0, 0) = -1.0;
    const double dev_origin =
        (pullback_metric(c, origin, pol) - eta).cwiseAbs().maxCoeff();
    rpt.add(checked("pullback-origin-minkowski", "Sec. 4, South-pole tangent",
                    dev_origin, 1e-12, "g(0) = diag(-1, 1, 1, 1)"));
  }

  rpt.add(checked("substitution-44", "Eq(44)",
                  substitution_44_max_dev(R, cfg.samples, rng), cfg.tol_first,
                  "eta = R t, rho = R sin chi lands the printed band metric "
                  "on Eq(45) at every R"));

  rpt.add(checked("eq36-polar-ode", "Eq(36)",
                  polar_angle_ode_max_dev(1.0 / (R * R), 0.1 * R, 4.0 * R, 2000),
                  cfg.tol_second,
                  "d zeta/d r = sin(zeta)/r integrated onto "
                  "cos zeta = (1 - k r^2)/(1 + k r^2)"));
  return rpt;
}

Report run_geodesic(const RunConfig& cfg) {
  Report rpt = make_report("geodesic", cfg);
  SampleRng rng(cfg.seed);
  const double R = cfg.radius;
  // Wider domain margin than the default chart: the trajectory terminates
  // before the coordinate horizon, where Gamma * v stiffens like
  // (1 - rho^2/R^2)^-2 and the fixed-step integrator would lose the 1e-8
  // drift budget.
  const Chart chart = make_chart(cfg.chart, R, 0.1);
  const MetricField field = metric_from_chart(chart, cfg.policy());
  const int m = chart.dim;

  GeodesicState s0;
  if (cfg.state.empty()) {
    s0.x = chart.sample(rng);
    s0.v = Vec(m);
    for (int i = 0; i < m; ++i) s0.v[i] = rng.uniform(-0.5, 0.5);
  } else {
    if (static_cast<int>(cfg.state.size()) != 2 * m) {
      throw ConfigInvalid("geodesic state needs " + std::to_string(2 * m) +
                          " values for chart '" + chart.name + "'");
    }
    s0.x = Vec(m);
    s0.v = Vec(m);
    for (int i = 0; i < m; ++i) {
      s0.x[i] = cfg.state[static_cast<std::size_t>(i)];
      s0.v[i] = cfg.state[static_cast<std::size_t>(m + i)];
    }
  }

  // Integration always uses extrapolated stencils; the richardson flag
  // governs only the verification comparisons.
  StepPolicy ipol = cfg.policy();
  ipol.richardson = true;
  const Trajectory tr = integrate(field, s0, cfg.tau_end, cfg.dt, ipol);

  const std::vector<AmbientGenerator> gens = ambient_generators(chart.target);
  std::vector<VectorFn> kfields;
  kfields.reserve(gens.size());
  for (const auto& gen : gens) kfields.push_back(pulled_back_field(chart, gen, ipol));

  rpt.add(checked("norm-drift", "geodesic flow, g(v,v) conservation",
                  norm_drift(field, tr), cfg.tol_integrator,
                  "dt = " + fmt(cfg.dt) + ", " +
                      std::to_string(tr.samples.size()) + " samples"));

  double dev_q = 0.0;
  for (const auto& kf : kfields) {
    std::vector<double> series;
    series.reserve(tr.samples.size());
    for (const auto& s : tr.samples) {
      series.push_back(conserved_charge(field, kf, s));
    }
    dev_q = std::max(dev_q, series_drift(series));
  }
  rpt.add(checked("charge-drift-max", "Eq(50) conserved charges", dev_q,
                  cfg.tol_integrator,
                  std::to_string(gens.size()) + " plane-generator charges"));

  const double tau_last = tr.samples.back().tau;
  rpt.add(reported("boundary-status", "domain margin", tau_last,
                   tr.status == TrajectoryStatus::BoundaryHit
                       ? "boundary hit after tau = " + fmt(tau_last) +
                             "; drift measured over the integrated span"
                       : "completed at tau = " + fmt(tau_last)));

  if (!cfg.traj.empty()) {
    std::ofstream os(cfg.traj);
    if (!os) throw ConfigInvalid("trajectory path not writable: " + cfg.traj);
    write_trajectory_csv(os, field, tr, kfields);
  }
  return rpt;
}

}  // namespace dsgeo
