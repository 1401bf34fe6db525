#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsgeo/ambient.hpp"
#include "dsgeo/fd.hpp"
#include "dsgeo/rng.hpp"

namespace dsgeo {

// A parametrization of (part of) a quadric. `target` fixes the constraint
// surface; `metric_sig` is the ambient metric used for pullbacks, which for
// the reduced and static model charts is the negated constraint signature
// (the induced metrics are quoted in the mostly-minus convention while the
// constraint keeps the minus on xi_0).
struct Chart {
  std::string name;
  int dim = 0;  // intrinsic dimension m
  Quadric target;
  Signature metric_sig;
  std::function<Vec(const Vec&)> embed_fn;  // R^m -> R^n
  std::function<bool(const Vec&)> domain;
  std::optional<std::function<Mat(const Vec&)>> analytic_jacobian{};  // n x m
  std::optional<std::function<Mat(const Vec&)>> closed_form_metric{};  // m x m
  // When false the embedding does not satisfy the constraint (a printed
  // variant kept for comparison); residuals are reported, never asserted.
  bool constraint_asserted = true;
  std::vector<std::string> coord_names{};
  // Random in-domain point; ranges stay well inside the domain so that
  // finite-difference stencils remain valid. Draw order: one uniform per
  // coordinate, in coordinate order.
  std::function<Vec(SampleRng&)> sample{};
  // Expected eigenvalue-sign counts of the induced metric.
  int metric_positive = -1;
  int metric_negative = -1;
};

// Embeds p, checking dimension and domain membership.
Vec embed(const Chart& c, const Vec& p);

// d xi^A / d x^i by central differences; throws StepTooLarge when a stencil
// point leaves the domain.
Mat jacobian_fd(const Chart& c, const Vec& p, const StepPolicy& pol = {});

// Analytic Jacobian when registered, finite differences otherwise.
Mat jacobian(const Chart& c, const Vec& p, const StepPolicy& pol = {});

// Induced metric J^T diag(metric_sig) J. force_fd bypasses the analytic
// Jacobian so the two routes can be compared.
Mat pullback_metric(const Chart& c, const Vec& p, const StepPolicy& pol = {},
                    bool force_fd = false);

}  // namespace dsgeo
