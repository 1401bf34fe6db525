#pragma once

#include <functional>
#include <string>

#include "dsgeo/chart.hpp"

namespace dsgeo {

// A coordinate metric as a callable, the common currency of the tensor
// operations. Signature expectations are eigenvalue-sign counts; -1 leaves
// them unchecked.
struct MetricField {
  std::string name;
  int dim = 0;
  std::function<Mat(const Vec&)> components;
  std::function<bool(const Vec&)> domain = [](const Vec&) { return true; };
  int expected_positive = -1;
  int expected_negative = -1;
  std::function<Vec(SampleRng&)> sample;
};

struct MetricInverse {
  Mat inv;
  double condition;  // 1-norm condition estimate
};

// Direct solve with partial pivoting; throws DegenerateMetric when the
// matrix is singular to working precision.
MetricInverse invert_metric(const Mat& g);

// Symmetry, invertibility and (when expectations are set) eigenvalue-sign
// counts at p. Throws on violation.
void validate_metric(const MetricField& g, const Vec& p);

// The chart's induced metric as a MetricField. Uses the registered closed
// form when present (they are separately verified against the pullback),
// otherwise the Jacobian pullback.
MetricField metric_from_chart(const Chart& c, const StepPolicy& pol = {},
                              bool use_closed_form = true);

// Euclidean identity metric on R^dim; sample range [-1, 1]^dim.
MetricField flat_metric(int dim);

}  // namespace dsgeo
