#pragma once

#include <stdexcept>

namespace dsgeo {

// Base class for all toolkit errors.
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible dimensions.
class DimensionMismatch : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Point outside a chart or metric domain.
class OutsideDomain : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// A finite-difference stencil would leave the domain.
class StepTooLarge : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Projective coordinates undefined where the last embedding coordinate vanishes.
class EquatorialSingularity : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Projective lift undefined on or outside the cone 1 + sigma^2/R^2 <= eps.
class ProjectiveCone : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Metric not invertible at the evaluation point.
class DegenerateMetric : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Plane spanned by the given vectors has (numerically) vanishing Gram determinant.
class DegeneratePlane : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Ambient field not tangent to the quadric at the requested point.
class NonTangentField : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Chart Jacobian loses rank at the requested point.
class RankDeficientJacobian : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Integrator step vanished or became non-positive.
class StepUnderflow : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// No chart registered under the requested name.
class UnknownChart : public GeometryError {
public:
  using GeometryError::GeometryError;
};

// Run configuration failed validation.
class ConfigInvalid : public GeometryError {
public:
  using GeometryError::GeometryError;
};

}  // namespace dsgeo
