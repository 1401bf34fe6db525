#pragma once

#include <cmath>
#include <functional>

#include "dsgeo/ambient.hpp"

namespace dsgeo {

// Central-difference step control. Steps scale with the coordinate magnitude,
// h_i = base * max(1, |x_i|); one optional level of Richardson extrapolation.
// Direct second differences divide by h^2, so they use the wider second_base
// to stay above the roundoff floor.
struct StepPolicy {
  double base = 1e-5;
  double second_base = 1e-4;
  bool richardson = false;

  double step_for(double coord) const {
    return base * std::max(1.0, std::abs(coord));
  }
  double second_step_for(double coord) const {
    return second_base * std::max(1.0, std::abs(coord));
  }
};

namespace detail {

// (f(p + h e_i) - f(p - h e_i)) / (2h), optionally Richardson-extrapolated:
// (4 D_{h/2} - D_h) / 3.
template <typename F>
auto central_difference(const F& f, const Vec& p, int i, const StepPolicy& pol)
    -> decltype(f(p)) {
  const double h = pol.step_for(p[i]);
  Vec pp = p, pm = p;
  pp[i] += h;
  pm[i] -= h;
  auto coarse = ((f(pp) - f(pm)) / (2.0 * h)).eval();
  if (!pol.richardson) return coarse;
  pp[i] = p[i] + 0.5 * h;
  pm[i] = p[i] - 0.5 * h;
  auto fine = ((f(pp) - f(pm)) / h).eval();
  return ((4.0 * fine - coarse) / 3.0).eval();
}

template <typename F>
double central_difference_scalar(const F& f, const Vec& p, int i,
                                 const StepPolicy& pol) {
  const double h = pol.step_for(p[i]);
  Vec pp = p, pm = p;
  pp[i] += h;
  pm[i] -= h;
  const double coarse = (f(pp) - f(pm)) / (2.0 * h);
  if (!pol.richardson) return coarse;
  pp[i] = p[i] + 0.5 * h;
  pm[i] = p[i] - 0.5 * h;
  const double fine = (f(pp) - f(pm)) / h;
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace detail

}  // namespace dsgeo
