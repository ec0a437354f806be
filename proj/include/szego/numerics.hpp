#pragma once

#include <cstddef>
#include <functional>

#include "szego/types.hpp"

namespace szego {

using RealIntegrand = std::function<ComplexValue(double)>;
using PolarIntegrand = std::function<ComplexValue(double radius, double angle)>;
using SeriesTerm = std::function<ComplexValue(long k)>;

/// Where an integrand on an unbounded domain carries its mass. The window
/// grows outward from [center - half_width, center + half_width] by doubling.
struct WindowHint {
  double center = 0.0;
  double half_width = 1.0;
};

/// Adaptive Gauss-Kronrod (10/21) quadrature on a finite interval.
EvalResult integrate_interval(const RealIntegrand& f, double a, double b, const QuadConfig& cfg);

/// Integral over R. The window is doubled around `hint` until the outermost
/// shell is negligible (TruncationError if that never happens within the
/// doubling budget), then panels are bisected adaptively (ConvergenceError
/// once max_subdivisions is exhausted).
EvalResult integrate_real_line(const RealIntegrand& f, const QuadConfig& cfg, WindowHint hint = {});

/// Integral over [0, inf); `scale` is the length of the first panel.
EvalResult integrate_half_line(const RealIntegrand& f, const QuadConfig& cfg, double scale = 1.0);

/// Integral over the plane, int_0^inf int_0^{2pi} g(r, theta) r dtheta dr.
/// Angles use the periodic trapezoidal rule with point doubling.
EvalResult integrate_plane_polar(const PolarIntegrand& g, const QuadConfig& cfg, double radial_scale = 1.0);

/// Default number of consecutive non-contracting terms tolerated by sum_series.
inline constexpr std::size_t kSeriesPatience = 100000;

/// Sums term(0) + term(1) + ... until the geometric tail bound built from the
/// last two terms drops below max(abs_tol, rel_tol |sum|).
EvalResult sum_series(const SeriesTerm& term, const QuadConfig& cfg, std::size_t patience = kSeriesPatience);

/// Smallest exponential damping rate accepted for integrals over the Laplace
/// parameter; below it the integrand is treated as undamped (NearSingular).
double damping_floor(const QuadConfig& cfg);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace szego
