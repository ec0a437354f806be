#include "szego/radial_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularGeometricTol = 1e-12;
constexpr double kSingularATol = 1e-300;

void require_positive(double alpha, double tau) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be positive");
}

// sum_k c_k(alpha, tau) x^k exp(-log_scale - i tau freq), x = |x| e^{i theta}.
// Terms are assembled in log form so large tau or |x| cannot overflow.
EvalResult scaled_series(double alpha, double tau, ComplexValue x, double log_scale, double phase,
                         const QuadConfig& cfg) {
  const double rho = std::abs(x);
  const double theta = std::arg(x);
  if (rho == 0.0) {
    const double mag = std::exp(log_series_coefficient(alpha, tau, 0) - log_scale);
    return EvalResult{std::polar(mag, phase), 0.0, "series/geometric-tail", 1};
  }
  const double log_rho = std::log(rho);
  auto term = [&](long k) {
    const double kd = static_cast<double>(k);
    const double mag = std::exp(log_series_coefficient(alpha, tau, k) + kd * log_rho - log_scale);
    return std::polar(mag, kd * theta + phase);
  };
  return sum_series(term, cfg);
}

// Principal-branch complex power exp(e log base).
ComplexValue principal_pow(ComplexValue base, double exponent) {
  return std::exp(exponent * std::log(base));
}

}  // namespace

HalfPlaneParam HalfPlaneParam::from_points(double alpha, const BoundaryPoint& p1, const BoundaryPoint& p2) {
  const double damping = std::pow(std::abs(p1.z), alpha) + std::pow(std::abs(p2.z), alpha);
  return HalfPlaneParam{ComplexValue(0.5 * damping, 0.5 * (p2.t - p1.t))};
}

double series_prefactor(double alpha) { return alpha / (2.0 * kPi); }
double szego_radial_prefactor() { return 1.0 / (2.0 * kPi); }
double printed_series_prefactor(double alpha) { return 2.0 * kPi / alpha; }
double printed_szego_prefactor(double alpha) { return 2.0 * kPi / (alpha * alpha); }

double log_series_coefficient(double alpha, double tau, long k) {
  require_positive(alpha, tau);
  if (k < 0) throw DomainError("series index must be non-negative");
  const double order = 2.0 * static_cast<double>(k + 1) / alpha;
  return std::log(series_prefactor(alpha)) + order * std::log(2.0 * tau) - log_gamma(order);
}

double series_coefficient(double alpha, double tau, long k) {
  return std::exp(log_series_coefficient(alpha, tau, k));
}

EvalResult bergman_radial_series(double alpha, double tau, ComplexValue z, ComplexValue w,
                                 const QuadConfig& cfg) {
  require_positive(alpha, tau);
  EvalResult out = scaled_series(alpha, tau, z * std::conj(w), 0.0, 0.0, cfg.tightened(1e-3));
  out.method = "radial-series";
  return out;
}

double radial_laplace_decay_rate(double alpha, ComplexValue z, ComplexValue w) {
  const double damping = std::pow(std::abs(z), alpha) + std::pow(std::abs(w), alpha);
  const ComplexValue x = z * std::conj(w);
  const double half_angle = 0.5 * alpha * std::abs(std::arg(x));
  const double growth = (half_angle >= 0.5 * kPi) ? 0.0 : std::cos(half_angle);
  return damping - 2.0 * std::pow(std::abs(x), 0.5 * alpha) * growth;
}

EvalResult szego_radial_closed(double alpha, const BoundaryPoint& p1, const BoundaryPoint& p2) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  const ComplexValue A = HalfPlaneParam::from_points(alpha, p1, p2).A;
  if (std::abs(A) < kSingularATol) throw SingularPoint("A = 0: both points at the origin with s = t");

  const ComplexValue x = p1.z * std::conj(p2.z) * principal_pow(A, -2.0 / alpha);
  const ComplexValue gap = 1.0 - x;
  if (std::abs(gap) < kSingularGeometricTol) {
    throw SingularPoint("boundary diagonal: z conj(w) A^{-2/alpha} = 1");
  }
  const ComplexValue value = szego_radial_prefactor() * principal_pow(A, -1.0 - 2.0 / alpha) / (gap * gap);

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double condition = 10.0 + 2.0 * std::abs(x) / std::abs(gap);
  return EvalResult{value, kEps * condition * std::abs(value), "radial-closed", 1};
}

EvalResult szego_radial_via_laplace(double alpha, const BoundaryPoint& p1, const BoundaryPoint& p2,
                                    const QuadConfig& cfg) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  cfg.validate();
  const double damping = std::pow(std::abs(p1.z), alpha) + std::pow(std::abs(p2.z), alpha);
  const double floor = damping_floor(cfg);
  if (damping < floor) {
    throw NearSingular("p(z) + p(w) below the damping floor; tau integrand is undamped");
  }
  const double rate = radial_laplace_decay_rate(alpha, p1.z, p2.z);
  if (rate < floor) {
    throw NearSingular("Bergman growth cancels the Laplace damping (boundary diagonal)");
  }

  const ComplexValue x = p1.z * std::conj(p2.z);
  const double frequency = p2.t - p1.t;
  const QuadConfig series_cfg = cfg.tightened(1e-3);
  long series_terms = 0;
  auto integrand = [&](double tau) -> ComplexValue {
    if (tau == 0.0) return {0.0, 0.0};
    EvalResult r = scaled_series(alpha, tau, x, tau * damping, -tau * frequency, series_cfg);
    series_terms += r.n_evals;
    return r.value;
  };
  // Beyond tau_max the summed series is cancellation noise.
  const double log_tol = std::log(1.0 / cfg.abs_tol);
  const double tau_max = (1.25 * log_tol + 10.0) / rate;
  EvalResult out = integrate_interval(integrand, 0.0, tau_max, cfg);
  out.abs_err_estimate += cfg.abs_tol;
  out.method = "radial-laplace";
  out.n_evals += series_terms;
  return out;
}

double gamma_step_identity_check(double alpha, long k, const HalfPlaneParam& param, const QuadConfig& cfg) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (!(param.A.real() > 0.0)) throw DomainError("gamma step needs Re A > 0");
  if (k < 0) throw DomainError("series index must be non-negative");
  const double order = 2.0 * static_cast<double>(k + 1) / alpha;
  const ComplexValue two_a = 2.0 * param.A;

  auto integrand = [&](double tau) -> ComplexValue {
    if (tau == 0.0) return {0.0, 0.0};
    return std::exp(order * std::log(tau) - two_a * tau);
  };
  const EvalResult numeric = integrate_half_line(integrand, cfg, 1.0 / two_a.real());
  const ComplexValue closed = std::exp(log_gamma(order + 1.0) - (order + 1.0) * std::log(two_a));
  return std::abs(numeric.value - closed) / std::abs(closed);
}

}  // namespace szego
