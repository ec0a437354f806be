#include "szego/profile_kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <unordered_map>

#include "profile_detail.hpp"

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

void require_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be positive");
}

void require_profile(const WeightSpec& spec) {
  if (!spec.is_profile()) throw UnsupportedWeight("profile kernel needs a profile weight, got " + spec.to_string());
}

// p'(x) without the p'' singularity check.
double profile_slope(const WeightSpec& spec, double x) {
  if (spec.family() == WeightFamily::GaussianProfile) return x;
  return std::copysign(std::pow(std::abs(x), spec.alpha() - 1.0), x);
}

}  // namespace

namespace detail {

double half_width_for_drop(const std::function<double(double)>& drop) {
  double h = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double d = drop(h);
    if (!std::isfinite(d) || d > 2.0) {
      h *= 0.5;
    } else if (d < 0.5) {
      h *= 2.0;
    } else {
      return h;
    }
    if (h < 1e-150 || h > 1e150) break;
  }
  return std::clamp(h, 1e-150, 1e150);
}

QuadConfig inner_config(const QuadConfig& cfg) {
  QuadConfig inner = cfg;
  inner.abs_tol = 1e-200;  // the peak is normalized to 1; only rel_tol matters
  inner.rel_tol = std::max(cfg.rel_tol * 1e-2, 1e-14);
  return inner;
}

BergmanOuter bergman_profile_scaled(const WeightSpec& spec, double tau, ComplexValue z, ComplexValue w,
                                    const QuadConfig& cfg, double log_offset) {
  const ComplexValue zeta = z + std::conj(w);
  const double x = zeta.real();
  const QuadConfig inner_cfg = inner_config(cfg);

  // Outer log-magnitude, approximated with the closed conjugate for the hint.
  auto approx_log = [&](double eta) { return tau * eta * x - 2.0 * tau * young_conjugate_closed(spec, eta); };
  const double center = profile_slope(spec, 0.5 * x);
  const double peak_log = approx_log(center);
  const double half_width = half_width_for_drop([&](double h) {
    return std::max(peak_log - approx_log(center + h), peak_log - approx_log(center - h));
  });

  const LogIntegral at_center = log_inner_integral(spec, tau, center, inner_cfg);
  const double shift = tau * center * x - at_center.value;

  std::unordered_map<std::uint64_t, LogIntegral> memo;
  long inner_evals = at_center.n_evals;
  double worst_log_err = at_center.abs_err;
  auto integrand = [&](double eta) -> ComplexValue {
    const auto key = std::bit_cast<std::uint64_t>(eta);
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, log_inner_integral(spec, tau, eta, inner_cfg)).first;
      inner_evals += it->second.n_evals;
      worst_log_err = std::max(worst_log_err, it->second.abs_err);
    }
    return std::exp(tau * eta * zeta - it->second.value - shift);
  };

  const double log_prefactor = std::log(tau / (2.0 * kPi)) + shift - log_offset;
  QuadConfig outer_cfg = cfg;
  outer_cfg.abs_tol = std::clamp(cfg.abs_tol * std::exp(-log_prefactor), 1e-300, 0.5);

  EvalResult outer;
  try {
    outer = integrate_real_line(integrand, outer_cfg, WindowHint{center, half_width});
  } catch (const TruncationError& e) {
    throw ConvergenceError(std::string("Bergman outer integrand does not decay: ") + e.what());
  }
  const double scale = std::exp(log_prefactor);
  BergmanOuter out;
  out.value = scale * outer.value;
  out.abs_err = scale * (outer.abs_err_estimate + worst_log_err * std::abs(outer.value));
  out.n_evals = outer.n_evals + inner_evals;
  return out;
}

}  // namespace detail

LogIntegral log_inner_integral(const WeightSpec& spec, double tau, double eta, const QuadConfig& cfg) {
  require_profile(spec);
  require_tau(tau);
  if (!std::isfinite(eta)) throw DomainError("eta must be finite");

  const double peak_r = std::copysign(inverse_derivative(spec, eta), eta);
  const double peak = peak_r * eta - eval_profile(spec, peak_r);
  auto exponent = [&](double r) { return 2.0 * tau * (r * eta - eval_profile(spec, r) - peak); };
  const double half_width = detail::half_width_for_drop(
      [&](double h) { return -std::min(exponent(peak_r + h), exponent(peak_r - h)); });

  auto integrand = [&](double r) -> ComplexValue { return std::exp(exponent(r)); };
  const EvalResult j = integrate_real_line(integrand, cfg, WindowHint{peak_r, half_width});
  const double value = j.value.real();
  if (!(value > 0.0)) throw ConvergenceError("inner integral is not positive");
  return LogIntegral{2.0 * tau * peak + std::log(value), j.abs_err_estimate / value, j.n_evals};
}

EvalResult inner_integral(const WeightSpec& spec, double tau, double eta, const QuadConfig& cfg) {
  const LogIntegral log_i = log_inner_integral(spec, tau, eta, cfg);
  const double value = std::exp(log_i.value);
  if (!std::isfinite(value)) {
    throw ConvergenceError("inner integral overflows double precision; use effective_conjugate");
  }
  return EvalResult{ComplexValue(value, 0.0), value * std::expm1(log_i.abs_err), "inner-laplace", log_i.n_evals};
}

double effective_conjugate(const WeightSpec& spec, double tau, double eta, const QuadConfig& cfg) {
  return log_inner_integral(spec, tau, eta, cfg).value / (2.0 * tau);
}

EvalResult bergman_profile(const WeightSpec& spec, double tau, ComplexValue z, ComplexValue w,
                           const QuadConfig& cfg) {
  require_profile(spec);
  require_tau(tau);
  cfg.validate();
  const detail::BergmanOuter r = detail::bergman_profile_scaled(spec, tau, z, w, cfg, 0.0);
  return EvalResult{r.value, r.abs_err, "profile-quadrature", r.n_evals};
}

ComplexValue bergman_gaussian_closed(double tau, ComplexValue z, ComplexValue w) {
  require_tau(tau);
  const ComplexValue zeta = z + std::conj(w);
  return tau / (2.0 * kPi) * std::exp(0.25 * tau * zeta * zeta);
}

double profile_laplace_decay_rate(const WeightSpec& spec, ComplexValue z, ComplexValue w) {
  require_profile(spec);
  const double mean = 0.5 * (z.real() + w.real());
  return eval_profile(spec, z.real()) + eval_profile(spec, w.real()) - 2.0 * eval_profile(spec, mean);
}

EvalResult szego_profile(const WeightSpec& spec, const BoundaryPoint& p1, const BoundaryPoint& p2,
                         const QuadConfig& cfg) {
  require_profile(spec);
  cfg.validate();
  const double rate = profile_laplace_decay_rate(spec, p1.z, p2.z);
  if (rate < damping_floor(cfg)) {
    throw NearSingular("real damping exponent vanishes (Re z = Re w); tau integrand is undamped");
  }
  const double damping = eval_weight(spec, p1.z) + eval_weight(spec, p2.z);
  const double frequency = p2.t - p1.t;
  const QuadConfig bergman_cfg = cfg.tightened(1e-2);

  long evals = 0;
  double bergman_err = 0.0;
  auto integrand = [&](double tau) -> ComplexValue {
    if (tau == 0.0) return {0.0, 0.0};
    const detail::BergmanOuter k = detail::bergman_profile_scaled(spec, tau, p1.z, p2.z, bergman_cfg, tau * damping);
    evals += k.n_evals;
    bergman_err = std::max(bergman_err, k.abs_err);
    return k.value * std::polar(1.0, -tau * frequency);
  };

  // The tau window starts at log(1/abs_tol) / rate and is confirmed by doubling.
  const double tau_max = std::log(1.0 / cfg.abs_tol) / rate;
  EvalResult out = integrate_half_line(integrand, cfg, tau_max / 8.0);
  out.abs_err_estimate += bergman_err * tau_max;
  out.n_evals += evals;
  out.method = "profile-triple";
  return out;
}

ComplexValue gaussian_szego_expression(ComplexValue z, ComplexValue w, ComplexValue u) {
  const ComplexValue zeta = z + std::conj(w);
  const double zr = 2.0 * z.real();
  const double wr = 2.0 * w.real();
  return 0.25 * zeta * zeta - 0.125 * zr * zr - 0.125 * wr * wr - ComplexValue(0.0, 1.0) * u;
}

ComplexValue szego_gaussian_closed(const BoundaryPoint& p1, const BoundaryPoint& p2) {
  const ComplexValue e = gaussian_szego_expression(p1.z, p2.z, ComplexValue(p2.t - p1.t, 0.0));
  const ComplexValue zeta = p1.z + std::conj(p2.z);
  const double scale = 0.25 * std::norm(zeta) + 0.5 * (p1.z.real() * p1.z.real() + p2.z.real() * p2.z.real()) +
                       std::abs(p2.t - p1.t);
  if (std::abs(e) <= 1e-12 * scale || std::abs(e) < 1e-300) {
    throw SingularPoint("boundary diagonal: Gaussian Szego expression vanishes");
  }
  return 1.0 / (2.0 * kPi * e * e);
}

}  // namespace szego
