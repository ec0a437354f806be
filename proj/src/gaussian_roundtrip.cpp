#include "szego/gaussian_roundtrip.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "szego/profile_kernels.hpp"

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kFitTerms = 6;
// Contours t -> t + i kShiftT and s -> s + i kShiftS keep clear of the
// boundary-diagonal pole of S and of the pole of 1 / (p(w) - i s).
constexpr double kShiftS = 0.5;
constexpr double kShiftT = 1.5;
constexpr double kMaxRelativeSpread = 0.05;

double gaussian_profile(ComplexValue z) { return 0.5 * z.real() * z.real(); }

struct FitOutcome {
  ComplexValue limit;
  double spread;
};

// Least-squares fit of F(eps) = sum_j a_j eps^{j/2} to values and
// eps-derivatives; derivative rows are scaled by eps.
ComplexValue hermite_fit(const std::array<double, 3>& eps, const std::array<RegularizedValue, 3>& data, int terms) {
  Eigen::MatrixXcd rows(6, terms);
  Eigen::VectorXcd rhs(6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < terms; ++j) {
      const double p = std::pow(eps[i], 0.5 * j);
      rows(2 * i, j) = p;
      rows(2 * i + 1, j) = 0.5 * j * p;
    }
    rhs(2 * i) = data[i].value;
    rhs(2 * i + 1) = eps[i] * data[i].d_epsilon;
  }
  const Eigen::VectorXcd coeffs = rows.colPivHouseholderQr().solve(rhs);
  return coeffs(0);
}

FitOutcome extrapolate(double tau, ComplexValue z, ComplexValue w, double epsilon, const QuadConfig& cfg,
                       long& evals, double& quad_err) {
  const std::array<double, 3> eps{epsilon, 0.5 * epsilon, 0.25 * epsilon};
  std::array<RegularizedValue, 3> data;
  for (int i = 0; i < 3; ++i) {
    data[i] = regularized_roundtrip(tau, z, w, eps[i], cfg);
    evals += data[i].n_evals;
    quad_err = std::max(quad_err, data[i].abs_err);
  }
  const ComplexValue full = hermite_fit(eps, data, kFitTerms);
  const ComplexValue reduced = hermite_fit(eps, data, kFitTerms - 1);
  return FitOutcome{full, std::abs(full - reduced)};
}

}  // namespace

double roundtrip_prefactor() { return 1.0 / (2.0 * kPi * kPi); }

RegularizedValue regularized_roundtrip(double tau, ComplexValue z, ComplexValue w, double epsilon,
                                       const QuadConfig& cfg) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be positive");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive");
  cfg.validate();

  const ComplexValue I(0.0, 1.0);
  const double a = gaussian_profile(w);
  const QuadConfig inner_cfg = cfg.tightened(1e-2);

  // Outer variable x: s = x + i kShiftS. Inner variable u: s - t = u - i (kShiftT - kShiftS).
  auto integrate_weighted = [&](bool derivative, long& evals, double& err) {
    auto outer = [&](double x) -> ComplexValue {
      const ComplexValue s(x, kShiftS);
      const ComplexValue outer_factor = std::exp(-epsilon * s * s) / (a - I * s);
      auto inner = [&](double u) -> ComplexValue {
        const ComplexValue diff(u, kShiftS - kShiftT);
        const ComplexValue t = s - diff;
        const ComplexValue e = gaussian_szego_expression(z, w, diff);
        ComplexValue g = std::exp(I * tau * diff - epsilon * t * t) / (2.0 * kPi * e * e);
        if (derivative) g *= -(s * s + t * t);
        return g;
      };
      const EvalResult r = integrate_real_line(inner, inner_cfg, WindowHint{0.0, 2.0});
      evals += r.n_evals;
      err = std::max(err, r.abs_err_estimate * std::abs(outer_factor));
      return outer_factor * r.value;
    };
    const EvalResult r = integrate_real_line(outer, cfg, WindowHint{0.0, 1.0 / std::sqrt(epsilon)});
    evals += r.n_evals;
    err = r.abs_err_estimate + err * 2.0 / std::sqrt(epsilon);
    return r.value;
  };

  const double scale = roundtrip_prefactor() * std::exp(tau * (gaussian_profile(z) + a));
  RegularizedValue out;
  double err_v = 0.0;
  double err_d = 0.0;
  out.value = scale * integrate_weighted(false, out.n_evals, err_v);
  out.d_epsilon = scale * integrate_weighted(true, out.n_evals, err_d);
  out.abs_err = scale * err_v;
  return out;
}

EvalResult bergman_from_szego_gaussian(double tau, ComplexValue z, ComplexValue w, double epsilon,
                                       const QuadConfig& cfg) {
  long evals = 0;
  double quad_err = 0.0;
  const FitOutcome fit = extrapolate(tau, z, w, epsilon, cfg, evals, quad_err);
  const double magnitude = std::abs(fit.limit);
  if (!std::isfinite(magnitude) || fit.spread > kMaxRelativeSpread * magnitude) {
    throw ConvergenceError("regularized inverse transform does not stabilize as eps -> 0");
  }
  double err = fit.spread + quad_err;

  if (z != w) {
    const FitOutcome swapped = extrapolate(tau, w, z, epsilon, cfg, evals, quad_err);
    const double hermitian_gap = std::abs(fit.limit - std::conj(swapped.limit));
    if (hermitian_gap > 10.0 * (fit.spread + swapped.spread) + 1e-3 * magnitude) {
      throw ConvergenceError("extrapolated kernel is not Hermitian within tolerance");
    }
    err = std::max(err, hermitian_gap);
  }
  return EvalResult{fit.limit, err, "gaussian-roundtrip", evals};
}

}  // namespace szego
