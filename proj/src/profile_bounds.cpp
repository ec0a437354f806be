#include "szego/profile_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "szego/profile_kernels.hpp"

namespace szego {

namespace {

void require_power_profile(const WeightSpec& spec) {
  if (!spec.is_profile()) throw UnsupportedWeight("bounds need a profile power weight, got " + spec.to_string());
}

double least_squares_slope(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const double mx = x.mean();
  const double my = y.mean();
  const double var = (x.array() - mx).square().sum();
  if (var == 0.0) return 0.0;
  return ((x.array() - mx) * (y.array() - my)).sum() / var;
}

// Slopes of gap along increasing |eta| at each end of the grid that points
// away from the origin. `sign` flips the test for lower bounds.
bool outward_trend_ok(const Eigen::VectorXd& grid, const Eigen::VectorXd& gap, double sign) {
  const Eigen::Index n = grid.size();
  if (n < 3 || gap.size() != n) throw DomainError("bounds check needs at least 3 matching grid points");
  if (!gap.allFinite()) return false;

  const Eigen::Index tail = std::max<Eigen::Index>(3, static_cast<Eigen::Index>(std::ceil(0.1 * n)));
  const double span = std::max(1.0, grid.maxCoeff() - grid.minCoeff());
  const double slack = 1e-6 * std::max(1.0, gap.cwiseAbs().maxCoeff()) / span;

  if (grid(n - 1) > 0.0) {
    const double slope = least_squares_slope(grid.tail(tail), gap.tail(tail));
    if (sign * slope > slack) return false;
  }
  if (grid(0) < 0.0) {
    const double slope = -least_squares_slope(grid.head(tail), gap.head(tail));
    if (sign * slope > slack) return false;
  }
  return true;
}

}  // namespace

Eigen::VectorXd linear_grid(double lo, double hi, Eigen::Index count) {
  if (count < 2) throw DomainError("grid needs at least two points");
  return Eigen::VectorXd::LinSpaced(count, lo, hi);
}

bool gap_bounded_above(const Eigen::VectorXd& grid, const Eigen::VectorXd& gap) {
  return outward_trend_ok(grid, gap, 1.0);
}

bool gap_bounded_below(const Eigen::VectorXd& grid, const Eigen::VectorXd& gap) {
  return outward_trend_ok(grid, gap, -1.0);
}

BoundsReport sandwich_bounds_check(const WeightSpec& spec, double tau, double lambda,
                                   const Eigen::VectorXd& eta_grid, const QuadConfig& cfg) {
  require_power_profile(spec);
  if (!(tau > 0.0)) throw DomainError("tau must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
  cfg.validate();

  const WeightSpec dual = conjugate_weight(spec);
  const Eigen::Index n = eta_grid.size();
  BoundsReport report;
  report.lambda = lambda;
  report.tau = tau;
  report.eta_grid = eta_grid;
  report.upper_log_gap.resize(n);
  report.lower_log_gap.resize(n);
  report.dual_upper_log_gap.resize(n);
  report.dual_lower_log_gap.resize(n);

  for (Eigen::Index i = 0; i < n; ++i) {
    const double eta = eta_grid(i);
    const double log_i = log_inner_integral(spec, tau, eta, cfg).value;
    report.upper_log_gap(i) = log_i - 2.0 * tau * young_conjugate_closed(spec, lambda * eta);
    report.lower_log_gap(i) = log_i - 2.0 * tau * young_conjugate_closed(spec, eta / lambda);

    // Roles swapped: integrate against p*, compare with p = (p*)*.
    const double r = eta;
    const double log_dual = log_inner_integral(dual, tau, r, cfg).value;
    report.dual_upper_log_gap(i) = log_dual - 2.0 * tau * young_conjugate_closed(dual, lambda * r);
    report.dual_lower_log_gap(i) = log_dual - 2.0 * tau * young_conjugate_closed(dual, r / lambda);
  }

  report.upper_bounded = gap_bounded_above(eta_grid, report.upper_log_gap);
  report.lower_bounded = gap_bounded_below(eta_grid, report.lower_log_gap);
  report.dual_upper_bounded = gap_bounded_above(eta_grid, report.dual_upper_log_gap);
  report.dual_lower_bounded = gap_bounded_below(eta_grid, report.dual_lower_log_gap);
  report.log_upper_constant = report.upper_log_gap.maxCoeff();
  report.log_lower_constant = report.lower_log_gap.minCoeff();
  return report;
}

AsymptoticsReport laplace_asymptotic(const WeightSpec& spec, double eta, const Eigen::VectorXd& tau_grid,
                                     const QuadConfig& cfg, double tolerance) {
  require_power_profile(spec);
  if (spec.alpha() < 2.0) throw DomainError("Laplace asymptotics need alpha >= 2 (finite p'' at the maximizer)");
  const double mu = inverse_derivative(spec, eta);
  const double curvature = weight_derivatives(spec, mu).second;
  if (!(curvature > 0.0) || !std::isfinite(curvature)) {
    throw DomainError("degenerate maximizer: p''(mu(eta)) is zero or singular");
  }
  constexpr double kPi = std::numbers::pi;

  AsymptoticsReport report;
  report.tau_grid = tau_grid;
  report.tolerance = tolerance;
  report.ratios.resize(tau_grid.size());
  report.printed_ratios.resize(tau_grid.size());
  for (Eigen::Index i = 0; i < tau_grid.size(); ++i) {
    const double tau = tau_grid(i);
    const double log_i = log_inner_integral(spec, tau, eta, cfg).value;
    const double exponent = 2.0 * tau * young_conjugate_closed(spec, eta);
    report.ratios(i) = std::exp(log_i - exponent - 0.5 * std::log(kPi / (tau * curvature)));
    report.printed_ratios(i) = std::exp(log_i - exponent - 0.5 * std::log(tau * curvature / (2.0 * kPi)));
  }

  constexpr double kSlack = 1e-9;
  bool monotone = true;
  for (Eigen::Index i = 1; i < tau_grid.size(); ++i) {
    if (std::abs(report.ratios(i) - 1.0) > std::abs(report.ratios(i - 1) - 1.0) + kSlack) monotone = false;
  }
  const bool positive = (report.ratios.array() > 0.0).all();
  const bool final_ok = tau_grid.size() > 0 && std::abs(report.ratios(tau_grid.size() - 1) - 1.0) <= tolerance;
  report.converged = positive && monotone && final_ok;
  return report;
}

double maximizer_shift_gap(const WeightSpec& spec, double tau, double lambda, double eta) {
  require_power_profile(spec);
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  const double e = std::abs(eta);
  const double mu_shifted = inverse_derivative(spec, e) + 1.0;
  const double mu_scaled = inverse_derivative(spec, lambda * e);
  const double lhs = e * mu_shifted - eval_profile(spec, mu_shifted);
  const double rhs = lambda * e * mu_scaled - eval_profile(spec, mu_scaled);
  return 2.0 * tau * (lhs - rhs);
}

double maximizer_shift_gap_minimum(const WeightSpec& spec, double tau, double lambda, double eta_max,
                                   Eigen::Index count) {
  const Eigen::VectorXd grid = linear_grid(0.0, eta_max, count);
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    best = std::min(best, maximizer_shift_gap(spec, tau, lambda, grid(i)));
  }
  return best;
}

bool duality_finiteness_criterion(double tau, double tau0, double tau1) {
  if (!(0.0 < tau0 && tau0 < tau && tau < tau1)) {
    throw DomainError("duality criterion needs 0 < tau0 < tau < tau1");
  }
  Eigen::Matrix2d form;
  form << 0.5 * tau - tau1, 0.5 * tau, 0.5 * tau, 0.5 * tau - tau0;
  const Eigen::LLT<Eigen::Matrix2d> llt(-form);
  return llt.info() == Eigen::Success;
}

EvalResult duality_marginal_integral(double tau, double tau0, double tau1, const QuadConfig& cfg) {
  if (!(0.0 < tau0 && tau0 < tau && tau < tau1)) {
    throw DomainError("duality marginal needs 0 < tau0 < tau < tau1");
  }
  long evals = 0;
  auto outer = [&](double x) -> ComplexValue {
    auto inner = [&](double u) -> ComplexValue {
      const double s = x + u;
      return std::exp(0.5 * tau * s * s - tau1 * x * x - tau0 * u * u);
    };
    const EvalResult r = integrate_real_line(inner, cfg);
    evals += r.n_evals;
    return r.value;
  };
  EvalResult out = integrate_real_line(outer, cfg);
  out.n_evals += evals;
  out.method = "duality-marginal";
  return out;
}

}  // namespace szego
