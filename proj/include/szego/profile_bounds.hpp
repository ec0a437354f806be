#pragma once

#include <Eigen/Dense>

#include "szego/numerics.hpp"
#include "szego/weights.hpp"

namespace szego {

/// Two-sided comparison of log I(eta, tau) with scaled copies of the conjugate.
///
/// upper_log_gap = log I(eta) - 2 tau p*(lambda eta) must stay bounded above,
/// lower_log_gap = log I(eta) - 2 tau p*(eta / lambda) must stay bounded below.
/// The dual_* fields repeat the check for int exp(2 tau (r eta - p*(eta))) deta
/// against p(lambda r) and p(r / lambda).
struct BoundsReport {
  double lambda = 0.0;
  double tau = 0.0;
  Eigen::VectorXd eta_grid;
  Eigen::VectorXd upper_log_gap;
  Eigen::VectorXd lower_log_gap;
  bool upper_bounded = false;
  bool lower_bounded = false;

  Eigen::VectorXd dual_upper_log_gap;
  Eigen::VectorXd dual_lower_log_gap;
  bool dual_upper_bounded = false;
  bool dual_lower_bounded = false;

  // Grid constants: log C = max upper gap, log D = min lower gap.
  double log_upper_constant = 0.0;
  double log_lower_constant = 0.0;
};

struct AsymptoticsReport {
  Eigen::VectorXd tau_grid;
  /// I / [(pi / (tau p''(mu)))^{1/2} exp(2 tau p*(eta))].
  Eigen::VectorXd ratios;
  /// I / [(tau p''(mu) / (2 pi))^{1/2} exp(2 tau p*(eta))], the prefactor as printed.
  Eigen::VectorXd printed_ratios;
  double tolerance = 0.0;
  bool converged = false;
};

/// Uniform grid with `count` points from `lo` to `hi` inclusive.
Eigen::VectorXd linear_grid(double lo, double hi, Eigen::Index count);

BoundsReport sandwich_bounds_check(const WeightSpec& spec, double tau, double lambda,
                                   const Eigen::VectorXd& eta_grid, const QuadConfig& cfg = {});

/// True when `gap` does not trend upward toward the outer ends of `grid`
/// (least-squares slope over the outermost decile on each side).
bool gap_bounded_above(const Eigen::VectorXd& grid, const Eigen::VectorXd& gap);
bool gap_bounded_below(const Eigen::VectorXd& grid, const Eigen::VectorXd& gap);

AsymptoticsReport laplace_asymptotic(const WeightSpec& spec, double eta, const Eigen::VectorXd& tau_grid,
                                     const QuadConfig& cfg = {}, double tolerance = 0.02);

/// 2 tau (eta (mu(eta) + 1) - p(mu(eta) + 1)) - 2 tau (lambda eta mu(lambda eta) - p(mu(lambda eta))),
/// the quantity that must stay bounded below for 0 < lambda < 1.
double maximizer_shift_gap(const WeightSpec& spec, double tau, double lambda, double eta);

/// Minimum of maximizer_shift_gap over a uniform grid on [0, eta_max].
double maximizer_shift_gap_minimum(const WeightSpec& spec, double tau, double lambda, double eta_max,
                                   Eigen::Index count);

/// Negative-definiteness of (tau/2)(x+u)^2 - tau1 x^2 - tau0 u^2, which decides
/// finiteness of the real-direction marginal of
///   int int |K_tau(z,w)|^2 exp(-2 tau1 p(z) - 2 tau0 p(w)) for p = x^2 / 2.
bool duality_finiteness_criterion(double tau, double tau0, double tau1);

/// The marginal int int exp((tau/2)(x+u)^2 - tau1 x^2 - tau0 u^2) dx du by
/// nested quadrature; TruncationError when the integrand does not decay.
EvalResult duality_marginal_integral(double tau, double tau0, double tau1, const QuadConfig& cfg = {});

}  // namespace szego
