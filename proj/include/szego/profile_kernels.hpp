#pragma once

#include "szego/numerics.hpp"
#include "szego/types.hpp"
#include "szego/weights.hpp"

// Kernels for weights that depend on Re z only.
//
// With I(eta, tau) = int_R exp(2 tau (r eta - p(r))) dr the Bergman kernel of
// H_tau is
//   K_tau(z, w) = (tau / 2 pi) int_R exp(tau eta (z + conj w)) / I(eta, tau) deta,
// and the Szego kernel of {Im z2 > p(Re z1)} is its Laplace integral over tau.

namespace szego {

/// log I(eta, tau) with an absolute error estimate on the logarithm.
struct LogIntegral {
  double value = 0.0;
  double abs_err = 0.0;
  long n_evals = 0;
};

/// log of int_R exp(2 tau (r eta - p(r))) dr, integrated around the maximizer
/// r = sign(eta) mu(|eta|) with the peak factored out.
LogIntegral log_inner_integral(const WeightSpec& spec, double tau, double eta, const QuadConfig& cfg = {});

EvalResult inner_integral(const WeightSpec& spec, double tau, double eta, const QuadConfig& cfg = {});

/// wp*(eta) = log I(eta, tau) / (2 tau).
double effective_conjugate(const WeightSpec& spec, double tau, double eta, const QuadConfig& cfg = {});

/// Nested quadrature for K_tau(z, w).
EvalResult bergman_profile(const WeightSpec& spec, double tau, ComplexValue z, ComplexValue w,
                           const QuadConfig& cfg = {});

/// (tau / 2 pi) exp(tau (z + conj w)^2 / 4), the kernel for p(x) = x^2 / 2.
ComplexValue bergman_gaussian_closed(double tau, ComplexValue z, ComplexValue w);

/// p(Re z) + p(Re w) - 2 p(Re(z + conj w) / 2): the exponential rate at which
/// K_tau(z, w) exp(-tau (p(z) + p(w))) is guaranteed to decay in tau.
double profile_laplace_decay_rate(const WeightSpec& spec, ComplexValue z, ComplexValue w);

/// Triple integral over tau, eta and r for S((z, t), (w, s)).
EvalResult szego_profile(const WeightSpec& spec, const BoundaryPoint& p1, const BoundaryPoint& p2,
                         const QuadConfig& cfg = {});

/// The Gaussian-profile quantity
///   (z + conj w)^2 / 4 - (z + conj z)^2 / 8 - (w + conj w)^2 / 8 - i u
/// whose inverse square is 2 pi S; u = s - t may be complex.
ComplexValue gaussian_szego_expression(ComplexValue z, ComplexValue w, ComplexValue u);

/// (1 / 2 pi) gaussian_szego_expression(z, w, s - t)^{-2}.
ComplexValue szego_gaussian_closed(const BoundaryPoint& p1, const BoundaryPoint& p2);

}  // namespace szego
