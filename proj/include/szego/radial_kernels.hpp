#pragma once

#include "szego/numerics.hpp"
#include "szego/types.hpp"

// Kernels for the radial weight p(z) = |z|^alpha.
//
// The Bergman kernel of H_tau is the diagonal power series
//   K_tau(z, w) = sum_k c_k(alpha, tau) (z conj(w))^k,   c_k = 1 / m_k,
// where m_k = int_C |z|^{2k} exp(-2 tau |z|^alpha) dlambda(z). Integrating it
// against exp(-tau (p(z) + p(w))) exp(-i tau (s - t)) over tau > 0 gives the
// Szego kernel of {Im z2 > |z1|^alpha}, which sums to the closed form
//   S = (1 / 2 pi) A^{-1 - 2/alpha} (1 - z conj(w) A^{-2/alpha})^{-2},
//   A = (|z|^alpha + |w|^alpha + i (s - t)) / 2.

namespace szego {

/// The half-plane parameter A = (|z|^alpha + |w|^alpha + i(s - t)) / 2.
struct HalfPlaneParam {
  ComplexValue A{0.0, 0.0};

  static HalfPlaneParam from_points(double alpha, const BoundaryPoint& p1, const BoundaryPoint& p2);
};

/// Normalization alpha / (2 pi) of the series coefficients.
double series_prefactor(double alpha);
/// Normalization of the closed Szego kernel, 1 / (2 pi).
double szego_radial_prefactor();
/// The constants as they appear in print, 2 pi / alpha and 2 pi / alpha^2.
/// Reported by the verification suite; never used for evaluation.
double printed_series_prefactor(double alpha);
double printed_szego_prefactor(double alpha);

/// log c_k(alpha, tau).
double log_series_coefficient(double alpha, double tau, long k);
double series_coefficient(double alpha, double tau, long k);

EvalResult bergman_radial_series(double alpha, double tau, ComplexValue z, ComplexValue w,
                                 const QuadConfig& cfg = {});

/// Exponential rate at which K_tau(z, w) exp(-tau (p(z) + p(w))) decays in
/// tau: p(z) + p(w) - 2 |z w|^{alpha/2} max(cos(alpha |arg(z conj w)| / 2), 0).
double radial_laplace_decay_rate(double alpha, ComplexValue z, ComplexValue w);

EvalResult szego_radial_closed(double alpha, const BoundaryPoint& p1, const BoundaryPoint& p2);

/// Quadrature over tau of the Bergman series against the Laplace damping.
EvalResult szego_radial_via_laplace(double alpha, const BoundaryPoint& p1, const BoundaryPoint& p2,
                                    const QuadConfig& cfg = {});

/// Relative discrepancy between int_0^inf tau^b exp(-2 A tau) dtau by
/// quadrature and Gamma(b + 1) (2A)^{-b-1}, with b = 2(k + 1)/alpha.
double gamma_step_identity_check(double alpha, long k, const HalfPlaneParam& param,
                                 const QuadConfig& cfg = QuadConfig{1e-14, 1e-12, 4000, 1e-18});

}  // namespace szego
