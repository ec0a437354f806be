#pragma once

#include "szego/numerics.hpp"
#include "szego/types.hpp"

// Recovering the Gaussian Bergman kernel from the Gaussian Szego kernel
// through the inverse transform
//   K_tau(z, w) = N e^{tau (p(z) + p(w))} int int S((z,t),(w,s)) e^{i tau (s - t)} / (p(w) - i s) ds dt,
// which converges only in L^2. The integrand is damped by exp(-eps (s^2 + t^2)),
// and the eps -> 0 limit is extrapolated.

namespace szego {

/// Normalization N = 1 / (2 pi^2) of the inverse transform.
double roundtrip_prefactor();

/// The damped double integral at one eps, times N e^{tau (p(z) + p(w))},
/// together with its derivative in eps.
struct RegularizedValue {
  ComplexValue value{0.0, 0.0};
  ComplexValue d_epsilon{0.0, 0.0};
  double abs_err = 0.0;
  long n_evals = 0;
};

RegularizedValue regularized_roundtrip(double tau, ComplexValue z, ComplexValue w, double epsilon,
                                       const QuadConfig& cfg = {});

/// Extrapolates the damped integral over eps, eps/2, eps/4 to eps = 0.
/// For z != w the result is also compared with the conjugate of the swapped
/// evaluation; a mismatch raises ConvergenceError like an unstable fit does.
EvalResult bergman_from_szego_gaussian(double tau, ComplexValue z, ComplexValue w, double epsilon,
                                       const QuadConfig& cfg = {});

}  // namespace szego
