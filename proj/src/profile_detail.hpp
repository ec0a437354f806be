#pragma once

#include <functional>

#include "szego/profile_kernels.hpp"

namespace szego::detail {

struct BergmanOuter {
  ComplexValue value{0.0, 0.0};
  double abs_err = 0.0;
  long n_evals = 0;
};

/// Smallest h on a doubling/halving ladder with drop(h) in [0.5, 2].
double half_width_for_drop(const std::function<double(double)>& drop);

QuadConfig inner_config(const QuadConfig& cfg);

/// K_tau(z, w) exp(-log_offset), computed without forming either factor.
BergmanOuter bergman_profile_scaled(const WeightSpec& spec, double tau, ComplexValue z, ComplexValue w,
                                    const QuadConfig& cfg, double log_offset);

}  // namespace szego::detail
