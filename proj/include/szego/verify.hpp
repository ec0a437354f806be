#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "szego/numerics.hpp"
#include "szego/types.hpp"

namespace szego {

struct VerificationCase {
  std::string name;
  ComplexValue expected{0.0, 0.0};
  ComplexValue actual{0.0, 0.0};
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCase> cases;
  std::vector<std::string> notes;

  /// Appends a case; passed is |expected - actual| <= tolerance.
  void add(std::string name, ComplexValue expected, ComplexValue actual, double tolerance);
  /// Records a case whose computation raised.
  void add_failure(std::string name, ComplexValue expected, double tolerance, const std::string& error);
  bool all_passed() const;
  std::size_t failures() const;
};

/// m_k = int_C |z|^{2k} exp(-2 tau |z|^alpha) dlambda(z) by polar quadrature.
double moment_oracle(double alpha, double tau, long k, const QuadConfig& cfg = {});

/// (2 pi / alpha) (2 tau)^{-2(k+1)/alpha} Gamma(2(k+1)/alpha).
double moment_closed(double alpha, double tau, long k);

/// The reproduced value int_C K_tau(z, w) w^j exp(-2 tau |w|^alpha) dlambda(w);
/// the kernel series is summed to target_residual / 10.
ComplexValue reproduced_monomial(double alpha, double tau, long j, ComplexValue z, const QuadConfig& cfg = {},
                                 double target_residual = 1e-6);

/// |reproduced_monomial(...) - z^j|.
double reproducing_check(double alpha, double tau, long j, ComplexValue z, const QuadConfig& cfg = {},
                         double target_residual = 1e-6);

/// normalization, reproducing, crosscheck, bounds, asymptotics, all.
const std::vector<std::string>& suite_names();

/// Runs a fixed case list. Failures and raised errors are recorded in the
/// report; only an unknown suite name throws (UsageError).
VerificationReport run_suite(std::string_view name, const QuadConfig& cfg = {});

}  // namespace szego
