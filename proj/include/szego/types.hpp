#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace szego {

using ComplexValue = std::complex<double>;

// Base of every error raised by the library. name() is the stable tag the
// CLI prints on standard error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept = 0;
};

#define SZEGO_DEFINE_ERROR(Type)                                        \
  class Type : public Error {                                           \
   public:                                                              \
    using Error::Error;                                                 \
    const char* name() const noexcept override { return #Type; }        \
  }

SZEGO_DEFINE_ERROR(DomainError);
SZEGO_DEFINE_ERROR(ConvergenceError);
SZEGO_DEFINE_ERROR(TruncationError);
SZEGO_DEFINE_ERROR(SingularPoint);
SZEGO_DEFINE_ERROR(NearSingular);
SZEGO_DEFINE_ERROR(UnsupportedWeight);
SZEGO_DEFINE_ERROR(UsageError);

#undef SZEGO_DEFINE_ERROR

/// Tolerances and budgets shared by every quadrature and series routine.
///
/// truncation_decay_threshold is relative: an infinite domain is cut once the
/// integrand on the outermost window shell falls below this fraction of the
/// largest magnitude seen so far.
struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_subdivisions = 2000;
  double truncation_decay_threshold = 1e-16;

  /// Throws DomainError when a field is outside its admissible range.
  void validate() const;

  /// Same budgets with both tolerances multiplied by `factor`.
  QuadConfig tightened(double factor) const;
};

struct EvalResult {
  ComplexValue value{0.0, 0.0};
  double abs_err_estimate = 0.0;
  std::string method;
  long n_evals = 0;
};

/// A point (z, t) of the model boundary, identified with C x R.
struct BoundaryPoint {
  ComplexValue z{0.0, 0.0};
  double t = 0.0;
};

}  // namespace szego
