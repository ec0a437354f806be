#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "szego/types.hpp"

namespace szego {

enum class WeightFamily { RadialPower, ProfilePower, GaussianProfile };

/// Smallest admissible exponent for ProfilePower. Closer to 1 the conjugate
/// exponent alpha/(alpha-1) blows up.
inline constexpr double kMinProfileAlpha = 1.0 + 1e-6;

/// One of the three weight families p(z):
///   RadialPower      |z|^alpha            (alpha > 0)
///   ProfilePower     |Re z|^alpha / alpha (alpha > 1)
///   GaussianProfile  (Re z)^2 / 2
class WeightSpec {
 public:
  static WeightSpec radial(double alpha);
  static WeightSpec profile(double alpha);
  static WeightSpec gaussian();

  WeightFamily family() const noexcept { return family_; }
  /// Exponent; 2 for the Gaussian profile.
  double alpha() const noexcept { return alpha_; }
  bool is_profile() const noexcept { return family_ != WeightFamily::RadialPower; }

  /// Conjugate exponent alpha' with 1/alpha + 1/alpha' = 1 (profile families).
  double conjugate_alpha() const;

  /// Canonical string form, parseable by parse_weight.
  std::string to_string() const;

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;

 private:
  WeightSpec(WeightFamily family, double alpha) : family_(family), alpha_(alpha) {}

  WeightFamily family_;
  double alpha_;
};

/// Parses `radial:alpha=<float>`, `profile:alpha=<float>` or `gaussian`.
/// Anything else raises UsageError; a well-formed string with an
/// inadmissible exponent raises DomainError.
WeightSpec parse_weight(std::string_view text);

double eval_weight(const WeightSpec& spec, ComplexValue z);

/// Profile value p(x) on the real line.
double eval_profile(const WeightSpec& spec, double x);

/// (p'(x), p''(x)) of a profile weight.
std::pair<double, double> weight_derivatives(const WeightSpec& spec, double x);

/// |eta|^{alpha'} / alpha'.
double young_conjugate_closed(const WeightSpec& spec, double eta);

/// sup_{x >= 0} [x |eta| - p(x)] by golden-section search on a bracket seeded
/// with the closed-form maximizer.
double young_conjugate_numeric(const WeightSpec& spec, double eta, double tol);

/// mu(eta) = |eta|^{1/(alpha-1)}, the inverse of p' on [0, inf).
double inverse_derivative(const WeightSpec& spec, double eta);

/// The weight whose profile is the Young conjugate p*.
WeightSpec conjugate_weight(const WeightSpec& spec);

}  // namespace szego
