#include "szego/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace szego {

namespace {

void require_profile(const WeightSpec& spec, const char* what) {
  if (!spec.is_profile()) {
    throw UnsupportedWeight(std::string(what) + " needs a profile weight, got " + spec.to_string());
  }
}

double parse_alpha(std::string_view text, std::string_view full) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw UsageError("malformed weight exponent in '" + std::string(full) + "'");
  }
  return value;
}

}  // namespace

WeightSpec WeightSpec::radial(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("radial weight needs alpha > 0");
  }
  return WeightSpec(WeightFamily::RadialPower, alpha);
}

WeightSpec WeightSpec::profile(double alpha) {
  if (!(alpha >= kMinProfileAlpha) || !std::isfinite(alpha)) {
    throw DomainError("profile weight needs alpha >= 1 + 1e-6");
  }
  return WeightSpec(WeightFamily::ProfilePower, alpha);
}

WeightSpec WeightSpec::gaussian() { return WeightSpec(WeightFamily::GaussianProfile, 2.0); }

double WeightSpec::conjugate_alpha() const {
  require_profile(*this, "conjugate exponent");
  return alpha_ / (alpha_ - 1.0);
}

std::string WeightSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (family_) {
    case WeightFamily::RadialPower:
      out << "radial:alpha=" << alpha_;
      break;
    case WeightFamily::ProfilePower:
      out << "profile:alpha=" << alpha_;
      break;
    case WeightFamily::GaussianProfile:
      out << "gaussian";
      break;
  }
  return out.str();
}

WeightSpec parse_weight(std::string_view text) {
  constexpr std::string_view kRadial = "radial:alpha=";
  constexpr std::string_view kProfile = "profile:alpha=";
  if (text == "gaussian") return WeightSpec::gaussian();
  if (text.starts_with(kRadial)) {
    return WeightSpec::radial(parse_alpha(text.substr(kRadial.size()), text));
  }
  if (text.starts_with(kProfile)) {
    return WeightSpec::profile(parse_alpha(text.substr(kProfile.size()), text));
  }
  throw UsageError("unrecognized weight '" + std::string(text) +
                   "' (expected radial:alpha=<f>, profile:alpha=<f> or gaussian)");
}

double eval_profile(const WeightSpec& spec, double x) {
  require_profile(spec, "eval_profile");
  if (spec.family() == WeightFamily::GaussianProfile) return 0.5 * x * x;
  return std::pow(std::abs(x), spec.alpha()) / spec.alpha();
}

double eval_weight(const WeightSpec& spec, ComplexValue z) {
  if (spec.family() == WeightFamily::RadialPower) return std::pow(std::abs(z), spec.alpha());
  return eval_profile(spec, z.real());
}

std::pair<double, double> weight_derivatives(const WeightSpec& spec, double x) {
  require_profile(spec, "weight_derivatives");
  if (spec.family() == WeightFamily::GaussianProfile) return {x, 1.0};
  const double a = spec.alpha();
  const double ax = std::abs(x);
  if (x == 0.0 && a < 2.0) {
    throw DomainError("p'' is singular at x = 0 for alpha < 2");
  }
  const double first = std::copysign(std::pow(ax, a - 1.0), x);
  const double second = (a == 2.0) ? 1.0 : (a - 1.0) * std::pow(ax, a - 2.0);
  return {first, second};
}

double young_conjugate_closed(const WeightSpec& spec, double eta) {
  require_profile(spec, "young_conjugate_closed");
  if (spec.family() == WeightFamily::GaussianProfile) return 0.5 * eta * eta;
  const double ac = spec.conjugate_alpha();
  return std::pow(std::abs(eta), ac) / ac;
}

double inverse_derivative(const WeightSpec& spec, double eta) {
  require_profile(spec, "inverse_derivative");
  if (spec.family() == WeightFamily::GaussianProfile) return std::abs(eta);
  return std::pow(std::abs(eta), 1.0 / (spec.alpha() - 1.0));
}

double young_conjugate_numeric(const WeightSpec& spec, double eta, double tol) {
  require_profile(spec, "young_conjugate_numeric");
  if (!(tol > 0.0)) throw DomainError("young_conjugate_numeric needs tol > 0");

  const double slope = std::abs(eta);
  if (slope == 0.0) return 0.0;  // x|eta| - p(x) <= 0 with equality at x = 0
  auto objective = [&](double x) { return x * slope - eval_profile(spec, x); };

  constexpr double kInvPhi = 0.61803398874989484820;
  constexpr int kMaxIterations = 400;

  double lo = 0.0;
  double hi = std::max(1.0, 2.0 * inverse_derivative(spec, slope));
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double best = std::max(f1, f2);
    const double spread = best - std::min(objective(lo), objective(hi));
    if (spread <= 0.25 * tol) return best;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi)) {
      // Bracket exhausted at double resolution; accept only if within tol.
      if (spread <= tol) return best;
      break;
    }
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = objective(x1);
    }
  }
  throw ConvergenceError("conjugate maximizer bracket did not shrink to the requested tolerance");
}

WeightSpec conjugate_weight(const WeightSpec& spec) {
  require_profile(spec, "conjugate_weight");
  if (spec.family() == WeightFamily::GaussianProfile) return spec;
  return WeightSpec::profile(spec.conjugate_alpha());
}

}  // namespace szego
