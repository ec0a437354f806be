#include "szego/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "szego/gaussian_roundtrip.hpp"
#include "szego/profile_bounds.hpp"
#include "szego/profile_kernels.hpp"
#include "szego/radial_kernels.hpp"
#include "szego/weights.hpp"

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string fmt(ComplexValue z) { return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i"; }

double radial_scale(double alpha, double tau, long k) {
  const double peak = std::pow((2.0 * static_cast<double>(k) + 1.0) / (2.0 * tau * alpha), 1.0 / alpha);
  return std::max(peak, std::pow(2.0 * tau, -1.0 / alpha));
}

// Runs fn; a raised Error is recorded as a failed case.
void guarded(VerificationReport& report, const std::string& name, ComplexValue expected, double tolerance,
             const std::function<ComplexValue()>& fn) {
  try {
    report.add(name, expected, fn(), tolerance);
  } catch (const Error& e) {
    report.add_failure(name, expected, tolerance, std::string(e.name()) + ": " + e.what());
  }
}

void relative_case(VerificationReport& report, const std::string& name, ComplexValue expected, double rel,
                   const std::function<ComplexValue()>& fn) {
  guarded(report, name, expected, rel * std::abs(expected), fn);
}

template <class Err>
void expect_raise(VerificationReport& report, const std::string& name, const std::function<void()>& fn) {
  double raised = 0.0;
  try {
    fn();
  } catch (const Err&) {
    raised = 1.0;
  } catch (const Error& e) {
    report.notes.push_back(name + ": raised " + e.name() + " instead");
  }
  report.add(name, 1.0, raised, 0.0);
}

void boolean_case(VerificationReport& report, const std::string& name, bool expected,
                  const std::function<bool()>& fn) {
  guarded(report, name, expected ? 1.0 : 0.0, 0.0, [&] { return ComplexValue(fn() ? 1.0 : 0.0, 0.0); });
}

void normalization_suite(VerificationReport& report, const QuadConfig& cfg) {
  for (double alpha : {1.0, 2.0, 3.0, 4.0}) {
    for (double tau : {0.5, 1.0, 2.0}) {
      for (long k = 0; k <= 4; ++k) {
        const std::string tag = "alpha=" + fmt(alpha) + " tau=" + fmt(tau) + " k=" + std::to_string(k);
        double m = std::nan("");
        try {
          m = moment_oracle(alpha, tau, k, cfg);
        } catch (const Error& e) {
          report.add_failure("moment " + tag, moment_closed(alpha, tau, k), 0.0, e.what());
          continue;
        }
        const double closed = moment_closed(alpha, tau, k);
        report.add("moment vs gamma " + tag, closed, m, std::max(1e-8, 1e-8 * closed));
        if (k <= 2) report.add("c_k*m_k " + tag, 1.0, series_coefficient(alpha, tau, k) * m, 1e-7);
      }
    }
    const double printed = printed_series_prefactor(alpha) / series_prefactor(alpha);
    report.notes.push_back("alpha=" + fmt(alpha) + ": printed series prefactor 2*pi/alpha = " +
                           fmt(printed_series_prefactor(alpha)) + " gives c_k*m_k = " + fmt(printed) +
                           " instead of 1; printed Szego constant 2*pi/alpha^2 = " +
                           fmt(printed_szego_prefactor(alpha)) + " vs 1/(2*pi) = " + fmt(szego_radial_prefactor()));
  }
  guarded(report, "c_0 alpha=2 tau=1", 2.0 / kPi, 1e-12, [] { return ComplexValue(series_coefficient(2, 1, 0)); });
  guarded(report, "c_1 alpha=2 tau=1", 4.0 / kPi, 1e-12, [] { return ComplexValue(series_coefficient(2, 1, 1)); });
  guarded(report, "c_0 alpha=4 tau=1", 1.0 / (0.5 * kPi * std::sqrt(0.5 * kPi)), 1e-12,
          [] { return ComplexValue(series_coefficient(4, 1, 0)); });
  guarded(report, "m_0 alpha=4 tau=1", 0.5 * kPi * std::sqrt(0.5 * kPi), 1e-8,
          [&] { return ComplexValue(moment_oracle(4, 1, 0, cfg)); });
}

void reproducing_suite(VerificationReport& report, const QuadConfig& cfg) {
  struct Case {
    double alpha, tau;
    long j;
    ComplexValue z;
  };
  const Case cases[] = {{2, 1, 0, {0.5, 0}},  {2, 1, 2, {0.5, 0.25}}, {4, 0.5, 1, {1, 0}},
                        {3, 1, 3, {0.3, -0.7}}, {1, 1, 1, {0, 1.2}},   {2, 2, 4, {-1.1, 0.6}}};
  for (const Case& c : cases) {
    const std::string name = "reproduce w^" + std::to_string(c.j) + " alpha=" + fmt(c.alpha) + " tau=" + fmt(c.tau) +
                             " z=" + fmt(c.z);
    guarded(report, name, std::pow(c.z, static_cast<double>(c.j)), 1e-6,
            [&] { return reproduced_monomial(c.alpha, c.tau, c.j, c.z, cfg); });
  }
}

void crosscheck_suite(VerificationReport& report, const QuadConfig& cfg) {
  const ComplexValue I(0.0, 1.0);
  relative_case(report, "radial series alpha=2 tau=1 z=w=0", 2.0 / kPi, 1e-12,
                [&] { return bergman_radial_series(2, 1, 0.0, 0.0, cfg).value; });
  relative_case(report, "radial series alpha=2 tau=1 z=w=1", 2.0 / kPi * std::exp(2.0), 1e-9,
                [&] { return bergman_radial_series(2, 1, 1.0, 1.0, cfg).value; });
  relative_case(report, "radial closed alpha=2 z=w=0 s-t=1", -2.0 / kPi, 1e-12,
                [] { return szego_radial_closed(2, {0.0, 0.0}, {0.0, 1.0}).value; });
  relative_case(report, "radial closed alpha=1 z=w=0 s-t=2", I / (2.0 * kPi), 1e-12,
                [] { return szego_radial_closed(1, {0.0, 0.0}, {0.0, 2.0}).value; });

  struct Pair {
    double alpha;
    BoundaryPoint p1, p2;
  };
  const Pair pairs[] = {{2, {1.0, 0.0}, {0.0, 0.0}},
                        {3, {0.5, 0.0}, {0.5 * I, 0.7}},
                        {1, {{0.4, -0.3}, 0.2}, {{-0.6, 0.1}, -0.5}},
                        {2, {{0.7, 0.7}, 1.0}, {{0.2, -0.5}, 0.1}}};
  for (const Pair& p : pairs) {
    const std::string name = "closed vs laplace alpha=" + fmt(p.alpha) + " z=" + fmt(p.p1.z) + " w=" + fmt(p.p2.z) +
                             " s-t=" + fmt(p.p2.t - p.p1.t);
    ComplexValue closed;
    try {
      closed = szego_radial_closed(p.alpha, p.p1, p.p2).value;
    } catch (const Error& e) {
      report.add_failure(name, 0.0, 0.0, e.what());
      continue;
    }
    relative_case(report, name, closed, 1e-6, [&] { return szego_radial_via_laplace(p.alpha, p.p1, p.p2, cfg).value; });
  }
  guarded(report, "gamma step alpha=3 k=0 A=(1+i)/2", 0.0, 1e-8,
          [] { return ComplexValue(gamma_step_identity_check(3, 0, HalfPlaneParam{{0.5, 0.5}})); });
  guarded(report, "gamma step alpha=2 k=1 A=1", 0.0, 1e-8,
          [] { return ComplexValue(gamma_step_identity_check(2, 1, HalfPlaneParam{{1.0, 0.0}})); });

  const WeightSpec gaussian = WeightSpec::gaussian();
  const std::pair<ComplexValue, ComplexValue> bergman_points[] = {
      {0.0, 0.0}, {1.0, 1.0}, {I, I}, {{1, 1}, {1, -1}}, {{-0.8, 0.3}, {0.4, 1.2}}};
  for (const auto& [z, w] : bergman_points) {
    relative_case(report, "profile quadrature vs gaussian closed z=" + fmt(z) + " w=" + fmt(w),
                  bergman_gaussian_closed(1, z, w), 1e-8, [&] { return bergman_profile(gaussian, 1, z, w, cfg).value; });
  }
  relative_case(report, "gaussian closed tau=2 z=1 w=-1", 1.0 / kPi, 1e-12,
                [] { return bergman_gaussian_closed(2, 1.0, -1.0); });

  const std::pair<BoundaryPoint, BoundaryPoint> szego_points[] = {
      {{1.0, 0.0}, {0.0, 0.0}}, {{{0.5, 0.2}, 0.3}, {{-0.3, 0.4}, -0.2}}, {{{0.0, 1.0}, 0.0}, {{1.0, 0.0}, 0.5}}};
  for (const auto& [p1, p2] : szego_points) {
    const std::string name = "triple integral vs gaussian closed z=" + fmt(p1.z) + " w=" + fmt(p2.z) +
                             " s-t=" + fmt(p2.t - p1.t);
    relative_case(report, name, szego_gaussian_closed(p1, p2), 1e-4,
                  [&] { return szego_profile(gaussian, p1, p2, cfg).value; });
  }
  relative_case(report, "gaussian szego closed z=1 w=0 s=t", 8.0 / kPi, 1e-12,
                [] { return szego_gaussian_closed({1.0, 0.0}, {0.0, 0.0}); });

  for (double x : {0.0, 1.0}) {
    relative_case(report, "inverse transform round trip z=w=" + fmt(x), bergman_gaussian_closed(1, x, x), 1e-3,
                  [&] { return bergman_from_szego_gaussian(1, x, x, 0.1, cfg).value; });
  }
  report.notes.push_back("inverse transform normalized by 1/(2*pi^2); without it the round trip returns 2*pi^2 K");
}

void bounds_suite(VerificationReport& report, const QuadConfig& cfg) {
  struct Case {
    double alpha, lambda, lo, hi;
    Eigen::Index count;
    bool upper, lower;
  };
  const Case cases[] = {{2, 1.5, -5, 5, 21, true, true},   {2, 0.9, -5, 5, 21, false, false},
                        {4, 1.25, -8, 8, 33, true, true},  {2, 1.5, -8, 8, 65, true, true},
                        {4, 1.5, -8, 8, 65, true, true},   {4, 0.9, -8, 8, 65, false, false}};
  for (const Case& c : cases) {
    const std::string tag = "alpha=" + fmt(c.alpha) + " lambda=" + fmt(c.lambda) + " grid " + fmt(c.lo) + ":" +
                            fmt(c.hi) + ":" + std::to_string(c.count);
    try {
      const BoundsReport b = sandwich_bounds_check(WeightSpec::profile(c.alpha), 1.0, c.lambda,
                                                   linear_grid(c.lo, c.hi, c.count), cfg);
      report.add("upper bounded " + tag, c.upper ? 1.0 : 0.0, b.upper_bounded ? 1.0 : 0.0, 0.0);
      report.add("lower bounded " + tag, c.lower ? 1.0 : 0.0, b.lower_bounded ? 1.0 : 0.0, 0.0);
      report.add("dual upper bounded " + tag, c.upper ? 1.0 : 0.0, b.dual_upper_bounded ? 1.0 : 0.0, 0.0);
      report.add("dual lower bounded " + tag, c.lower ? 1.0 : 0.0, b.dual_lower_bounded ? 1.0 : 0.0, 0.0);
      if (c.upper) {
        report.notes.push_back(tag + ": log C = " + fmt(b.log_upper_constant) + ", log D = " + fmt(b.log_lower_constant));
      }
    } catch (const Error& e) {
      report.add_failure("bounds " + tag, 1.0, 0.0, e.what());
    }
  }

  for (double alpha : {2.0, 3.0}) {
    const WeightSpec spec = WeightSpec::profile(alpha);
    double wide = std::nan("");
    try {
      wide = maximizer_shift_gap_minimum(spec, 1.0, 0.5, 40.0, 801);
    } catch (const Error&) {
    }
    guarded(report, "shift gap minimum [0,20] vs [0,40] alpha=" + fmt(alpha), wide, 0.01 * std::abs(wide),
            [&] { return ComplexValue(maximizer_shift_gap_minimum(spec, 1.0, 0.5, 20.0, 401)); });
  }

  boolean_case(report, "duality tau=1 tau0=0.8 tau1=2", true, [] { return duality_finiteness_criterion(1, 0.8, 2); });
  boolean_case(report, "duality tau=1 tau0=0.5 tau1=2", false, [] { return duality_finiteness_criterion(1, 0.5, 2); });
  boolean_case(report, "duality tau=1 tau0=0.99 tau1=2", true, [] { return duality_finiteness_criterion(1, 0.99, 2); });
  relative_case(report, "duality marginal tau0=0.8", kPi / std::sqrt(0.2), 1e-6,
                [&] { return duality_marginal_integral(1, 0.8, 2, cfg).value; });
  expect_raise<TruncationError>(report, "duality marginal tau0=0.5 diverges",
                                [&] { duality_marginal_integral(1, 0.5, 2, cfg); });
  report.notes.push_back("duality criterion covers the real (x,u) directions only; the imaginary directions of the "
                         "full double integral are translation invariant and diverge");
}

void asymptotics_suite(VerificationReport& report, const QuadConfig& cfg) {
  const Eigen::Vector3d taus(1.0, 10.0, 100.0);
  try {
    const AsymptoticsReport g = laplace_asymptotic(WeightSpec::gaussian(), 1.0, taus, cfg);
    for (Eigen::Index i = 0; i < taus.size(); ++i) {
      report.add("gaussian ratio eta=1 tau=" + fmt(taus(i)), 1.0, g.ratios(i), 1e-6);
      report.notes.push_back("gaussian tau=" + fmt(taus(i)) + ": printed-prefactor ratio " + fmt(g.printed_ratios(i)));
    }
  } catch (const Error& e) {
    report.add_failure("gaussian asymptotics", 1.0, 1e-6, e.what());
  }
  try {
    const AsymptoticsReport a = laplace_asymptotic(WeightSpec::profile(4), 1.0, taus, cfg);
    report.add("alpha=4 ratio eta=1 tau=100", 1.0, a.ratios(2), 0.02);
    report.add("alpha=4 ratios improve monotonically", 1.0, a.converged ? 1.0 : 0.0, 0.0);
    for (Eigen::Index i = 0; i < taus.size(); ++i) {
      report.notes.push_back("alpha=4 tau=" + fmt(taus(i)) + ": ratio " + fmt(a.ratios(i)) + ", printed-prefactor ratio " +
                             fmt(a.printed_ratios(i)));
    }
  } catch (const Error& e) {
    report.add_failure("alpha=4 asymptotics", 1.0, 0.02, e.what());
  }
  expect_raise<DomainError>(report, "alpha=4 eta=0 degenerate maximizer",
                            [&] { laplace_asymptotic(WeightSpec::profile(4), 0.0, taus, cfg); });

  const WeightSpec gaussian = WeightSpec::gaussian();
  const double log_sqrt_pi = 0.5 * std::log(kPi);
  guarded(report, "inner integral gaussian tau=1 eta=0", std::sqrt(kPi), 1e-9,
          [&] { return inner_integral(gaussian, 1, 0, cfg).value; });
  guarded(report, "inner integral gaussian tau=1 eta=1", std::sqrt(kPi) * std::exp(1.0), 1e-8,
          [&] { return inner_integral(gaussian, 1, 1, cfg).value; });
  guarded(report, "inner integral gaussian tau=2 eta=0", std::sqrt(0.5 * kPi), 1e-9,
          [&] { return inner_integral(gaussian, 2, 0, cfg).value; });
  guarded(report, "effective conjugate gaussian tau=1 eta=0", 0.5 * log_sqrt_pi, 1e-9,
          [&] { return ComplexValue(effective_conjugate(gaussian, 1, 0, cfg)); });
  guarded(report, "effective conjugate gaussian tau=1 eta=2", 2.0 + 0.5 * log_sqrt_pi, 1e-9,
          [&] { return ComplexValue(effective_conjugate(gaussian, 1, 2, cfg)); });
  try {
    const WeightSpec quartic = WeightSpec::profile(4);
    const double exact = young_conjugate_closed(quartic, 1.0);
    const double coarse = std::abs(effective_conjugate(quartic, 1, 1, cfg) - exact);
    const double fine = std::abs(effective_conjugate(quartic, 10, 1, cfg) - exact);
    report.add("effective conjugate gap shrinks alpha=4 eta=1 tau 1 -> 10", 0.0, fine, coarse);
  } catch (const Error& e) {
    report.add_failure("effective conjugate gap alpha=4", 0.0, 0.0, e.what());
  }
}

using SuiteFn = void (*)(VerificationReport&, const QuadConfig&);

SuiteFn find_suite(std::string_view name) {
  if (name == "normalization") return normalization_suite;
  if (name == "reproducing") return reproducing_suite;
  if (name == "crosscheck") return crosscheck_suite;
  if (name == "bounds") return bounds_suite;
  if (name == "asymptotics") return asymptotics_suite;
  return nullptr;
}

}  // namespace

void VerificationReport::add(std::string name, ComplexValue expected, ComplexValue actual, double tolerance) {
  const double gap = std::abs(expected - actual);
  cases.push_back(VerificationCase{std::move(name), expected, actual, tolerance, gap <= tolerance});
}

void VerificationReport::add_failure(std::string name, ComplexValue expected, double tolerance,
                                     const std::string& error) {
  notes.push_back(name + ": " + error);
  const double nan = std::nan("");
  cases.push_back(VerificationCase{std::move(name), expected, ComplexValue(nan, nan), tolerance, false});
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.passed ? 0 : 1;
  return n;
}

double moment_closed(double alpha, double tau, long k) {
  if (!(alpha > 0.0) || !(tau > 0.0)) throw DomainError("alpha and tau must be positive");
  if (k < 0) throw DomainError("moment index must be non-negative");
  const double order = 2.0 * static_cast<double>(k + 1) / alpha;
  return std::exp(std::log(2.0 * kPi / alpha) - order * std::log(2.0 * tau) + log_gamma(order));
}

double moment_oracle(double alpha, double tau, long k, const QuadConfig& cfg) {
  if (!(alpha > 0.0) || !(tau > 0.0)) throw DomainError("alpha and tau must be positive");
  if (k < 0) throw DomainError("moment index must be non-negative");
  const double two_k = 2.0 * static_cast<double>(k);
  auto g = [&](double r, double) -> ComplexValue {
    if (r == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(two_k * std::log(r) - 2.0 * tau * std::pow(r, alpha));
  };
  return integrate_plane_polar(g, cfg, radial_scale(alpha, tau, k)).value.real();
}

ComplexValue reproduced_monomial(double alpha, double tau, long j, ComplexValue z, const QuadConfig& cfg,
                                 double target_residual) {
  if (j < 0) throw DomainError("monomial degree must be non-negative");
  if (!(target_residual > 0.0)) throw DomainError("target residual must be positive");
  QuadConfig series_cfg = cfg;
  series_cfg.abs_tol = std::min(cfg.abs_tol, 0.1 * target_residual);
  series_cfg.rel_tol = std::min(cfg.rel_tol, 0.1 * target_residual);
  const double jd = static_cast<double>(j);
  auto g = [&](double r, double theta) -> ComplexValue {
    const ComplexValue w = std::polar(r, theta);
    const ComplexValue k = bergman_radial_series(alpha, tau, z, w, series_cfg).value;
    return k * std::polar(std::pow(r, jd), jd * theta) * std::exp(-2.0 * tau * std::pow(r, alpha));
  };
  return integrate_plane_polar(g, cfg, radial_scale(alpha, tau, j)).value;
}

double reproducing_check(double alpha, double tau, long j, ComplexValue z, const QuadConfig& cfg,
                         double target_residual) {
  return std::abs(reproduced_monomial(alpha, tau, j, z, cfg, target_residual) - std::pow(z, static_cast<double>(j)));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"normalization", "reproducing", "crosscheck",
                                              "bounds",        "asymptotics", "all"};
  return names;
}

VerificationReport run_suite(std::string_view name, const QuadConfig& cfg) {
  VerificationReport report;
  report.suite = std::string(name);
  if (name == "all") {
    for (const auto& sub : suite_names()) {
      if (sub == "all") continue;
      VerificationReport part = run_suite(sub, cfg);
      for (auto& c : part.cases) {
        c.name = sub + ": " + c.name;
        report.cases.push_back(std::move(c));
      }
      for (auto& n : part.notes) report.notes.push_back(sub + ": " + n);
    }
    return report;
  }
  const SuiteFn fn = find_suite(name);
  if (fn == nullptr) throw UsageError("unknown verification suite '" + std::string(name) + "'");
  fn(report, cfg);
  return report;
}

}  // namespace szego
