#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "szego/numerics.hpp"

using namespace szego;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

bool within_contract(const EvalResult& r, ComplexValue exact, const QuadConfig& cfg) {
  const double err = std::abs(r.value - exact);
  return err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(exact)) * 10.0;
}

}  // namespace

TEST_CASE("real line examples") {
  const QuadConfig cfg;
  CHECK(within_contract(integrate_real_line([](double x) { return ComplexValue(std::exp(-x * x)); }, cfg),
                        std::sqrt(kPi), cfg));
  CHECK(within_contract(integrate_real_line([](double x) { return ComplexValue(std::exp(-std::abs(x))); }, cfg), 2.0,
                        cfg));
  CHECK(within_contract(
      integrate_real_line([](double x) { return ComplexValue(std::exp(-x * x) * std::cos(x)); }, cfg),
      std::sqrt(kPi) * std::exp(-0.25), cfg));
  const EvalResult shifted =
      integrate_real_line([](double x) { return ComplexValue(std::exp(-(x - 40.0) * (x - 40.0))); }, cfg, {40.0, 1.0});
  CHECK(shifted.value.real() == Approx(std::sqrt(kPi)).epsilon(1e-9));
}

TEST_CASE("half line examples") {
  const QuadConfig cfg;
  CHECK(within_contract(integrate_half_line([](double t) { return ComplexValue(std::exp(-t)); }, cfg), 1.0, cfg));
  CHECK(within_contract(integrate_half_line([](double t) { return ComplexValue(t * std::exp(-2 * t)); }, cfg), 0.25,
                        cfg));
  CHECK(within_contract(
      integrate_half_line([](double t) { return ComplexValue(std::sqrt(t) * std::exp(-t)); }, cfg), 0.886226925452758,
      cfg));
  // complex damping: int_0^inf exp(-(1 + i) t) dt = 1 / (1 + i)
  const EvalResult osc = integrate_half_line([](double t) { return std::exp(ComplexValue(-1.0, -1.0) * t); }, cfg);
  CHECK(std::abs(osc.value - 1.0 / ComplexValue(1.0, 1.0)) <= 1e-9);
}

TEST_CASE("plane polar examples") {
  const QuadConfig cfg;
  CHECK(within_contract(integrate_plane_polar([](double r, double) { return ComplexValue(std::exp(-2 * r * r)); }, cfg),
                        kPi / 2, cfg));
  CHECK(within_contract(integrate_plane_polar([](double r, double) { return ComplexValue(std::exp(-r)); }, cfg), 2 * kPi,
                        cfg));
  CHECK(within_contract(
      integrate_plane_polar([](double r, double) { return ComplexValue(r * r * std::exp(-2 * r * r)); }, cfg), kPi / 4,
      cfg));
  // angular dependence integrates out: int |z|^2 cos(2 theta) e^{-r^2} = 0
  const EvalResult zero =
      integrate_plane_polar([](double r, double th) { return ComplexValue(r * r * std::cos(2 * th) * std::exp(-r * r)); }, cfg);
  CHECK(std::abs(zero.value) <= 1e-10);
}

TEST_CASE("interval quadrature") {
  const QuadConfig cfg;
  const EvalResult r = integrate_interval([](double x) { return ComplexValue(std::sin(x)); }, 0.0, kPi, cfg);
  CHECK(r.value.real() == Approx(2.0).epsilon(1e-12));
  CHECK(r.abs_err_estimate >= 0.0);
  CHECK(integrate_interval([](double) { return ComplexValue(1.0); }, 2.0, 2.0, cfg).value == ComplexValue(0.0));
}

TEST_CASE("series examples") {
  QuadConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.rel_tol = 1e-12;
  CHECK(sum_series([](long k) { return ComplexValue(std::pow(0.5, k)); }, cfg).value.real() == Approx(2.0).epsilon(1e-9));
  CHECK(sum_series([](long k) { return ComplexValue((k + 1) * std::pow(0.5, k)); }, cfg).value.real() ==
        Approx(4.0).epsilon(1e-9));
  CHECK(sum_series([](long k) { return ComplexValue(std::exp(k * std::log(2.0) - std::lgamma(k + 1.0))); }, cfg)
            .value.real() == Approx(std::exp(2.0)).epsilon(1e-9));
  // leading terms that underflow to zero do not end the sum
  const EvalResult late = sum_series([](long k) { return k < 5 ? ComplexValue(0.0) : ComplexValue(std::pow(0.5, k)); }, cfg);
  CHECK(late.value.real() == Approx(std::pow(0.5, 4)).epsilon(1e-9));
  CHECK_THROWS_AS(sum_series([](long) { return ComplexValue(1.0); }, cfg, 50), ConvergenceError);
}

TEST_CASE("log gamma") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
  CHECK(log_gamma(0.5) == Approx(0.5723649429247001).epsilon(1e-13));
  CHECK(log_gamma(3.0) == Approx(std::log(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
  for (double x = 1e-3; x <= 1e3; x *= 1.37) {
    const double ref = std::lgamma(x);
    CAPTURE(x);
    CHECK(std::abs(log_gamma(x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }
  for (double x = 0.01; x <= 50.0; x += 0.173) {
    CHECK(std::abs(log_gamma(x + 1) - log_gamma(x) - std::log(x)) <= 1e-10);
  }
}

TEST_CASE("halving abs_tol does not worsen the closed-form examples") {
  struct Example {
    RealIntegrand f;
    double exact;
  };
  const Example examples[] = {{[](double x) { return ComplexValue(std::exp(-x * x)); }, std::sqrt(kPi)},
                              {[](double x) { return ComplexValue(std::exp(-std::abs(x))); }, 2.0},
                              {[](double x) { return ComplexValue(std::exp(-x * x) * std::cos(x)); },
                               std::sqrt(kPi) * std::exp(-0.25)}};
  for (const auto& ex : examples) {
    QuadConfig cfg{1e-6, 1e-6, 2000, 1e-16};
    double previous = std::abs(integrate_real_line(ex.f, cfg).value - ex.exact);
    for (int i = 0; i < 8; ++i) {
      cfg.abs_tol *= 0.5;
      const double err = std::abs(integrate_real_line(ex.f, cfg).value - ex.exact);
      CHECK(err <= previous + 1e-15);
      previous = std::min(previous, err);
    }
  }
}

TEST_CASE("linearity") {
  const QuadConfig cfg;
  auto f = [](double x) { return ComplexValue(std::exp(-x * x)); };
  auto g = [](double x) { return ComplexValue(std::exp(-std::abs(x)) * std::cos(3 * x), std::exp(-2 * x * x)); };
  const ComplexValue a(2.0, -1.0), b(-0.5, 0.25);
  const EvalResult rf = integrate_real_line(f, cfg);
  const EvalResult rg = integrate_real_line(g, cfg);
  const EvalResult rc = integrate_real_line([&](double x) { return a * f(x) + b * g(x); }, cfg);
  const double bound = std::abs(a) * rf.abs_err_estimate + std::abs(b) * rg.abs_err_estimate + rc.abs_err_estimate;
  CHECK(std::abs(rc.value - (a * rf.value + b * rg.value)) <= bound + 1e-14);
}

TEST_CASE("failure modes") {
  const QuadConfig cfg;
  CHECK_THROWS_AS(integrate_real_line([](double) { return ComplexValue(1.0); }, cfg), TruncationError);
  CHECK_THROWS_AS(integrate_half_line([](double t) { return ComplexValue(std::exp(t)); }, cfg), TruncationError);
  QuadConfig tight{1e-14, 1e-14, 3, 1e-16};
  CHECK_THROWS_AS(integrate_interval([](double x) { return ComplexValue(1.0 / std::sqrt(x + 1e-300)); }, 0.0, 1.0, tight),
                  ConvergenceError);
  CHECK_THROWS_AS(integrate_interval([](double) { return ComplexValue(NAN); }, 0.0, 1.0, cfg), ConvergenceError);
}

TEST_CASE("quad config validation") {
  CHECK_NOTHROW(QuadConfig{}.validate());
  CHECK_THROWS_AS((QuadConfig{0.0, 1e-8, 10, 1e-16}).validate(), DomainError);
  CHECK_THROWS_AS((QuadConfig{1e-10, 1.0, 10, 1e-16}).validate(), DomainError);
  CHECK_THROWS_AS((QuadConfig{1e-10, 1e-8, 0, 1e-16}).validate(), DomainError);
  CHECK_THROWS_AS((QuadConfig{1e-10, 1e-8, 10, 0.0}).validate(), DomainError);
  const QuadConfig t = QuadConfig{}.tightened(1e-2);
  CHECK(t.abs_tol == Approx(1e-12));
  CHECK(t.rel_tol == Approx(1e-10));
}

TEST_CASE("damping floor") {
  CHECK(damping_floor(QuadConfig{}) == Approx(-std::log(1e-16) / 1e4));
  CHECK(damping_floor(QuadConfig{}) > 0.0);
}
