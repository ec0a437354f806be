#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "szego/weights.hpp"

using namespace szego;
using doctest::Approx;

TEST_CASE("eval_weight on the three families") {
  CHECK(eval_weight(WeightSpec::radial(2), {1, 1}) == Approx(2.0));
  CHECK(eval_weight(WeightSpec::profile(3), {2, 5}) == Approx(8.0 / 3.0));
  CHECK(eval_weight(WeightSpec::gaussian(), {3, 0}) == Approx(4.5));
  CHECK(eval_weight(WeightSpec::profile(2.5), {-1.3, 0.7}) >= 0.0);
}

TEST_CASE("profile alpha=2 and gaussian agree pointwise") {
  const WeightSpec p2 = WeightSpec::profile(2);
  const WeightSpec g = WeightSpec::gaussian();
  for (double x = -4.0; x <= 4.0; x += 0.37) {
    CHECK(eval_profile(p2, x) == eval_profile(g, x));
    CHECK(weight_derivatives(p2, x).first == Approx(weight_derivatives(g, x).first));
    CHECK(young_conjugate_closed(p2, x) == Approx(young_conjugate_closed(g, x)));
  }
}

TEST_CASE("weight derivatives") {
  const auto [d1, d2] = weight_derivatives(WeightSpec::profile(3), 2.0);
  CHECK(d1 == Approx(4.0));
  CHECK(d2 == Approx(4.0));
  const auto [g1, g2] = weight_derivatives(WeightSpec::gaussian(), -1.5);
  CHECK(g1 == Approx(-1.5));
  CHECK(g2 == Approx(1.0));
  CHECK_THROWS_AS(weight_derivatives(WeightSpec::profile(1.5), 0.0), DomainError);
  CHECK_THROWS_AS(weight_derivatives(WeightSpec::radial(2), 1.0), UnsupportedWeight);
}

TEST_CASE("closed Young conjugate") {
  CHECK(young_conjugate_closed(WeightSpec::profile(2), 1.0) == Approx(0.5));
  CHECK(young_conjugate_closed(WeightSpec::profile(4), 1.0) == Approx(0.75));
  CHECK(young_conjugate_closed(WeightSpec::profile(3.3), 0.0) == 0.0);
  CHECK(young_conjugate_closed(WeightSpec::profile(3), -2.0) == Approx(young_conjugate_closed(WeightSpec::profile(3), 2.0)));
  CHECK_THROWS_AS(young_conjugate_closed(WeightSpec::radial(2), 1.0), UnsupportedWeight);
}

TEST_CASE("numeric Young conjugate") {
  constexpr double tol = 1e-9;
  CHECK(young_conjugate_numeric(WeightSpec::profile(2), 3.0, tol) == Approx(4.5).epsilon(1e-9));
  CHECK(young_conjugate_numeric(WeightSpec::profile(3), 2.0, tol) == Approx(std::pow(2.0, 1.5) / 1.5).epsilon(1e-9));
  const WeightSpec quartic = WeightSpec::profile(4);
  const double twice = young_conjugate_numeric(conjugate_weight(quartic), 1.7, tol);
  CHECK(std::abs(twice - eval_profile(quartic, 1.7)) <= tol);
}

TEST_CASE("numeric and closed conjugates coincide on a grid") {
  constexpr double tol = 1e-9;
  for (double alpha : {1.5, 2.0, 3.0, 4.0}) {
    const WeightSpec spec = WeightSpec::profile(alpha);
    for (int i = -20; i <= 20; ++i) {
      const double eta = 0.5 * i;
      CAPTURE(alpha);
      CAPTURE(eta);
      CHECK(std::abs(young_conjugate_numeric(spec, eta, tol) - young_conjugate_closed(spec, eta)) <= tol);
    }
  }
}

TEST_CASE("Fenchel-Young inequality with equality at mu") {
  constexpr double tol = 1e-12;
  for (double alpha : {1.5, 2.0, 3.0, 4.0}) {
    const WeightSpec spec = WeightSpec::profile(alpha);
    for (double eta = -6.0; eta <= 6.0; eta += 0.75) {
      const double conj = young_conjugate_closed(spec, eta);
      for (double x = 0.0; x <= 6.0; x += 0.25) {
        CHECK(x * std::abs(eta) <= eval_profile(spec, x) + conj + tol * (1.0 + conj));
      }
      const double mu = inverse_derivative(spec, eta);
      CHECK(mu * std::abs(eta) == Approx(eval_profile(spec, mu) + conj).epsilon(1e-12));
    }
  }
}

TEST_CASE("conjugate is convex on a grid") {
  for (double alpha : {1.5, 2.0, 3.0, 4.0}) {
    const WeightSpec spec = WeightSpec::profile(alpha);
    const double h = 0.1;
    for (double eta = -5.0; eta <= 5.0; eta += h) {
      const double second = young_conjugate_numeric(spec, eta - h, 1e-11) - 2.0 * young_conjugate_numeric(spec, eta, 1e-11) +
                            young_conjugate_numeric(spec, eta + h, 1e-11);
      CHECK(second >= -1e-9);
    }
  }
}

TEST_CASE("double conjugation recovers p") {
  for (double alpha : {1.5, 2.0, 3.0, 4.0}) {
    const WeightSpec spec = WeightSpec::profile(alpha);
    const WeightSpec dual = conjugate_weight(spec);
    CHECK(dual.conjugate_alpha() == Approx(alpha));
    for (double r = 0.0; r <= 3.0; r += 0.3) {
      CHECK(std::abs(young_conjugate_numeric(dual, r, 1e-10) - eval_profile(spec, r)) <= 1e-9);
    }
  }
}

TEST_CASE("inverse derivative") {
  CHECK(inverse_derivative(WeightSpec::profile(3), 4.0) == Approx(2.0));
  CHECK(inverse_derivative(WeightSpec::profile(2), 3.0) == Approx(3.0));
  CHECK(inverse_derivative(WeightSpec::profile(5), 0.0) == 0.0);
  for (double eta = 0.0; eta <= 7.0; eta += 0.5) {
    const WeightSpec spec = WeightSpec::profile(2.7);
    CHECK(weight_derivatives(spec, inverse_derivative(spec, eta)).first == Approx(eta));
  }
}

TEST_CASE("weight spec construction and parsing") {
  CHECK_THROWS_AS(WeightSpec::profile(1.0), DomainError);
  CHECK_THROWS_AS(WeightSpec::profile(1.0 + 1e-9), DomainError);
  CHECK_NOTHROW(WeightSpec::profile(1.0 + 1e-6));
  CHECK_THROWS_AS(WeightSpec::radial(0.0), DomainError);
  CHECK_THROWS_AS(WeightSpec::radial(-1.0), DomainError);

  CHECK(parse_weight("radial:alpha=2") == WeightSpec::radial(2));
  CHECK(parse_weight("profile:alpha=3.5") == WeightSpec::profile(3.5));
  CHECK(parse_weight("gaussian") == WeightSpec::gaussian());
  CHECK(parse_weight("gaussian").alpha() == 2.0);
  for (const WeightSpec& s : {WeightSpec::radial(0.75), WeightSpec::profile(4), WeightSpec::gaussian()}) {
    CHECK(parse_weight(s.to_string()) == s);
  }

  for (const char* bad : {"", "radial", "radial:alpha=", "radial:alpha=x", "radial:beta=2", "Radial:alpha=2",
                          "gaussian:alpha=2", "profile:alpha=2 ", " gaussian", "radial:alpha=2,3", "heat"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_weight(bad), UsageError);
  }
  CHECK_THROWS_AS(parse_weight("profile:alpha=0.5"), DomainError);
  CHECK_THROWS_AS(parse_weight("radial:alpha=0"), DomainError);
}
