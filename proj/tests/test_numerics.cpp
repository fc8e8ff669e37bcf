#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "swkb/error.hpp"
#include "swkb/numerics.hpp"

using namespace swkb::numerics;
using oracle::kPi;

TEST_CASE("find_root examples") {
  auto f = [](double x) { return x * x - 2.0; };
  CHECK(find_root(f, make_bracket(f, 1.0, 2.0), 1e-12) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  auto c = [](double x) { return std::cos(x); };
  CHECK(find_root(c, make_bracket(c, 1.0, 2.0)) == doctest::Approx(kPi / 2).epsilon(1e-12));
  // Left turning point of the radial oscillator, omega = 1, g = 2, E = 4.
  auto w = [](double x) {
    const double W = x - 2.0 / x;
    return W * W - 4.0;
  };
  CHECK(std::abs(find_root(w, make_bracket(w, 0.1, 1.8)) - (std::sqrt(3.0) - 1.0)) < 1e-11);
}

TEST_CASE("find_root errors") {
  auto f = [](double x) { return x * x + 1.0; };
  CHECK_THROWS_AS(make_bracket(f, -1.0, 1.0), swkb::BracketError);
  auto g = [](double x) { return x < 0.5 ? -1.0 : std::nan(""); };
  CHECK_THROWS_AS(make_bracket(g, 0.0, 1.0), swkb::EvaluationError);
}

TEST_CASE("find_root stays inside the bracket") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double r = u(rng);
    const double lo = r - std::abs(u(rng)) - 1e-3, hi = r + std::abs(u(rng)) + 1e-3;
    auto f = [r](double x) { return std::atan(x - r) + 0.1 * (x - r) * (x - r) * (x - r); };
    const double x = find_root(f, make_bracket(f, lo, hi), 1e-13);
    CHECK(x >= lo);
    CHECK(x <= hi);
    CHECK(std::abs(x - r) < 1e-11);
  }
}

TEST_CASE("integrate_sqrt_bracket examples") {
  auto semi = [](double x) { return 1.0 - x * x; };
  CHECK(integrate_sqrt_bracket(semi, -1.0, 1.0).value == doctest::Approx(kPi / 2).epsilon(1e-13));
  const double r6 = std::sqrt(6.0);
  auto ho = [](double x) { return 2.0 * 3.0 - x * x; };
  CHECK(integrate_sqrt_bracket(ho, -r6, r6).value == doctest::Approx(3.0 * kPi).epsilon(1e-12));
  auto rad = [](double x) {
    const double w = x - 2.0 / x;
    return 4.0 - w * w;
  };
  const double s3 = std::sqrt(3.0);
  CHECK(integrate_sqrt_bracket(rad, s3 - 1.0, s3 + 1.0).value == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("integrate_sqrt_bracket detects wrong turning points") {
  // Q negative in the middle of the interval means the bracket is not a
  // classically allowed region.
  auto q = [](double x) { return x * x - 0.25; };
  CHECK_THROWS_AS(integrate_sqrt_bracket(q, -1.0, 1.0), swkb::IntegrandSignError);
}

TEST_CASE("quadratic radicands are integrated exactly") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 20; ++i) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) b = a + 1.0;
    auto q = [a, b](double x) { return (x - a) * (b - x); };
    const double exact = kPi * (b - a) * (b - a) / 8.0;
    CHECK(std::abs(integrate_sqrt_bracket(q, a, b).value - exact) <= 1e-12 * exact);
  }
}

TEST_CASE("scaling covariance") {
  auto q = [](double x) {
    const double w = std::sinh(x) - 0.3;
    return 2.0 - w * w;
  };
  auto root = [&](double lo, double hi) { return find_root(q, make_bracket(q, lo, hi), 1e-15); };
  const double a = root(-2.0, 0.2), b = root(0.5, 3.0);
  const double base = integrate_sqrt_bracket(q, a, b, 1e-13).value;
  for (double c : {0.1, 3.0, 17.0}) {
    auto scaled = [&](double x) { return c * c * q(x); };
    CHECK(std::abs(integrate_sqrt_bracket(scaled, a, b, 1e-13).value - c * base) <= 1e-12 * c * base);
  }
  // Independent double-exponential rule on the same integrand.
  CHECK(std::abs(base - oracle::integrate([&](double x) { return std::sqrt(std::max(0.0, q(x))); }, a, b)) <
        1e-11);
}

TEST_CASE("integrate_smooth examples") {
  CHECK(integrate_smooth([](double) { return 1.0; }, 0.0, 2.0).value == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(integrate_smooth([](double x) { return std::exp(-x * x); }, -8.0, 8.0).value -
                 std::sqrt(kPi)) < 1e-10);
  // phi_0 phi_1 of the oscillator: odd.
  auto odd = [](double x) { return std::exp(-x * x) * 2.0 * x; };
  CHECK(std::abs(integrate_smooth(odd, -10.0, 10.0).value) < 1e-10);
}

TEST_CASE("integrate_smooth reports evaluations and refuses the impossible") {
  const auto r = integrate_smooth([](double x) { return std::cos(x); }, 0.0, 1.0);
  CHECK(r.evaluations >= 15);
  CHECK(r.error_estimate <= 1e-10);
  // Infinitely many oscillations near 0 defeat any finite refinement.
  try {
    integrate_smooth([](double x) { return std::sin(1.0 / x) / x; }, 0.0, 1.0, 1e-14);
    FAIL("expected an accuracy error");
  } catch (const swkb::AccuracyError& e) {
    CHECK(std::isfinite(e.best_estimate));
  }
  CHECK_THROWS_AS(integrate_smooth([](double x) { return 1.0 / x; }, 0.0, 1.0), swkb::EvaluationError);
}
