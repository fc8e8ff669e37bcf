#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "swkb/error.hpp"
#include "swkb/orthopoly.hpp"

using namespace swkb::orthopoly;

namespace {

double series(const CopFamily& f, int n, double x, double* mag) {
  switch (f.tag()) {
    case Family::hermite:
      return oracle::hermite_series(n, x, mag);
    case Family::laguerre:
      return oracle::laguerre_series(n, f.alpha(), x, mag);
    case Family::jacobi:
      return oracle::jacobi_series(n, f.alpha(), f.beta(), x, mag);
  }
  return 0.0;
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

TEST_CASE("spot values") {
  CHECK(eval_cop(CopFamily::hermite(), 0, 1.7) == 1.0);
  CHECK(eval_cop(CopFamily::hermite(), 2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval_cop(CopFamily::laguerre(1.5), 1, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(oracle::hermite_series(2, 1.0) == doctest::Approx(2.0));
  CHECK(oracle::laguerre_series(1, 1.5, 2.0) == doctest::Approx(0.5));
}

TEST_CASE("derivative spot values") {
  CHECK(eval_cop_derivative(CopFamily::hermite(), 0, 0.3) == 0.0);
  CHECK(eval_cop_derivative(CopFamily::hermite(), 3, 0.5) == doctest::Approx(-6.0).epsilon(1e-14));
  const auto j = CopFamily::jacobi(0.5, 0.5);
  const double fd = oracle::central_first([&](double x) { return eval_cop(j, 2, x); }, 0.0, 1e-5);
  CHECK(std::abs(eval_cop_derivative(j, 2, 0.0) - fd) < 1e-8);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(CopFamily::laguerre(-1.0), swkb::ParameterError);
  CHECK_THROWS_AS(CopFamily::jacobi(0.5, -1.5), swkb::ParameterError);
  CHECK_THROWS_AS(eval_cop(CopFamily::hermite(), -1, 0.0), swkb::ParameterError);
}

TEST_CASE("recurrence agrees with the explicit series") {
  std::mt19937_64 rng(7);
  const CopFamily fams[] = {CopFamily::hermite(), CopFamily::laguerre(0.0), CopFamily::laguerre(1.5),
                            CopFamily::laguerre(-0.3), CopFamily::jacobi(0.5, 0.5),
                            CopFamily::jacobi(-0.5, 2.5), CopFamily::jacobi(1.5, 3.5)};
  for (const auto& f : fams) {
    const double lo = f.tag() == Family::hermite ? -3.0 : f.tag() == Family::laguerre ? 0.0 : -1.0;
    const double hi = f.tag() == Family::hermite ? 3.0 : f.tag() == Family::laguerre ? 12.0 : 1.0;
    std::uniform_real_distribution<double> xs(lo, hi);
    for (int n = 0; n <= 8; ++n) {
      for (int i = 0; i < 50; ++i) {
        const double x = xs(rng);
        const double r = eval_cop(f, n, x);
        double mag = 0.0;
        const double s = series(f, n, x, &mag);
        // Relative to the term magnitudes: the series cancels near roots.
        INFO("family " << static_cast<int>(f.tag()) << " n=" << n << " x=" << x);
        CHECK(std::abs(r - s) <= 1e-10 * std::max({1.0, std::abs(s), mag}));
      }
    }
  }
}

TEST_CASE("high degree stays finite and consistent with neighbours") {
  // Beyond the series range, check the defining differential equations.
  // H'' - 2x H' + 2n H = 0.
  for (int n = 9; n <= 30; ++n) {
    for (double x : {-1.3, -0.2, 0.4, 1.1}) {
      auto h = [n](double t) { return eval_cop(CopFamily::hermite(), n, t); };
      const double d1 = eval_cop_derivative(CopFamily::hermite(), n, x);
      const double d2 = eval_cop_derivative(CopFamily::hermite(), n - 1, x) * 2.0 * n;
      const double lhs = d2 - 2.0 * x * d1 + 2.0 * n * h(x);
      const double scale = std::abs(d2) + std::abs(2.0 * x * d1) + std::abs(2.0 * n * h(x));
      CHECK(std::abs(lhs) <= 1e-11 * scale);
    }
  }
  for (int n = 9; n <= 30; ++n) {
    // x L'' + (a + 1 - x) L' + n L = 0, with L'' = L_{n-2}^{(a+2)}.
    const double a = 0.7;
    for (double x : {0.3, 2.0, 7.5}) {
      const double L = eval_cop(CopFamily::laguerre(a), n, x);
      const double L1 = eval_cop_derivative(CopFamily::laguerre(a), n, x);
      const double L2 = eval_cop(CopFamily::laguerre(a + 2.0), n - 2, x);
      const double lhs = x * L2 + (a + 1.0 - x) * L1 + n * L;
      CHECK(std::abs(lhs) <= 1e-10 * (std::abs(x * L2) + std::abs((a + 1.0 - x) * L1) + std::abs(n * L)));
    }
  }
  for (int n = 9; n <= 30; ++n) {
    // (1 - x^2) P'' + (b - a - (a + b + 2) x) P' + n (n + a + b + 1) P = 0.
    const double a = 0.5, b = 1.5;
    for (double x : {-0.8, 0.1, 0.6}) {
      auto d = [&](double t) { return eval_cop_derivative(CopFamily::jacobi(a, b), n, t); };
      const double P = eval_cop(CopFamily::jacobi(a, b), n, x);
      const double P1 = d(x);
      const double P2 = (n + a + b + 1.0) / 2.0 * eval_cop_derivative(CopFamily::jacobi(a + 1, b + 1), n - 1, x);
      const double terms[] = {(1 - x * x) * P2, (b - a - (a + b + 2) * x) * P1, n * (n + a + b + 1) * P};
      CHECK(std::abs(terms[0] + terms[1] + terms[2]) <=
            1e-10 * (std::abs(terms[0]) + std::abs(terms[1]) + std::abs(terms[2])));
    }
  }
}

TEST_CASE("derivative matches central differences") {
  const CopFamily fams[] = {CopFamily::hermite(), CopFamily::laguerre(0.5), CopFamily::jacobi(0.5, 1.5)};
  const double xs[] = {0.35, 0.8};
  for (const auto& f : fams) {
    for (int n = 0; n <= 10; ++n) {
      for (double x : xs) {
        const double fd = oracle::central_first([&](double t) { return eval_cop(f, n, t); }, x, 1e-5);
        const double d = eval_cop_derivative(f, n, x);
        CHECK(close_rel(d, fd, 1e-6));
      }
    }
  }
}

TEST_CASE("orthogonality under the family weights") {
  for (int m = 0; m <= 6; ++m) {
    for (int n = m + 1; n <= 6; ++n) {
      const double h = oracle::integrate_line([&](double x) {
        if (std::abs(x) > 38.0) return 0.0;
        return eval_cop(CopFamily::hermite(), m, x) * eval_cop(CopFamily::hermite(), n, x) * oracle::gauss(x);
      });
      const double a = 0.5;
      const double l = oracle::integrate_half_line(
          [&](double x) {
            if (x > 700.0) return 0.0;
            return eval_cop(CopFamily::laguerre(a), m, x) * eval_cop(CopFamily::laguerre(a), n, x) *
                   oracle::gamma_weight(x, a);
          },
          0.0);
      const double ja = 0.5, jb = 1.5;
      const double j = oracle::integrate(
          [&](double x) {
            return eval_cop(CopFamily::jacobi(ja, jb), m, x) * eval_cop(CopFamily::jacobi(ja, jb), n, x) *
                   std::pow(1.0 - x, ja) * std::pow(1.0 + x, jb);
          },
          -1.0, 1.0);
      INFO("m=" << m << " n=" << n);
      CHECK(std::abs(h) < 1e-7);
      CHECK(std::abs(l) < 1e-7);
      CHECK(std::abs(j) < 1e-7);
    }
  }
}
