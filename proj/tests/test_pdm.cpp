#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "swkb/error.hpp"
#include "swkb/pdm.hpp"

using namespace swkb::pdm;
using oracle::kPi;

namespace {

DeformedModel dho(double omega, double alpha, double mass = 1.0) {
  return make_deformed(DeformedKind::deformed_ho, {{"omega", omega}, {"alpha", alpha}}, mass);
}
DeformedModel semi(double omega, double x0, double mass = 1.0) {
  return make_deformed(DeformedKind::semi_confined_ho, {{"omega", omega}, {"x0", x0}}, mass);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1.0);
  return v;
}

}  // namespace

TEST_CASE("construction") {
  CHECK(dho(1, 0).exact_energy(3) == doctest::Approx(6.0));
  CHECK(dho(1, 0.1).exact_energy(2) == doctest::Approx(4.4));
  CHECK(semi(2, 1).exact_energy(3) == doctest::Approx(12.0));
  CHECK(dho(1, 0.3).exact_energy(0) == 0.0);
  CHECK_THROWS_AS(dho(-1, 0.1), swkb::ParameterError);
  CHECK_THROWS_AS(dho(1, -0.1), swkb::ParameterError);
  CHECK_THROWS_AS(semi(1, 0), swkb::ParameterError);
  CHECK_THROWS_AS(make_deformed(DeformedKind::deformed_ho, {{"omega", 1}, {"x0", 1}}), swkb::ParameterError);
  CHECK_THROWS_AS(make_deformed(DeformedKind::custom, {}), swkb::CapabilityError);
  CHECK(parse_kind("semi-confined") == DeformedKind::semi_confined_ho);
  CHECK(parse_kind("deformed-ho") == DeformedKind::deformed_ho);
  const auto s = semi(1, 2);
  CHECK(s.domain.lo == -2.0);
  for (double x : {-1.9, 0.0, 5.0}) CHECK(s.eta(x) > 0.0);
}

TEST_CASE("integral examples") {
  CHECK(std::abs(deformed_swkb_integral(dho(1, 0.1), 2) - 2 * kPi) < 1e-8);
  CHECK(std::abs(deformed_swkb_integral(semi(1, 2), 3) - 3 * kPi) < 1e-8);
  CHECK(deformed_swkb_integral(dho(1, 0.1), 0) == 0.0);
  CHECK(std::abs(ordinary_swkb_integral(dho(1, 0.1), 2) - 2.2 * kPi) < 1e-8);
  CHECK(std::abs(ordinary_swkb_integral(dho(2, 0.5), 4) - 6 * kPi) < 1e-8);
  for (int n = 0; n <= 4; ++n) CHECK(std::abs(ordinary_swkb_integral(dho(1.7, 0), n) - n * kPi) < 1e-8);
}

TEST_CASE("exactness and the printed deviation over the grids") {
  for (double omega : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.0, 0.05, 0.2}) {
      const auto m = dho(omega, alpha);
      const auto flat = flatten(m);
      for (int n = 0; n <= 8; ++n) {
        INFO("omega=" << omega << " alpha=" << alpha << " n=" << n);
        const double d = deformed_swkb_integral(m, n);
        CHECK(std::abs(d - n * kPi) <= 1e-8 * (1 + n * kPi));
        const double expect = n * kPi * (1 + n * alpha / (2 * omega));
        CHECK(std::abs(ordinary_swkb_integral(m, n) - expect) <= 1e-8 * std::max(1.0, expect));
        CHECK(std::abs(flat_swkb_integral(m, flat, n) - d) <= 1e-8);
        if (n > 0) {
          // Independent quadrature between the closed-form turning points.
          const double E = m.exact_energy(n), t = std::sqrt(E) / omega;
          const double ref = oracle::integrate(
              [&](double x) { return std::sqrt(std::max(0.0, E - omega * omega * x * x)) / (1 + alpha * x * x); },
              -t, t);
          CHECK(std::abs(d - ref) <= 1e-9 * (1 + n * kPi));
        }
      }
    }
  }
  for (double omega : {0.5, 1.0, 2.0}) {
    for (double x0 : {0.5, 1.0, 2.0}) {
      const auto m = semi(omega, x0);
      const auto flat = flatten(m);
      for (int n = 0; n <= 8; ++n) {
        INFO("omega=" << omega << " x0=" << x0 << " n=" << n);
        const double d = deformed_swkb_integral(m, n);
        CHECK(std::abs(d - n * kPi) <= 1e-8 * (1 + n * kPi));
        CHECK(std::abs(flat_swkb_integral(m, flat, n) - d) <= 1e-8);
      }
    }
  }
}

TEST_CASE("limits and mass scaling") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(std::abs(deformed_swkb_integral(dho(1, 1e-6), n) - deformed_swkb_integral(dho(1, 0), n)) < 1e-4);
    CHECK(std::abs(ordinary_swkb_integral(dho(1, 1e-6), n) - ordinary_swkb_integral(dho(1, 0), n)) < 1e-4);
    const double c = 4.0;
    CHECK(deformed_swkb_integral(dho(1, 0.2, c), n) ==
          doctest::Approx(std::sqrt(c) * deformed_swkb_integral(dho(1, 0.2), n)).epsilon(1e-10));
    CHECK(ordinary_swkb_integral(semi(1, 1, c), n) ==
          doctest::Approx(std::sqrt(c) * ordinary_swkb_integral(semi(1, 1), n)).epsilon(1e-10));
  }
}

TEST_CASE("deformed shape invariance") {
  const auto grid = linspace(-4, 4, 200);
  const auto m = dho(1, 0.1);
  const auto partner = deformed_shift(m);
  CHECK(partner.params.at("omega") == doctest::Approx(1.1));
  const auto r = deformed_si_residual(m, partner, grid);
  CHECK(r.spread < 1e-10);
  CHECK(r.mean == doctest::Approx(m.exact_energy(1)).epsilon(1e-10));

  const auto flat = deformed_si_residual(dho(1, 0), dho(1, 0), grid);
  CHECK(flat.spread < 1e-12);
  CHECK(flat.mean == doctest::Approx(2.0));

  CHECK_THROWS_AS(deformed_si_residual(dho(1, 0.1), dho(1.1, 0.2), grid), swkb::ParameterError);
  CHECK_THROWS_AS(deformed_si_residual(dho(1, 0.1), semi(1, 1), grid), swkb::ParameterError);

  for (double omega : {0.5, 1.0, 2.0}) {
    for (double alpha : {0.0, 0.05, 0.2}) {
      const auto a = dho(omega, alpha);
      const auto s = deformed_si_residual(a, deformed_shift(a), grid);
      CHECK(s.spread < 1e-10);
      CHECK(s.mean == doctest::Approx(a.exact_energy(1)).epsilon(1e-10));
    }
  }
}

TEST_CASE("flattening map") {
  const double alpha = 0.1;
  const auto f = flatten(dho(1, alpha));
  for (double x : {-3.0, -0.5, 0.0, 1.2, 4.0}) {
    CHECK(f.z_of_x(x) == doctest::Approx(std::atan(std::sqrt(alpha) * x) / std::sqrt(alpha)).epsilon(1e-12));
    CHECK(f.x_of_z(f.z_of_x(x)) == doctest::Approx(x).epsilon(1e-10));
    // w = -W / kappa and U = V / kappa^2 with kappa = 1.
    CHECK(f.w(f.z_of_x(x)) == doctest::Approx(-x).epsilon(1e-10));
  }
  const auto id = flatten(dho(1, 0));
  for (double x : {-2.0, 0.7}) CHECK(id.z_of_x(x) == doctest::Approx(x).epsilon(1e-12));

  const double x0 = 1.0;
  const auto s = flatten(semi(1, x0));
  double last = -1e300;
  for (double x : {-0.9, -0.5, 0.0, 1.0, 3.0, 8.0}) {
    const double z = s.z_of_x(x);
    // Antiderivative of sqrt(x0 / (x + x0)) vanishing at x = 0.
    CHECK(z == doctest::Approx(2 * std::sqrt(x0) * (std::sqrt(x + x0) - std::sqrt(x0))).epsilon(1e-10));
    CHECK(z > last);
    last = z;
  }

  const auto k2 = flatten(dho(1, alpha), 2.0);
  CHECK(k2.epsilon(3) == doctest::Approx(dho(1, alpha).exact_energy(3) / 4.0));
  CHECK(k2.z_of_x(1.0) == doctest::Approx(2.0 * f.z_of_x(1.0)));
  CHECK_THROWS_AS(flatten(dho(1, alpha), -1.0), swkb::ParameterError);
}
