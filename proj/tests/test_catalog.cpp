#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "sweep.hpp"
#include "swkb/catalog.hpp"
#include "swkb/error.hpp"

using namespace swkb::catalog;
using sweep::Point;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1.0);
  return v;
}

// Sample points strictly inside the domain, wide enough to cover the
// classically allowed region of the first levels.
std::vector<double> interior(const PotentialModel& m, int n) {
  const Domain d = m.domain();
  if (std::isfinite(d.lo) && std::isfinite(d.hi)) return linspace(d.lo + 1e-3, d.hi - 1e-3, n);
  if (std::isfinite(d.lo)) return linspace(d.lo + 1e-3, 20.0 * m.w_zero() + 10.0, n);
  return linspace(m.w_zero() - 8.0, m.w_zero() + 8.0, n);
}

double schrodinger_residual(const PotentialModel& m, int n, const std::vector<double>& grid) {
  const double E = exact_energy(m, n);
  double worst = 0.0, peak = 0.0;
  for (double x : grid) {
    auto psi = [&](double t) { return wavefunction(m, n, t); };
    const double p = psi(x);
    const double V = m.W(x) * m.W(x) - m.W_prime(x);
    const double r = -oracle::central_second(psi, x, 1e-4) + (V - E) * p;
    worst = std::max(worst, std::abs(r));
    peak = std::max(peak, std::abs(p));
  }
  return worst / peak;
}

}  // namespace

TEST_CASE("make_model examples") {
  const auto ho = make_model(FamilyId::ho_1d, {{"omega", 1.0}});
  CHECK(exact_energy(ho, 3) == doctest::Approx(6.0));
  CHECK_FALSE(ho.n_max().has_value());
  CHECK(std::isinf(ho.domain().lo));

  const auto morse = make_model(FamilyId::morse, {{"mu", 1.0}, {"h", 5.5}});
  REQUIRE(morse.n_max().has_value());
  CHECK(*morse.n_max() == 5);
  for (int n = 0; n <= 5; ++n) CHECK(exact_energy(morse, n) == doctest::Approx(2 * n * 5.5 - n * n));
  CHECK_THROWS_AS(exact_energy(morse, 6), swkb::NoBoundStateError);

  CHECK_THROWS_AS(make_model(FamilyId::radial_osc, {{"omega", 2.0}, {"g", 0.4}}), swkb::ParameterError);
}

TEST_CASE("parameter names are checked") {
  try {
    make_model(FamilyId::ho_1d, {{"omega", 1.0}, {"g", 2.0}});
    FAIL("unknown parameter accepted");
  } catch (const swkb::ParameterError& e) {
    CHECK(std::string(e.what()).find("accepted") != std::string::npos);
    CHECK(std::string(e.what()).find("omega") != std::string::npos);
  }
  CHECK_THROWS_AS(make_model(FamilyId::poschl_teller, {{"g", 2.0}}), swkb::ParameterError);
  try {
    make_model(FamilyId::ho_1d, {{"omega", -1.0}});
    FAIL("negative omega accepted");
  } catch (const swkb::ParameterError& e) {
    CHECK(std::string(e.what()).find("omega > 0") != std::string::npos);
  }
  CHECK(parse_family("ho-1d") == FamilyId::ho_1d);
  CHECK(parse_family("hyperbolic_top2") == FamilyId::hyperbolic_top2);
  CHECK_THROWS_AS(parse_family("square_well"), swkb::ParameterError);
}

TEST_CASE("superpotential examples") {
  CHECK(make_model(FamilyId::ho_1d, {{"omega", 2.0}}).W(3.0) == doctest::Approx(6.0));
  const auto r = make_model(FamilyId::radial_osc, {{"omega", 1.0}, {"g", 2.0}});
  CHECK(std::abs(r.W(std::sqrt(2.0))) < 1e-15);
  const auto pt = make_model(FamilyId::poschl_teller, {{"g", 1.0}, {"h", 1.0}});
  CHECK(std::abs(pt.W(std::numbers::pi / 4)) < 1e-15);
  CHECK_THROWS_AS(r.W(-1.0), swkb::DomainError);
  CHECK_THROWS_AS(pt.W(2.0), swkb::DomainError);
}

TEST_CASE("energy examples") {
  CHECK(exact_energy(make_model(FamilyId::ho_1d, {{"omega", 1.0}}), 4) == doctest::Approx(8.0));
  CHECK(exact_energy(make_model(FamilyId::poschl_teller, {{"g", 1.5}, {"h", 2.5}}), 2) == doctest::Approx(48.0));
}

TEST_CASE("wavefunction examples") {
  CHECK(wavefunction(make_model(FamilyId::ho_1d, {{"omega", 1.0}}), 0, 0.0) == doctest::Approx(1.0));
  CHECK(wavefunction(make_model(FamilyId::ho_1d, {{"omega", 1.0}}), 1, 0.0) == doctest::Approx(0.0));
  CHECK(wavefunction(make_model(FamilyId::radial_osc, {{"omega", 1.0}, {"g", 2.0}}), 0, 1.0) ==
        doctest::Approx(std::exp(-0.5)));
  CHECK_THROWS_AS(wavefunction(make_model(FamilyId::eckart, {{"mu", 9.0}, {"g_tilde", 1.2}}), 0, 1.0),
                  swkb::CapabilityError);
}

TEST_CASE("shape invariance examples") {
  const auto grid_r = linspace(-3.0, 3.0, 100);
  auto ho = shape_invariance_residual(make_model(FamilyId::ho_1d, {{"omega", 1.0}}), grid_r);
  CHECK(ho.stats.spread < 1e-12);
  CHECK(ho.stats.mean == doctest::Approx(2.0));
  const auto grid_h = linspace(0.2, 5.0, 100);
  auto rad = shape_invariance_residual(make_model(FamilyId::radial_osc, {{"omega", 1.0}, {"g", 2.0}}), grid_h);
  CHECK(rad.stats.spread < 1e-12);
  CHECK(rad.stats.mean == doctest::Approx(4.0));
  const auto grid_j = linspace(0.1, 1.4, 100);
  auto pt = shape_invariance_residual(make_model(FamilyId::poschl_teller, {{"g", 2.0}, {"h", 3.0}}), grid_j);
  CHECK(pt.stats.spread < 1e-12);
  // Independent: substitute (g, h) -> (g + 1, h + 1) by hand at x = 0.7.
  const double g = 2.0, h = 3.0, x = 0.7;
  auto W = [x](double gg, double hh) { return -gg / std::tan(x) + hh * std::tan(x); };
  auto Wp = [x](double gg, double hh) {
    return gg / (std::sin(x) * std::sin(x)) + hh / (std::cos(x) * std::cos(x));
  };
  const double by_hand = W(g, h) * W(g, h) + Wp(g, h) - W(g + 1, h + 1) * W(g + 1, h + 1) + Wp(g + 1, h + 1);
  CHECK(pt.stats.mean == doctest::Approx(by_hand).epsilon(1e-12));
  CHECK(pt.stats.mean == doctest::Approx(4.0 * (1.0 + g + h)));
}

TEST_CASE("sweep properties") {
  for (const auto& p : sweep::catalog_points()) {
    const auto m = make_model(p.family, p.params);
    INFO(to_string(p.family));
    CHECK(exact_energy(m, 0) == 0.0);
    const int top = sweep::top_level(m);
    for (int n = 0; n < top; ++n) CHECK(exact_energy(m, n + 1) > exact_energy(m, n));

    const auto grid = sweep::allowed_region(m, 400);
    const auto si = shape_invariance_residual(m, grid);
    CHECK(si.stats.spread < 1e-10);
    CHECK(si.stats.mean == doctest::Approx(exact_energy(m, 1)).epsilon(1e-12));

    int sign_changes = 0;
    const auto dense = interior(m, 4000);
    for (std::size_t i = 1; i < dense.size(); ++i) {
      if ((m.W(dense[i]) > 0) != (m.W(dense[i - 1]) > 0)) ++sign_changes;
    }
    CHECK(sign_changes == 1);
    CHECK(std::abs(m.W(m.w_zero())) < 1e-12 * (1.0 + std::abs(m.W(m.w_zero() + 0.1))));
  }
}

TEST_CASE("Schrodinger residuals of the closed-form eigenfunctions") {
  const Point cases[] = {
      {FamilyId::ho_1d, {{"omega", 1.0}}},
      {FamilyId::ho_1d, {{"omega", 2.5}}},
      {FamilyId::radial_osc, {{"omega", 1.0}, {"g", 2.0}}},
      {FamilyId::radial_osc, {{"omega", 0.5}, {"g", 0.8}}},
      {FamilyId::poschl_teller, {{"g", 1.0}, {"h", 1.0}}},
      {FamilyId::poschl_teller, {{"g", 2.0}, {"h", 3.0}}},
      {FamilyId::coulomb, {{"e2", 2.0}, {"g_tilde", 1.0}}},
      {FamilyId::morse, {{"mu", 1.0}, {"h", 6.5}}},
  };
  for (const auto& c : cases) {
    const auto m = make_model(c.family, c.params);
    const int top = sweep::top_level(m, 5);
    for (int n = 0; n <= top; ++n) {
      std::vector<double> grid;
      const Domain d = m.domain();
      if (c.family == FamilyId::coulomb) grid = linspace(0.05, 80.0, 60);
      else if (c.family == FamilyId::radial_osc) grid = linspace(0.05, 8.0, 60);
      else if (c.family == FamilyId::poschl_teller) grid = linspace(d.lo + 0.01, d.hi - 0.01, 60);
      else grid = interior(m, 60);
      INFO(to_string(c.family) << " n=" << n);
      CHECK(schrodinger_residual(m, n, grid) < 1e-5);
    }
  }
}

TEST_CASE("catalog listing") {
  const auto doc = nlohmann::json::parse(catalog_json());
  REQUIRE(doc.is_array());
  CHECK(doc.size() == all_families().size());
  CHECK(doc[0]["family"] == "ho_1d");
  CHECK(doc[2]["domain"][1] == "pi/2");
  for (const auto& f : doc) {
    CHECK(f.contains("parameters"));
    CHECK(f.contains("n_max_rule"));
    CHECK(f.contains("energy"));
  }
}
