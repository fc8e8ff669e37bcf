#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "swkb/catalog.hpp"
#include "swkb/numerics.hpp"

namespace swkb::pdm {

enum class DeformedKind { deformed_ho, semi_confined_ho, custom };

std::string_view to_string(DeformedKind k);
DeformedKind parse_kind(std::string_view tag);  // accepts dashed spellings and "semi-confined"

// A position-dependent-mass system H = A^dagger A with A = sqrt(eta) d/dx
// sqrt(eta) / sqrt(2 m0) + W. Energies do not depend on mass_scale = 2 m0;
// the SWKB integrals scale as sqrt(mass_scale).
struct DeformedModel {
  DeformedKind kind = DeformedKind::custom;
  std::map<std::string, double> params;
  numerics::RealFunction W;
  numerics::RealFunction W_prime;
  numerics::RealFunction eta;
  numerics::RealFunction eta_prime;
  std::function<double(int)> exact_energy;
  double mass_scale = 1.0;
  catalog::Domain domain{};
  double w_zero = 0.0;
};

/// deformed_ho: {omega, alpha}; semi_confined_ho: {omega, x0}.
DeformedModel make_deformed(DeformedKind kind, const std::map<std::string, double>& params,
                            double mass_scale = 1.0);

/// Integral of sqrt(2 m0 (E_n - W^2)) / eta between the turning points.
double deformed_swkb_integral(const DeformedModel& model, int n,
                              double tol = numerics::kDefaultQuadTol);

/// Same integrand without the 1/eta weight.
double ordinary_swkb_integral(const DeformedModel& model, int n,
                              double tol = numerics::kDefaultQuadTol);

/// [W^2 + eta W'/sqrt(2 m0)](x; a) - [W^2 - eta W'/sqrt(2 m0)](x; f(a)).
catalog::ResidualStats deformed_si_residual(const DeformedModel& model,
                                            const DeformedModel& shifted,
                                            std::span<const double> grid);

/// The partner deformed_ho obtained by solving the constancy requirement on
/// the residual for the shifted omega.
DeformedModel deformed_shift(const DeformedModel& model);

struct FlattenedSystem {
  double kappa = 1.0;
  numerics::RealFunction z_of_x;  // kappa * integral_0^x dx / eta
  numerics::RealFunction x_of_z;
  numerics::RealFunction w;       // -W(x(z)) / kappa
  numerics::RealFunction U;       // V(x(z)) / kappa^2
  std::function<double(int)> epsilon;  // E_n / kappa^2
};

FlattenedSystem flatten(const DeformedModel& model, double kappa = 1.0);

/// Integral of sqrt(2 m0 (eps_n - w(z)^2)) dz between z(a) and z(b).
double flat_swkb_integral(const DeformedModel& model, const FlattenedSystem& flat, int n,
                          double tol = numerics::kDefaultQuadTol);

}  // namespace swkb::pdm
