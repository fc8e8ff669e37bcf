#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "swkb/numerics.hpp"

namespace swkb::natanzon {

enum class NatanzonClass { laguerre, jacobi };

std::string_view to_string(NatanzonClass c);
NatanzonClass parse_class(std::string_view tag);  // "L", "J", "laguerre", "jacobi"

// Laguerre class: f(z)^2 = A/z^2 + B z^2 + C and g(z) = D/z^2 + F z^2 + G on z > 0.
// Jacobi class:   f(z)^2 = A/sin^2 z + B/cos^2 z + C, g(z) = D/sin^2 z + F/cos^2 z + G
//                 on 0 < z < pi/2.
struct NatanzonParams {
  NatanzonClass cls = NatanzonClass::laguerre;
  double A = 0.0;
  double B = 0.0;
  double C = 1.0;
  double D = 0.0;
  double F = 0.0;
  double G = 0.0;
};

/// Throws ParameterError unless A, B >= 0 and f^2 > 0 on the whole domain.
void validate(const NatanzonParams& nat);

// Parameters of the underlying canonical system at a trial energy. Laguerre
// uses (omega, g), Jacobi uses (g, h).
struct EffectiveParams {
  double omega = 0.0;
  double g = 0.0;
  double h = 0.0;
};

/// omega^2 = F - B E and g (g - 1) = D - A E with g >= 1/2; for Jacobi
/// h (h - 1) = F - B E likewise.
EffectiveParams effective_params(const NatanzonParams& nat, double E);

/// Supremum of trial energies with valid effective parameters (+inf if none).
double energy_ceiling(const NatanzonParams& nat);

/// Phi(E) whose zero is the level-n eigenvalue.
double spectral_function(const NatanzonParams& nat, int n, double E);

double natanzon_exact_energy(const NatanzonParams& nat, int n);

/// Canonical SWKB integral at the effective parameters with the canonical
/// level-n energy. Equals n*pi for every admissible E.
double natanzon_extended_swkb(const NatanzonParams& nat, int n, double E,
                              double tol = numerics::kDefaultQuadTol);

/// Energy at which the canonical integral, taken at the effective parameters
/// and at the energy eps(E) = E C - G - (ground offset), equals n*pi.
double natanzon_solve_swkb_energy(const NatanzonParams& nat, int n,
                                  double tol = numerics::kDefaultQuadTol);

double f_of_z(const NatanzonParams& nat, double z);

/// x(z) with x(z0) = 0 at z0 = 1 (Laguerre) or pi/4 (Jacobi).
double natanzon_x_of_z(const NatanzonParams& nat, double z);

/// x-space superpotential W_x(z) = -(1/f) d/dz ln(sqrt(f) phi_0(z)).
double naive_superpotential(const NatanzonParams& nat, double z);

/// Ordinary SWKB integral of sqrt(E_n - E_0 - W_x^2) dx, evaluated in z.
double natanzon_naive_swkb(const NatanzonParams& nat, int n,
                           double tol = numerics::kDefaultQuadTol);

struct CurvePoint {
  double z;
  double x;
  double V;
};

/// Samples of the potential, shifted so the ground level sits at zero.
std::vector<CurvePoint> natanzon_potential_curve(const NatanzonParams& nat,
                                                 std::span<const double> z_grid);

}  // namespace swkb::natanzon
