#pragma once

#include <optional>

#include "swkb/catalog.hpp"
#include "swkb/numerics.hpp"

namespace swkb::quantization {

// Root tolerance used for turning points; tighter than the library default
// because the quadrature endpoints inherit it.
inline constexpr double kTurningPointTol = 1e-15;

struct TurningPoints {
  double a = 0.0;
  double b = 0.0;
};

// Everything the turning-point search needs from a superpotential: the
// function on an open interval, one point where it vanishes, and the limits
// of W^2 at edges where they are finite.
struct SuperpotentialView {
  numerics::RealFunction w;
  double lo = 0.0;
  double hi = 0.0;
  double zero = 0.0;
  std::optional<double> plateau_lo;
  std::optional<double> plateau_hi;
};

SuperpotentialView view_of(const catalog::PotentialModel& model);

/// The pair a < b with W(a)^2 = W(b)^2 = E, found by a geometric scan outward
/// from the zero of W and a bracketed root search on each side.
TurningPoints turning_points(const SuperpotentialView& view, double E);
TurningPoints turning_points(const catalog::PotentialModel& model, double E);

/// Integral of sqrt(E - W^2) between the turning points, with evaluation
/// counts and clamping statistics.
numerics::QuadratureResult swkb_integral_detail(const catalog::PotentialModel& model, double E,
                                                double tol = numerics::kDefaultQuadTol);

double swkb_integral(const catalog::PotentialModel& model, double E,
                     double tol = numerics::kDefaultQuadTol);

struct SwkbReport {
  int n = 0;
  double energy_exact = 0.0;
  double integral = 0.0;
  double deviation = 0.0;  // integral - n*pi
  std::optional<double> energy_swkb;
  std::optional<double> relative_energy_error;
  std::size_t clamped = 0;
};

SwkbReport swkb_check(const catalog::PotentialModel& model, int n,
                      double tol = numerics::kDefaultQuadTol);

/// Energy E with swkb_integral(model, E) = n*pi.
double swkb_solve_energy(const catalog::PotentialModel& model, int n,
                         double tol = numerics::kDefaultQuadTol);

}  // namespace swkb::quantization
