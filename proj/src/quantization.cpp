#include "swkb/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "swkb/error.hpp"

namespace swkb::quantization {

namespace {

constexpr int kMaxScanSteps = 1100;

// Locate the crossing of W^2 - E between the zero of W and one domain edge.
// `dir` is +1 toward hi and -1 toward lo.
double scan_side(const SuperpotentialView& v, double E, int dir) {
  const double edge = dir > 0 ? v.hi : v.lo;
  const auto& plateau = dir > 0 ? v.plateau_hi : v.plateau_lo;
  if (plateau && E >= *plateau) {
    std::ostringstream msg;
    msg << "E=" << E << " is not below the asymptotic value " << *plateau << " of W^2 toward the "
        << (dir > 0 ? "upper" : "lower") << " edge; a turning point escapes";
    throw PlateauError(msg.str());
  }
  auto g = [&](double x) {
    const double w = v.w(x);
    return w * w - E;
  };

  const bool finite_edge = std::isfinite(edge);
  const double reach = finite_edge ? std::abs(edge - v.zero) : 0.0;
  const double step0 = 1e-3 * (1.0 + std::abs(v.zero));

  double prev = v.zero;
  for (int k = 0; k < kMaxScanSteps; ++k) {
    double cur;
    if (finite_edge) {
      // Halve the remaining distance to the edge, starting from the midpoint.
      cur = edge - dir * reach * std::ldexp(1.0, -(k + 1));
      if (cur == edge || cur == prev) break;
    } else {
      cur = v.zero + dir * step0 * std::ldexp(1.0, k);
      if (!std::isfinite(cur)) break;
    }
    double gc = g(cur);
    // Pull back toward prev when the superpotential overflows.
    for (int tries = 0; !std::isfinite(gc) && tries < 200; ++tries) {
      cur = 0.5 * (prev + cur);
      gc = g(cur);
    }
    if (!std::isfinite(gc)) {
      throw EvaluationError("superpotential is not finite near the turning point search");
    }
    if (gc >= 0.0) {
      const double lo = std::min(prev, cur);
      const double hi = std::max(prev, cur);
      const auto bracket = numerics::make_bracket(g, lo, hi);
      return numerics::find_root(g, bracket, kTurningPointTol);
    }
    prev = cur;
  }
  std::ostringstream msg;
  msg << "no turning point for E=" << E << " before the " << (dir > 0 ? "upper" : "lower")
      << " domain edge";
  throw DomainEdgeError(msg.str());
}

}  // namespace

SuperpotentialView view_of(const catalog::PotentialModel& model) {
  SuperpotentialView v;
  v.w = [&model](double x) { return model.W(x); };
  v.lo = model.domain().lo;
  v.hi = model.domain().hi;
  v.zero = model.w_zero();
  v.plateau_lo = model.plateau_lo();
  v.plateau_hi = model.plateau_hi();
  return v;
}

TurningPoints turning_points(const SuperpotentialView& view, double E) {
  if (!std::isfinite(E) || E < 0.0) {
    std::ostringstream msg;
    msg << "turning points need a finite E >= 0 (got " << E << ")";
    throw ParameterError(msg.str());
  }
  if (E == 0.0) return {view.zero, view.zero};
  return {scan_side(view, E, -1), scan_side(view, E, +1)};
}

TurningPoints turning_points(const catalog::PotentialModel& model, double E) {
  return turning_points(view_of(model), E);
}

numerics::QuadratureResult swkb_integral_detail(const catalog::PotentialModel& model, double E,
                                                double tol) {
  if (E == 0.0) return {};
  const TurningPoints tp = turning_points(model, E);
  auto q = [&model, E](double x) {
    const double w = model.W(x);
    return E - w * w;
  };
  return numerics::integrate_sqrt_bracket(q, tp.a, tp.b, tol);
}

double swkb_integral(const catalog::PotentialModel& model, double E, double tol) {
  return swkb_integral_detail(model, E, tol).value;
}

SwkbReport swkb_check(const catalog::PotentialModel& model, int n, double tol) {
  SwkbReport r;
  r.n = n;
  r.energy_exact = catalog::exact_energy(model, n);
  if (n > 0) {
    const auto q = swkb_integral_detail(model, r.energy_exact, tol);
    r.integral = q.value;
    r.clamped = q.clamped;
  }
  r.deviation = r.integral - n * std::numbers::pi;
  return r;
}

double swkb_solve_energy(const catalog::PotentialModel& model, int n, double tol) {
  if (n < 0) throw ParameterError("quantum number n must be >= 0");
  if (n == 0) return 0.0;
  const double target = n * std::numbers::pi;

  double cap = std::numeric_limits<double>::infinity();
  if (model.plateau_lo()) cap = std::min(cap, *model.plateau_lo());
  if (model.plateau_hi()) cap = std::min(cap, *model.plateau_hi());
  cap *= 1.0 - 1e-9;

  auto excess = [&](double E) { return swkb_integral(model, E, tol) - target; };

  const double scale = model.energy_shift();
  double upper = n * (scale > 0.0 ? scale : 1.0);
  double lower = 0.0;
  double f_upper = 0.0;
  // Double the guess; near a plateau, close half the remaining gap instead so
  // the turning points stay at moderate distance.
  for (int k = 0;; ++k) {
    if (upper >= cap) upper = 0.5 * (lower + cap);
    f_upper = excess(upper);
    if (f_upper >= 0.0) break;
    if (k > 200 || (std::isfinite(cap) && cap - upper <= 1e-12 * cap)) {
      std::ostringstream msg;
      msg << "no energy below " << upper << " gives the integral " << n << "*pi; level n=" << n
          << " lies beyond the bound states";
      throw SearchBoundError(msg.str());
    }
    lower = upper;
    upper *= 2.0;
  }
  const numerics::Bracket bracket{lower, upper, lower == 0.0 ? -target : excess(lower), f_upper};
  return numerics::find_root(excess, bracket, 1e-13);
}

}  // namespace swkb::quantization
