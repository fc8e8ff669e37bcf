#pragma once

#include <cstddef>
#include <functional>

namespace swkb::numerics {

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr double kDefaultQuadTol = 1e-10;
// Round-off floor below which a negative radicand is treated as zero.
inline constexpr double kClampFloor = 1e-13;

// Interval [lo, hi] with f(lo) * f(hi) <= 0.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

/// Evaluates f at both ends and validates the sign change.
Bracket make_bracket(const RealFunction& f, double lo, double hi);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  // Evaluations where the radicand fell below -kClampFloor and was clamped.
  std::size_t clamped = 0;
};

/// Root of f inside the bracket; the final bracket width is at most
/// tol * (1 + |r|). TOMS 748 with bisection steps, so convergence is
/// guaranteed for continuous f.
double find_root(const RealFunction& f, const Bracket& bracket, double tol = kDefaultRootTol);

/// Integral of sqrt(Q) over [a, b] where Q has simple zeros at both ends and
/// is positive inside. The endpoint square-root behaviour is removed by
/// x = a + (b - a) sin^2(theta) before adaptive Gauss-Kronrod on [0, pi/2].
QuadratureResult integrate_sqrt_bracket(const RealFunction& radicand, double a, double b,
                                        double tol = kDefaultQuadTol);

/// Globally adaptive Gauss-Kronrod (7/15) on a finite interval. Stops when the
/// summed error estimate is at most tol * (1 + |value|).
QuadratureResult integrate_smooth(const RealFunction& f, double a, double b,
                                  double tol = kDefaultQuadTol);

}  // namespace swkb::numerics
