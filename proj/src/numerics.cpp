#include "swkb/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "swkb/error.hpp"

namespace swkb::numerics {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

constexpr std::size_t kMaxSegments = 4000;
constexpr std::uintmax_t kMaxRootIterations = 300;

double checked(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg << "non-finite function value " << y << " at x=" << x;
    throw EvaluationError(msg.str());
  }
  return y;
}

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

// 15-point Kronrod estimate on [a, b] with the embedded 7-point Gauss rule as
// the error indicator. Node tables come from Boost.
Segment kronrod_segment(const RealFunction& f, double a, double b, std::size_t& evals) {
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double f0 = checked(f, mid);
  double kronrod = f0 * wk[0];
  double gauss = f0 * wg[0];
  ++evals;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double fp = checked(f, mid + half * x[i]);
    const double fm = checked(f, mid - half * x[i]);
    evals += 2;
    kronrod += (fp + fm) * wk[i];
    // Gauss nodes sit at the even Kronrod indices.
    if (i % 2 == 0) gauss += (fp + fm) * wg[i / 2];
  }
  const double value = kronrod * half;
  const double err = std::max(std::abs((kronrod - gauss) * half),
                              2.0 * std::numeric_limits<double>::epsilon() * std::abs(value));
  return {a, b, value, err};
}

}  // namespace

Bracket make_bracket(const RealFunction& f, double lo, double hi) {
  if (!(lo < hi)) {
    std::ostringstream msg;
    msg << "bracket requires lo < hi (got [" << lo << ", " << hi << "])";
    throw BracketError(msg.str());
  }
  const double f_lo = checked(f, lo);
  const double f_hi = checked(f, hi);
  if (f_lo * f_hi > 0.0) {
    std::ostringstream msg;
    msg << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << f_lo << ", f(hi)=" << f_hi;
    throw BracketError(msg.str());
  }
  return {lo, hi, f_lo, f_hi};
}

double find_root(const RealFunction& f, const Bracket& bracket, double tol) {
  if (!(bracket.lo < bracket.hi) || bracket.f_lo * bracket.f_hi > 0.0) {
    throw BracketError("invalid bracket passed to find_root");
  }
  if (!(tol > 0.0)) throw ParameterError("root tolerance must be positive");
  if (bracket.f_lo == 0.0) return bracket.lo;
  if (bracket.f_hi == 0.0) return bracket.hi;

  auto g = [&f](double x) { return checked(f, x); };
  auto done = [tol](double a, double b) {
    return std::abs(b - a) <= tol * (1.0 + std::min(std::abs(a), std::abs(b)));
  };
  std::uintmax_t iterations = kMaxRootIterations;
  const auto [lo, hi] = boost::math::tools::toms748_solve(g, bracket.lo, bracket.hi, bracket.f_lo,
                                                          bracket.f_hi, done, iterations);
  if (lo == hi) return lo;
  if (!done(lo, hi)) {
    std::ostringstream msg;
    msg << "root finder stalled on [" << lo << ", " << hi << "] after " << iterations
        << " iterations";
    throw AccuracyError(msg.str(), 0.5 * (lo + hi), hi - lo);
  }
  return std::clamp(0.5 * (lo + hi), bracket.lo, bracket.hi);
}

QuadratureResult integrate_smooth(const RealFunction& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw ParameterError("quadrature tolerance must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_smooth needs finite limits; truncate decaying integrands");
  }
  if (a == b) return {};
  const double sign = a < b ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  QuadratureResult result;
  std::vector<Segment> heap;
  auto by_error = [](const Segment& l, const Segment& r) { return l.error < r.error; };
  heap.push_back(kronrod_segment(f, a, b, result.evaluations));
  double value = heap.front().value;
  double error = heap.front().error;

  while (error > tol * (1.0 + std::abs(value))) {
    if (heap.size() >= kMaxSegments) {
      std::ostringstream msg;
      msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << value
          << " +- " << error;
      throw AccuracyError(msg.str(), sign * value, error);
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      throw AccuracyError("quadrature segment collapsed below machine resolution", sign * value,
                          error);
    }
    const Segment left = kronrod_segment(f, worst.a, mid, result.evaluations);
    const Segment right = kronrod_segment(f, mid, worst.b, result.evaluations);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);

    // Re-sum rather than update incrementally to keep round-off out of the test.
    value = 0.0;
    error = 0.0;
    for (const auto& s : heap) {
      value += s.value;
      error += s.error;
    }
  }
  result.value = sign * value;
  result.error_estimate = error;
  return result;
}

QuadratureResult integrate_sqrt_bracket(const RealFunction& radicand, double a, double b,
                                        double tol) {
  if (!(a < b)) {
    std::ostringstream msg;
    msg << "integration limits must satisfy a < b (got " << a << ", " << b << ")";
    throw DomainError(msg.str());
  }
  const double width = b - a;

  std::array<double, 7> probes{};
  double q_scale = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    probes[i] = checked(radicand, a + width * (i + 1.0) / (probes.size() + 1.0));
    q_scale = std::max(q_scale, std::abs(probes[i]));
  }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (probes[i] < -kClampFloor * (1.0 + q_scale)) {
      std::ostringstream msg;
      msg << "radicand negative inside [" << a << ", " << b << "]: Q("
          << a + width * (i + 1.0) / (probes.size() + 1.0) << ")=" << probes[i]
          << "; turning points are wrong";
      throw IntegrandSignError(msg.str());
    }
  }

  std::size_t clamped = 0;
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    // Measure from the nearer endpoint so x stays accurate at both ends.
    const double x = theta < 0.25 * std::numbers::pi ? a + width * s * s : b - width * c * c;
    double q = checked(radicand, x);
    if (q < 0.0) {
      if (q < -kClampFloor) ++clamped;
      q = 0.0;
    }
    return std::sqrt(q) * width * 2.0 * s * c;
  };
  QuadratureResult result = integrate_smooth(integrand, 0.0, 0.5 * std::numbers::pi, tol);
  result.evaluations += probes.size();
  result.clamped = clamped;
  return result;
}

}  // namespace swkb::numerics
