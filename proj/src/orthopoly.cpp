#include "swkb/orthopoly.hpp"

#include <cmath>
#include <sstream>

#include "swkb/error.hpp"

namespace swkb::orthopoly {

namespace {

void check_degree(int n) {
  if (n < 0) {
    std::ostringstream msg;
    msg << "polynomial degree must be >= 0 (got " << n << ")";
    throw ParameterError(msg.str());
  }
}

double hermite(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double a, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi(int n, double a, double b, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s;
    const double c2 = (s + 1.0) * (a * a - b * b);
    const double c3 = s * (s + 1.0) * (s + 2.0);
    const double c4 = 2.0 * (k + a) * (k + b) * (s + 2.0);
    const double next = ((c2 + c3 * x) * cur - c4 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

CopFamily CopFamily::hermite() { return CopFamily(Family::hermite, 0.0, 0.0); }

CopFamily CopFamily::laguerre(double alpha) {
  if (!(alpha > -1.0)) {
    std::ostringstream msg;
    msg << "Laguerre parameter alpha must be > -1 (got " << alpha << ")";
    throw ParameterError(msg.str());
  }
  return CopFamily(Family::laguerre, alpha, 0.0);
}

CopFamily CopFamily::jacobi(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    std::ostringstream msg;
    msg << "Jacobi parameters alpha, beta must be > -1 (got " << alpha << ", " << beta << ")";
    throw ParameterError(msg.str());
  }
  return CopFamily(Family::jacobi, alpha, beta);
}

double eval_cop(const CopFamily& family, int n, double x) {
  check_degree(n);
  switch (family.tag()) {
    case Family::hermite:
      return hermite(n, x);
    case Family::laguerre:
      return laguerre(n, family.alpha(), x);
    case Family::jacobi:
      return jacobi(n, family.alpha(), family.beta(), x);
  }
  return 0.0;
}

double eval_cop_derivative(const CopFamily& family, int n, double x) {
  check_degree(n);
  if (n == 0) return 0.0;
  switch (family.tag()) {
    case Family::hermite:
      return 2.0 * n * hermite(n - 1, x);
    case Family::laguerre:
      return -laguerre(n - 1, family.alpha() + 1.0, x);
    case Family::jacobi: {
      const double a = family.alpha();
      const double b = family.beta();
      return 0.5 * (n + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x);
    }
  }
  return 0.0;
}

}  // namespace swkb::orthopoly
