#pragma once

namespace swkb::orthopoly {

enum class Family { hermite, laguerre, jacobi };

// A classical orthogonal polynomial family with its parameters.
// Hermite is the physicists' convention, H_1(x) = 2x.
class CopFamily {
 public:
  static CopFamily hermite();
  static CopFamily laguerre(double alpha);
  static CopFamily jacobi(double alpha, double beta);

  Family tag() const noexcept { return tag_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  CopFamily(Family tag, double alpha, double beta) : tag_(tag), alpha_(alpha), beta_(beta) {}

  Family tag_;
  double alpha_;
  double beta_;
};

/// Degree-n member evaluated at x by ascending three-term recurrence.
double eval_cop(const CopFamily& family, int n, double x);

/// d/dx of the degree-n member, via the shifted-family identities
/// H_n' = 2n H_{n-1}, L_n^(a)' = -L_{n-1}^(a+1),
/// P_n^(a,b)' = (n+a+b+1)/2 P_{n-1}^(a+1,b+1).
double eval_cop_derivative(const CopFamily& family, int n, double x);

}  // namespace swkb::orthopoly
