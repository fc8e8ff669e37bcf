#include "swkb/natanzon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "swkb/catalog.hpp"
#include "swkb/error.hpp"
#include "swkb/quantization.hpp"

namespace swkb::natanzon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr int kProbes = 200;

bool is_laguerre(const NatanzonParams& nat) { return nat.cls == NatanzonClass::laguerre; }

double z_upper(const NatanzonParams& nat) { return is_laguerre(nat) ? kInf : kHalfPi; }

void check_z(const NatanzonParams& nat, double z) {
  if (!(z > 0.0 && z < z_upper(nat))) {
    std::ostringstream msg;
    msg << "z=" << z << " outside the " << to_string(nat.cls) << " domain";
    throw DomainError(msg.str());
  }
}

// Upper limit for a single quadratic g (g - 1) = d0 - a E to have a real
// root: E <= (4 d0 + 1) / (4 a).
double quadratic_ceiling(double a, double d0) {
  if (a > 0.0) return (4.0 * d0 + 1.0) / (4.0 * a);
  return d0 >= -0.25 ? kInf : -kInf;
}

double root_of_quadratic(double rhs, const char* name, double E) {
  if (rhs < -0.25) {
    std::ostringstream msg;
    msg << "trial energy E=" << E << " leaves no real " << name << " (discriminant "
        << 0.25 + rhs << " < 0)";
    throw TrialEnergyError(msg.str());
  }
  return 0.5 + std::sqrt(0.25 + rhs);
}

// f, df/dz and d2f/dz2 from S = f^2 and its derivatives.
struct FDerivs {
  double f;
  double fz;
  double fzz;
};

FDerivs f_derivs(const NatanzonParams& nat, double z) {
  double S, S1, S2;
  if (is_laguerre(nat)) {
    const double z2 = z * z;
    S = nat.A / z2 + nat.B * z2 + nat.C;
    S1 = -2.0 * nat.A / (z2 * z) + 2.0 * nat.B * z;
    S2 = 6.0 * nat.A / (z2 * z2) + 2.0 * nat.B;
  } else {
    const double s = std::sin(z);
    const double c = std::cos(z);
    const double s2 = s * s;
    const double c2 = c * c;
    S = nat.A / s2 + nat.B / c2 + nat.C;
    S1 = -2.0 * nat.A * c / (s2 * s) + 2.0 * nat.B * s / (c2 * c);
    S2 = 2.0 * nat.A * (1.0 / s2 + 3.0 * c2 / (s2 * s2)) +
         2.0 * nat.B * (1.0 / c2 + 3.0 * s2 / (c2 * c2));
  }
  const double f = std::sqrt(S);
  const double fz = S1 / (2.0 * f);
  const double fzz = S2 / (2.0 * f) - S1 * S1 / (4.0 * f * S);
  return {f, fz, fzz};
}

double g_of_z(const NatanzonParams& nat, double z) {
  if (is_laguerre(nat)) return nat.D / (z * z) + nat.F * z * z + nat.G;
  const double s = std::sin(z);
  const double c = std::cos(z);
  return nat.D / (s * s) + nat.F / (c * c) + nat.G;
}

// Energy of the canonical system above its own ground level; the Natanzon
// level n satisfies ground_excess(E) = canonical level-n energy.
double ground_excess(const NatanzonParams& nat, const EffectiveParams& p, double E) {
  if (is_laguerre(nat)) return E * nat.C - nat.G - p.omega * (2.0 * p.g + 1.0);
  return E * nat.C - nat.G - (p.g + p.h) * (p.g + p.h);
}

catalog::PotentialModel canonical_model(const NatanzonParams& nat, const EffectiveParams& p) {
  using catalog::FamilyId;
  if (is_laguerre(nat)) {
    return catalog::make_model(FamilyId::radial_osc, {{"omega", p.omega}, {"g", p.g}},
                               catalog::Admissibility::swkb);
  }
  return catalog::make_model(FamilyId::poschl_teller, {{"g", p.g}, {"h", p.h}},
                             catalog::Admissibility::swkb);
}

[[noreturn]] void throw_no_level(const NatanzonParams& nat, int n, const std::string& why) {
  std::ostringstream msg;
  msg << to_string(nat.cls) << " Natanzon system has no level n=" << n << " (" << why << ")";
  throw NoBoundStateError(msg.str());
}

// Smallest root of an increasing-through-zero function of the trial energy on
// the admissible window, located by probing then refined by find_root.
double find_level(const NatanzonParams& nat, int n, const numerics::RealFunction& fn,
                  const char* what) {
  const double ceiling = energy_ceiling(nat);
  if (ceiling == -kInf) {
    throw NoBoundStateError("no trial energy gives valid effective parameters");
  }
  auto no_level = [&](const std::string& why) { throw_no_level(nat, n, why); };

  double top;
  if (std::isfinite(ceiling)) {
    top = ceiling - 1e-10 * (1.0 + std::abs(ceiling));
    if (fn(top) < 0.0) no_level(std::string(what) + " stays negative up to the window edge");
  } else {
    top = 1.0;
    int k = 0;
    while (fn(top) < 0.0) {
      if (++k > 200) no_level(std::string(what) + " never turns positive");
      top *= 2.0;
    }
  }

  double bottom = std::min(top, 0.0) - 1.0;
  for (int k = 0; fn(bottom) >= 0.0; ++k) {
    if (k > 200) no_level(std::string(what) + " never turns negative");
    bottom = top - 2.0 * (top - bottom);
  }

  double prev = bottom;
  double f_prev = fn(bottom);
  for (int k = 1; k <= kProbes; ++k) {
    const double e = k == kProbes ? top : bottom + (top - bottom) * k / kProbes;
    const double fe = fn(e);
    if (f_prev < 0.0 && fe >= 0.0) {
      return numerics::find_root(fn, numerics::Bracket{prev, e, f_prev, fe}, 1e-14);
    }
    prev = e;
    f_prev = fe;
  }
  throw_no_level(nat, n, std::string("no sign change of ") + what);
}

// Pieces of the x-space picture that depend only on the ground level.
struct GroundData {
  double E0;
  EffectiveParams p0;
};

GroundData ground_data(const NatanzonParams& nat) {
  const double E0 = natanzon_exact_energy(nat, 0);
  return {E0, effective_params(nat, E0)};
}

double canonical_w(const NatanzonParams& nat, const EffectiveParams& p, double z) {
  if (is_laguerre(nat)) return p.omega * z - p.g / z;
  return -p.g / std::tan(z) + p.h * std::tan(z);
}

double naive_w(const NatanzonParams& nat, const GroundData& gd, double z) {
  const FDerivs d = f_derivs(nat, z);
  return (canonical_w(nat, gd.p0, z) - d.fz / (2.0 * d.f)) / d.f;
}

// Antiderivative of sqrt(a + b u + c u^2) / u.
double K(double u, double a, double b, double c) {
  const double P = a + b * u + c * u * u;
  if (P < 0.0) throw ParameterError("radicand of the coordinate map is negative");
  const double sp = std::sqrt(P);

  double j1;  // integral of du / sqrt(P)
  if (c > 0.0) {
    const double arg = 2.0 * std::sqrt(c) * sp + 2.0 * c * u + b;
    if (!(std::abs(arg) > 0.0)) throw ParameterError("logarithm branch violated in x(z)");
    j1 = std::log(std::abs(arg)) / std::sqrt(c);
  } else if (c < 0.0) {
    j1 = -std::atan((2.0 * c * u + b) / (2.0 * std::sqrt(-c) * sp)) / std::sqrt(-c);
  } else if (b != 0.0) {
    j1 = 2.0 * sp / b;
  } else {
    j1 = u / std::sqrt(a);
  }

  double aj2 = 0.0;  // a times the integral of du / (u sqrt(P))
  if (a > 0.0) {
    const double arg = (2.0 * a + b * u + 2.0 * std::sqrt(a) * sp) / u;
    if (!(std::abs(arg) > 0.0) || !std::isfinite(arg)) {
      throw ParameterError("logarithm branch violated in x(z)");
    }
    aj2 = -std::sqrt(a) * std::log(std::abs(arg));
  }
  return sp + 0.5 * b * j1 + aj2;
}

double x_raw(const NatanzonParams& nat, double z) {
  const double A = nat.A, B = nat.B, C = nat.C;
  if (is_laguerre(nat)) return 0.5 * K(z * z, A, C, B);
  const double s = std::sin(z);
  const double c = std::cos(z);
  return 0.5 * (K(s * s, A, B - A + C, -C) - K(c * c, B, A - B + C, -C));
}

}  // namespace

std::string_view to_string(NatanzonClass c) {
  return c == NatanzonClass::laguerre ? "laguerre" : "jacobi";
}

NatanzonClass parse_class(std::string_view tag) {
  if (tag == "L" || tag == "l" || tag == "laguerre") return NatanzonClass::laguerre;
  if (tag == "J" || tag == "j" || tag == "jacobi") return NatanzonClass::jacobi;
  throw ParameterError("unknown Natanzon class '" + std::string(tag) + "'; use L or J");
}

void validate(const NatanzonParams& nat) {
  for (double v : {nat.A, nat.B, nat.C, nat.D, nat.F, nat.G}) {
    if (!std::isfinite(v)) throw ParameterError("Natanzon constants must be finite");
  }
  if (nat.A < 0.0 || nat.B < 0.0) {
    std::ostringstream msg;
    msg << "Natanzon constants need A >= 0 and B >= 0 (got A=" << nat.A << ", B=" << nat.B << ")";
    throw ParameterError(msg.str());
  }
  // Infimum of f^2 over the domain.
  const double ra = std::sqrt(nat.A);
  const double rb = std::sqrt(nat.B);
  double inf_f2;
  bool attained;
  if (is_laguerre(nat)) {
    inf_f2 = 2.0 * ra * rb + nat.C;
    attained = nat.A > 0.0 && nat.B > 0.0;
  } else {
    inf_f2 = (ra + rb) * (ra + rb) + nat.C;
    attained = nat.A > 0.0 && nat.B > 0.0;
  }
  if (inf_f2 < 0.0 || (inf_f2 == 0.0 && (attained || (nat.A == 0.0 && nat.B == 0.0)))) {
    std::ostringstream msg;
    msg << "f^2 is not positive on the " << to_string(nat.cls) << " domain (infimum " << inf_f2
        << ")";
    throw ParameterError(msg.str());
  }
}

double energy_ceiling(const NatanzonParams& nat) {
  const double ga = quadratic_ceiling(nat.A, nat.D);
  if (is_laguerre(nat)) {
    const double om = nat.B > 0.0 ? nat.F / nat.B : (nat.F > 0.0 ? kInf : -kInf);
    return std::min(ga, om);
  }
  return std::min(ga, quadratic_ceiling(nat.B, nat.F));
}

EffectiveParams effective_params(const NatanzonParams& nat, double E) {
  validate(nat);
  EffectiveParams p;
  if (is_laguerre(nat)) {
    const double w2 = nat.F - nat.B * E;
    if (!(w2 > 0.0)) {
      std::ostringstream msg;
      msg << "trial energy E=" << E << " gives omega^2 = F - B E = " << w2 << " <= 0";
      throw TrialEnergyError(msg.str());
    }
    p.omega = std::sqrt(w2);
    p.g = root_of_quadratic(nat.D - nat.A * E, "g", E);
  } else {
    p.g = root_of_quadratic(nat.D - nat.A * E, "g", E);
    p.h = root_of_quadratic(nat.F - nat.B * E, "h", E);
  }
  return p;
}

double spectral_function(const NatanzonParams& nat, int n, double E) {
  const EffectiveParams p = effective_params(nat, E);
  if (is_laguerre(nat)) return E * nat.C - p.omega * (4.0 * n + 2.0 * p.g + 1.0) - nat.G;
  const double s = p.g + p.h + 2.0 * n;
  return E * nat.C - s * s - nat.G;
}

double natanzon_exact_energy(const NatanzonParams& nat, int n) {
  if (n < 0) throw ParameterError("quantum number n must be >= 0");
  validate(nat);
  return find_level(nat, n, [&](double E) { return spectral_function(nat, n, E); }, "Phi");
}

double natanzon_extended_swkb(const NatanzonParams& nat, int n, double E, double tol) {
  if (n < 0) throw ParameterError("quantum number n must be >= 0");
  const EffectiveParams p = effective_params(nat, E);
  if (n == 0) return 0.0;
  const auto model = canonical_model(nat, p);
  return quantization::swkb_integral(model, catalog::exact_energy(model, n), tol);
}

double natanzon_solve_swkb_energy(const NatanzonParams& nat, int n, double tol) {
  if (n < 0) throw ParameterError("quantum number n must be >= 0");
  validate(nat);
  if (n == 0) {
    return find_level(
        nat, 0, [&](double E) { return ground_excess(nat, effective_params(nat, E), E); },
        "ground excess");
  }
  const double target = n * std::numbers::pi;
  auto excess = [&](double E) {
    const EffectiveParams p = effective_params(nat, E);
    const double eps = ground_excess(nat, p, E);
    if (eps <= 0.0) return -target;
    return quantization::swkb_integral(canonical_model(nat, p), eps, tol) - target;
  };
  return find_level(nat, n, excess, "SWKB excess");
}

double f_of_z(const NatanzonParams& nat, double z) {
  check_z(nat, z);
  return f_derivs(nat, z).f;
}

double natanzon_x_of_z(const NatanzonParams& nat, double z) {
  validate(nat);
  check_z(nat, z);
  const double z0 = is_laguerre(nat) ? 1.0 : 0.25 * std::numbers::pi;
  return x_raw(nat, z) - x_raw(nat, z0);
}

double naive_superpotential(const NatanzonParams& nat, double z) {
  check_z(nat, z);
  return naive_w(nat, ground_data(nat), z);
}

double natanzon_naive_swkb(const NatanzonParams& nat, int n, double tol) {
  if (n < 0) throw ParameterError("quantum number n must be >= 0");
  const GroundData gd = ground_data(nat);
  const double En = n == 0 ? gd.E0 : natanzon_exact_energy(nat, n);
  if (n == 0) return 0.0;
  const double dE = En - gd.E0;

  quantization::SuperpotentialView view;
  view.w = [&](double z) { return naive_w(nat, gd, z); };
  view.lo = 0.0;
  view.hi = z_upper(nat);
  if (nat.A > 0.0) view.plateau_lo = std::pow(gd.p0.g - 0.5, 2) / nat.A;
  if (nat.B > 0.0) {
    view.plateau_hi = is_laguerre(nat) ? gd.p0.omega * gd.p0.omega / nat.B
                                       : std::pow(gd.p0.h - 0.5, 2) / nat.B;
  }

  // Locate the zero of W_x on a grid dense at both ends of the domain.
  constexpr int N = 800;
  auto grid = [&](int k) {
    const double t = static_cast<double>(k) / N;
    return is_laguerre(nat) ? std::pow(10.0, -8.0 + 16.0 * t)
                            : kHalfPi * 0.5 * (1.0 - std::cos(std::numbers::pi * t));
  };
  std::optional<double> zero;
  double prev = grid(1);
  double w_prev = view.w(prev);
  for (int k = 2; k < N && !zero; ++k) {
    const double z = grid(k);
    const double w = view.w(z);
    if (w_prev < 0.0 && w >= 0.0) {
      zero = numerics::find_root(view.w, numerics::Bracket{prev, z, w_prev, w}, 1e-15);
    }
    prev = z;
    w_prev = w;
  }
  if (!zero) throw BracketError("the x-space superpotential has no sign change");
  view.zero = *zero;

  const auto tp = quantization::turning_points(view, dE);
  auto q = [&](double z) {
    const FDerivs d = f_derivs(nat, z);
    const double w = (canonical_w(nat, gd.p0, z) - d.fz / (2.0 * d.f)) / d.f;
    return (dE - w * w) * d.f * d.f;
  };
  return numerics::integrate_sqrt_bracket(q, tp.a, tp.b, tol).value;
}

std::vector<CurvePoint> natanzon_potential_curve(const NatanzonParams& nat,
                                                 std::span<const double> z_grid) {
  const double E0 = natanzon_exact_energy(nat, 0);
  std::vector<CurvePoint> out;
  out.reserve(z_grid.size());
  for (double z : z_grid) {
    check_z(nat, z);
    const FDerivs d = f_derivs(nat, z);
    const double f2 = d.f * d.f;
    const double V = (2.0 * d.f * d.fzz - 3.0 * d.fz * d.fz) / (4.0 * f2 * f2) +
                     g_of_z(nat, z) / f2 - E0;
    out.push_back({z, natanzon_x_of_z(nat, z), V});
  }
  return out;
}

}  // namespace swkb::natanzon
