#include "swkb/pct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "swkb/error.hpp"
#include "swkb/quantization.hpp"

namespace swkb::pct {

namespace {

using catalog::Coefficients;
using catalog::FamilyId;

const cplx I{0.0, 1.0};

std::vector<TransformSpec> build_rows() {
  std::vector<TransformSpec> rows;

  rows.push_back({FamilyId::radial_osc, FamilyId::coulomb, "z = sqrt(x)",
                  [](double x) { return cplx(std::sqrt(x)); },
                  [](double x) { return cplx(0.5 / std::sqrt(x)); },
                  [](const Coefficients& c, int n) {
                    return SourceParams{c.e2 / (c.g_tilde + n), 2.0 * c.g_tilde - 0.5, 0.0};
                  },
                  [](const Coefficients& c, int n) {
                    return SourceParams{c.e2 / (c.g_tilde + n), 2.0 * c.g_tilde, 0.0};
                  },
                  Realness::real_map});

  rows.push_back({FamilyId::radial_osc, FamilyId::morse, "z = exp(x/2)",
                  [](double x) { return cplx(std::exp(0.5 * x)); },
                  [](double x) { return cplx(0.5 * std::exp(0.5 * x)); },
                  [](const Coefficients& c, int n) {
                    return SourceParams{2.0 * c.mu, 2.0 * (c.h - n) + 0.5, 0.0};
                  },
                  [](const Coefficients& c, int n) {
                    return SourceParams{2.0 * c.mu, 2.0 * (c.h - n), 0.0};
                  },
                  Realness::real_map});

  rows.push_back({FamilyId::poschl_teller, FamilyId::rosen_morse, "z = arccos(tanh(x))/2",
                  [](double x) { return cplx(0.5 * std::acos(std::tanh(x))); },
                  [](double x) { return cplx(-0.5 / std::cosh(x)); },
                  [](const Coefficients& c, int n) {
                    const double k = c.h_tilde - n;
                    return SourceParams{0.0, k + c.mu / k + 0.5, k - c.mu / k + 0.5};
                  },
                  [](const Coefficients& c, int n) {
                    const double k = c.h_tilde - n;
                    return SourceParams{0.0, k + c.mu / k, k - c.mu / k};
                  },
                  Realness::real_map});

  rows.push_back({FamilyId::poschl_teller, FamilyId::eckart, "z = arccos(coth(x))/2",
                  [](double x) { return 0.5 * std::acos(cplx(1.0 / std::tanh(x))); },
                  [](double x) {
                    const cplx z = 0.5 * std::acos(cplx(1.0 / std::tanh(x)));
                    const double csch = 1.0 / std::sinh(x);
                    return csch * csch / (2.0 * std::sin(2.0 * z));
                  },
                  [](const Coefficients& c, int n) {
                    const double k = c.g_tilde + n;
                    return SourceParams{0.0, -k + c.mu / k + 0.5, -k - c.mu / k + 0.5};
                  },
                  [](const Coefficients& c, int n) {
                    const double k = c.g_tilde + n;
                    return SourceParams{0.0, -k + c.mu / k, -k - c.mu / k};
                  },
                  Realness::complex_map});

  rows.push_back({FamilyId::poschl_teller, FamilyId::hyperbolic_pt, "z = arcsin(-i sinh(x))",
                  [](double x) { return std::asin(-I * std::sinh(x)); },
                  [](double) { return -I; },
                  [](const Coefficients& c, int) {
                    return SourceParams{0.0, c.g, -c.h_tilde};
                  },
                  [](const Coefficients& c, int) {
                    return SourceParams{0.0, c.g, -c.h_tilde};
                  },
                  Realness::complex_map});

  rows.push_back({FamilyId::poschl_teller, FamilyId::hyperbolic_top2, "z = arccos(i sinh(x))/2",
                  [](double x) { return 0.5 * std::acos(I * std::sinh(x)); },
                  [](double) { return -0.5 * I; },
                  [](const Coefficients& c, int) {
                    return SourceParams{0.0, -c.h_tilde - c.mu * I, -c.h_tilde + c.mu * I};
                  },
                  [](const Coefficients& c, int) {
                    return SourceParams{0.0, -c.h_tilde - c.mu * I, -c.h_tilde + c.mu * I};
                  },
                  Realness::complex_map});
  return rows;
}

void require_real(const TransformSpec& spec) {
  if (spec.realness != Realness::real_map) {
    throw CapabilityError(std::string(catalog::to_string(spec.target)) +
                          ": change of variables is complex; only the energy map can be checked "
                          "(real rows: coulomb, morse, rosen_morse)");
  }
}

double real_part_checked(cplx v, const char* what) {
  if (std::abs(v.imag()) > 0.0) {
    throw ParameterError(std::string("parameter map produced a complex ") + what);
  }
  return v.real();
}

catalog::PotentialModel source_model(const TransformSpec& spec, const SourceParams& p) {
  catalog::Params params;
  if (spec.source == FamilyId::radial_osc) {
    params = {{"omega", real_part_checked(p.omega, "omega")}, {"g", real_part_checked(p.g, "g")}};
  } else {
    params = {{"g", real_part_checked(p.g, "g")}, {"h", real_part_checked(p.h, "h")}};
  }
  return catalog::make_model(spec.source, params, catalog::Admissibility::swkb);
}

cplx source_w(FamilyId source, const SourceParams& p, cplx z) {
  if (source == FamilyId::radial_osc) return p.omega * z - p.g / z;
  return -p.g * std::cos(z) / std::sin(z) + p.h * std::tan(z);
}

cplx source_energy(FamilyId source, const SourceParams& p, int n) {
  const double k = n;
  if (source == FamilyId::radial_osc) return 4.0 * k * p.omega;
  return 4.0 * k * (k + p.g + p.h);
}

// Sample points spread over the bulk of each target domain.
std::vector<double> energy_map_grid(const catalog::PotentialModel& target) {
  const auto d = target.domain();
  std::vector<double> xs;
  for (int i = 0; i < 16; ++i) {
    const double t = i / 15.0;
    xs.push_back(std::isfinite(d.lo) ? 0.2 + 4.0 * t : -3.0 + 6.0 * t);
  }
  return xs;
}

}  // namespace

std::string_view to_string(Realness r) {
  return r == Realness::real_map ? "real_map" : "complex_map";
}

const std::vector<TransformSpec>& list_transforms() {
  static const std::vector<TransformSpec> rows = build_rows();
  return rows;
}

const TransformSpec& find_transform(FamilyId target) {
  for (const auto& row : list_transforms()) {
    if (row.target == target) return row;
  }
  throw CapabilityError(std::string(catalog::to_string(target)) +
                        " has no point canonical transformation; derived rows: coulomb, morse, "
                        "rosen_morse, eckart, hyperbolic_pt, hyperbolic_top2");
}

SeResidualReport verify_se_transform(const TransformSpec& spec, const catalog::Params& target,
                                     int n, std::span<const double> grid, double energy_offset,
                                     double step) {
  require_real(spec);
  const auto tm = catalog::make_model(spec.target, target);
  const double E = catalog::exact_energy(tm, n) + energy_offset;
  const auto sm = source_model(spec, spec.se_map(tm.coefficients(), n));

  auto psi = [&](double x) {
    const double z = spec.z_of_x(x).real();
    const double jac = std::abs(spec.dz_dx(x).real());
    return catalog::wavefunction(sm, n, z) / std::sqrt(jac);
  };

  SeResidualReport r;
  r.n = n;
  r.energy = E;
  double peak = 0.0;
  double worst = 0.0;
  for (double x : grid) {
    if (!tm.domain().contains(x - step) || !tm.domain().contains(x + step)) {
      std::ostringstream msg;
      msg << "grid point " << x << " too close to the edge of the target domain";
      throw DomainError(msg.str());
    }
    const double p0 = psi(x);
    const double d2 = (psi(x + step) - 2.0 * p0 + psi(x - step)) / (step * step);
    const double w = tm.W(x);
    const double v = w * w - tm.W_prime(x);
    worst = std::max(worst, std::abs(-d2 + (v - E) * p0));
    peak = std::max(peak, std::abs(p0));
  }
  if (peak == 0.0) throw EvaluationError("mapped wavefunction vanishes on the whole grid");
  r.max_residual = worst / peak;
  return r;
}

TransformReport verify_swkb_transform(const TransformSpec& spec, const catalog::Params& target,
                                      int n, double tol, double quad_tol) {
  require_real(spec);
  const auto tm = catalog::make_model(spec.target, target);
  TransformReport r;
  r.n = n;
  r.target_energy = catalog::exact_energy(tm, n);
  if (n > 0) {
    const auto sm = source_model(spec, spec.swkb_map(tm.coefficients(), n));
    r.source_energy = catalog::exact_energy(sm, n);
    r.target_integral = quantization::swkb_integral(tm, r.target_energy, quad_tol);
    r.source_integral = quantization::swkb_integral(sm, r.source_energy, quad_tol);
  }
  const double npi = n * std::numbers::pi;
  r.max_deviation = std::max({std::abs(r.target_integral - r.source_integral),
                              std::abs(r.target_integral - npi),
                              std::abs(r.source_integral - npi)});
  r.passed = r.max_deviation <= tol * (1.0 + npi);
  return r;
}

EnergyMapReport verify_energy_map(const TransformSpec& spec, const catalog::Params& target, int n,
                                  double tol) {
  const auto tm = catalog::make_model(spec.target, target);
  const auto& c = tm.coefficients();
  const SourceParams p = spec.swkb_map(c, n);

  EnergyMapReport r;
  r.n = n;
  r.target_energy = catalog::energy_formula(spec.target, c, n);
  r.source_energy = source_energy(spec.source, p, n);
  double scale = 1.0 + std::abs(r.target_energy);
  for (double x : energy_map_grid(tm)) {
    const double W = tm.W(x);
    const cplx z = spec.z_of_x(x);
    const cplx dz = spec.dz_dx(x);
    const cplx w = source_w(spec.source, p, z);
    const cplx implied = W * W + dz * dz * (r.source_energy - w * w);
    if (!std::isfinite(implied.real()) || !std::isfinite(implied.imag())) {
      r.max_abs_error = r.max_imag = std::numeric_limits<double>::infinity();
      break;
    }
    r.max_abs_error = std::max(r.max_abs_error, std::abs(implied.real() - r.target_energy));
    r.max_imag = std::max(r.max_imag, std::abs(implied.imag()));
    scale = std::max(scale, 1.0 + W * W);
  }
  r.passed = std::isfinite(r.target_energy) && r.max_abs_error <= tol * scale &&
             r.max_imag <= tol * scale;
  return r;
}

}  // namespace swkb::pct
