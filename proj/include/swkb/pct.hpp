#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swkb/catalog.hpp"
#include "swkb/numerics.hpp"

namespace swkb::pct {

using cplx = std::complex<double>;

enum class Realness { real_map, complex_map };

std::string_view to_string(Realness r);

// Parameters of a canonical source system (radial_osc or poschl_teller); may
// be complex for rows whose change of variables leaves the real axis.
struct SourceParams {
  cplx omega{0.0};
  cplx g{0.0};
  cplx h{0.0};
};

using ParamMap = std::function<SourceParams(const catalog::Coefficients& target, int n)>;

struct TransformSpec {
  catalog::FamilyId source;
  catalog::FamilyId target;
  std::string change_of_variables;  // human-readable z(x)
  std::function<cplx(double)> z_of_x;
  std::function<cplx(double)> dz_dx;
  ParamMap se_map;    // maps the Schrodinger equation
  ParamMap swkb_map;  // maps the SWKB integrand
  Realness realness;
};

/// The six derived rows: Coulomb and Morse into the radial oscillator;
/// Rosen-Morse, Eckart, hyperbolic Poschl-Teller and hyperbolic top II into
/// Poschl-Teller.
const std::vector<TransformSpec>& list_transforms();

const TransformSpec& find_transform(catalog::FamilyId target);

struct SeResidualReport {
  int n = 0;
  double energy = 0.0;       // target energy used in the residual
  double max_residual = 0.0;  // max |-psi'' + V psi - E psi| / max |psi|
};

/// Maps the source eigenfunction to psi(x) = |dz/dx|^(-1/2) phi_n(z(x)) and
/// evaluates the target Schrodinger residual on the grid by central
/// differences. `energy_offset` shifts the target energy (negative controls).
SeResidualReport verify_se_transform(const TransformSpec& spec, const catalog::Params& target,
                                     int n, std::span<const double> grid,
                                     double energy_offset = 0.0, double step = 1e-4);

struct TransformReport {
  int n = 0;
  double target_energy = 0.0;
  double source_energy = 0.0;
  double target_integral = 0.0;
  double source_integral = 0.0;
  double max_deviation = 0.0;  // max of |t - s|, |t - n pi|, |s - n pi|
  bool passed = false;
};

/// Target SWKB integral in x against the canonical integral at the SWKB
/// parameter map; both must equal n*pi within tol * (1 + n*pi).
TransformReport verify_swkb_transform(const TransformSpec& spec, const catalog::Params& target,
                                      int n, double tol = 1e-8,
                                      double quad_tol = numerics::kDefaultQuadTol);

struct EnergyMapReport {
  int n = 0;
  double target_energy = 0.0;
  cplx source_energy{0.0};
  // E(x) = W(x)^2 + (dz/dx)^2 (E_src - w(z(x))^2) sampled along the target
  // domain; it must be the constant target energy.
  double max_abs_error = 0.0;
  double max_imag = 0.0;
  bool passed = false;
};

/// Algebraic check of the SWKB-level energy correspondence. Uses complex
/// arithmetic throughout, so it also covers the complex-map rows.
EnergyMapReport verify_energy_map(const TransformSpec& spec, const catalog::Params& target, int n,
                                  double tol = 1e-12);

}  // namespace swkb::pct
