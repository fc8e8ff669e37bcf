#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swkb::catalog {

enum class FamilyId {
  ho_1d,
  radial_osc,
  poschl_teller,
  coulomb,
  morse,
  rosen_morse,
  eckart,
  hyperbolic_pt,
  hyperbolic_top2,
};

std::string_view to_string(FamilyId id);

/// Accepts the canonical tag or its dashed spelling ("ho-1d").
FamilyId parse_family(std::string_view tag);

const std::vector<FamilyId>& all_families();

/// Parameter names accepted by a family, e.g. {"omega", "g"} for radial_osc.
const std::vector<std::string>& parameter_names(FamilyId id);

// Named real parameters: omega, g, h, e2, mu, g_tilde, h_tilde.
using Params = std::map<std::string, double>;

struct Domain {
  double lo;
  double hi;
  bool contains(double x) const noexcept { return x > lo && x < hi; }
};

// How strictly to validate the canonical families' g, h. Schrodinger-level
// use needs g, h > 1/2; an SWKB integral only needs W to change sign, which
// parameter remaps onto the canonical systems rely on.
enum class Admissibility { schrodinger, swkb };

// Flat coefficient set shared by all families; unused entries stay zero.
struct Coefficients {
  double omega = 0.0;
  double g = 0.0;
  double h = 0.0;
  double e2 = 0.0;
  double mu = 0.0;
  double g_tilde = 0.0;
  double h_tilde = 0.0;
};

/// W(x) and W'(x) for raw coefficients, without validation. Shape-invariance
/// checks need W at shifted parameters that may sit outside the valid range.
double superpotential_raw(FamilyId id, const Coefficients& c, double x);
double superpotential_derivative_raw(FamilyId id, const Coefficients& c, double x);

class PotentialModel {
 public:
  FamilyId family() const noexcept { return family_; }
  const Params& params() const noexcept { return params_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  Domain domain() const noexcept { return domain_; }

  /// Highest bound level; empty when the spectrum is unbounded.
  std::optional<int> n_max() const noexcept { return n_max_; }

  /// A point with W = 0 (unique for every cataloged family).
  double w_zero() const noexcept { return w_zero_; }

  /// lim W^2 toward the lower/upper domain edge when finite.
  std::optional<double> plateau_lo() const noexcept { return plateau_lo_; }
  std::optional<double> plateau_hi() const noexcept { return plateau_hi_; }

  double W(double x) const;
  double W_prime(double x) const;

  /// Parameters f(a) of the shape-invariant partner and the constant eps(a).
  Coefficients shifted_coefficients() const;
  double energy_shift() const;

 private:
  friend PotentialModel make_model(FamilyId, const Params&, Admissibility);

  FamilyId family_{};
  Params params_;
  Coefficients coeffs_;
  Domain domain_{};
  std::optional<int> n_max_;
  double w_zero_ = 0.0;
  std::optional<double> plateau_lo_;
  std::optional<double> plateau_hi_;
};

PotentialModel make_model(FamilyId family, const Params& params,
                          Admissibility admissibility = Admissibility::schrodinger);

double superpotential(const PotentialModel& model, double x);

/// Closed-form eigenvalue in the factorized convention (E_0 = 0).
double exact_energy(const PotentialModel& model, int n);

/// The same closed form at raw coefficients, without the bound-state check.
double energy_formula(FamilyId id, const Coefficients& c, int n);

/// Unnormalized eigenfunction for ho_1d, radial_osc, poschl_teller, coulomb
/// and morse.
double wavefunction(const PotentialModel& model, int n, double x);

struct ResidualStats {
  double mean = 0.0;
  double spread = 0.0;  // max - min
  double min = 0.0;
  double max = 0.0;
};

struct ShapeInvarianceReport {
  ResidualStats stats;
  double epsilon = 0.0;  // the family's eps(a)
};

/// R(x) = W(x;a)^2 + W'(x;a) - W(x;f(a))^2 + W'(x;f(a)) over the grid.
ShapeInvarianceReport shape_invariance_residual(const PotentialModel& model,
                                                std::span<const double> grid);

/// Human-readable listing of every family as a JSON document.
std::string catalog_json();

}  // namespace swkb::catalog
