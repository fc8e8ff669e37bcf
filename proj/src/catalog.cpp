#include "swkb/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "swkb/error.hpp"
#include "swkb/orthopoly.hpp"

namespace swkb::catalog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct FamilyInfo {
  FamilyId id;
  std::string_view tag;
  std::vector<std::string> params;
  std::vector<std::string> constraints;
  std::string_view superpotential;
  std::string_view energy;
  std::string_view n_max_rule;
  Domain domain;
};

const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {FamilyId::ho_1d, "ho_1d", {"omega"}, {"omega > 0"}, "omega*x", "2*n*omega", "unbounded",
       {-kInf, kInf}},
      {FamilyId::radial_osc, "radial_osc", {"omega", "g"}, {"omega > 0", "g > 1/2"},
       "omega*x - g/x", "4*n*omega", "unbounded", {0.0, kInf}},
      {FamilyId::poschl_teller, "poschl_teller", {"g", "h"}, {"g > 1/2", "h > 1/2"},
       "-g*cot(x) + h*tan(x)", "4*n*(n + g + h)", "unbounded", {0.0, 0.5 * std::numbers::pi}},
      {FamilyId::coulomb, "coulomb", {"e2", "g_tilde"}, {"e2 > 0", "g_tilde > 1/2"},
       "e2/(2*g_tilde) - g_tilde/x", "e2^2/(4*g_tilde^2) - e2^2/(4*(g_tilde + n)^2)", "unbounded",
       {0.0, kInf}},
      {FamilyId::morse, "morse", {"mu", "h"}, {"mu > 0", "h > 0"}, "mu*exp(x) - h",
       "2*n*h - n^2", "n < h", {-kInf, kInf}},
      {FamilyId::rosen_morse, "rosen_morse", {"mu", "h_tilde"},
       {"h_tilde > 0", "|mu| < h_tilde^2"}, "mu/h_tilde + h_tilde*tanh(x)",
       "2*n*h_tilde - n^2 + mu^2/h_tilde^2 - mu^2/(h_tilde - n)^2", "n < h_tilde - sqrt(|mu|)",
       {-kInf, kInf}},
      {FamilyId::eckart, "eckart", {"mu", "g_tilde"}, {"g_tilde > 1/2", "mu > g_tilde^2"},
       "mu/g_tilde - g_tilde*coth(x)",
       "-2*n*g_tilde - n^2 + mu^2/g_tilde^2 - mu^2/(g_tilde + n)^2", "n < sqrt(mu) - g_tilde",
       {0.0, kInf}},
      {FamilyId::hyperbolic_pt, "hyperbolic_pt", {"g", "h_tilde"}, {"g > 1/2", "h_tilde > g"},
       "-g*coth(x) + h_tilde*tanh(x)", "4*n*(h_tilde - g - n)", "n < (h_tilde - g)/2",
       {0.0, kInf}},
      {FamilyId::hyperbolic_top2, "hyperbolic_top2", {"mu", "h_tilde"}, {"h_tilde > 0"},
       "mu/cosh(x) + h_tilde*tanh(x)", "2*n*h_tilde - n^2", "n < h_tilde", {-kInf, kInf}},
  };
  return table;
}

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : family_table()) {
    if (f.id == id) return f;
  }
  throw ParameterError("unknown family id");
}

double sech(double x) { return 1.0 / std::cosh(x); }
double csch(double x) { return 1.0 / std::sinh(x); }

// Largest integer strictly below v (v > 0).
int largest_below(double v) { return static_cast<int>(std::ceil(v)) - 1; }

[[noreturn]] void reject(FamilyId id, const std::string& what) {
  std::ostringstream msg;
  msg << to_string(id) << ": " << what;
  throw ParameterError(msg.str());
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

std::string_view to_string(FamilyId id) { return info(id).tag; }

FamilyId parse_family(std::string_view tag) {
  std::string norm(tag);
  std::replace(norm.begin(), norm.end(), '-', '_');
  for (const auto& f : family_table()) {
    if (f.tag == norm) return f.id;
  }
  std::string known;
  for (const auto& f : family_table()) {
    if (!known.empty()) known += ", ";
    known += f.tag;
  }
  throw ParameterError("unknown family '" + std::string(tag) + "'; known: " + known);
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> out;
    for (const auto& f : family_table()) out.push_back(f.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& parameter_names(FamilyId id) { return info(id).params; }

double superpotential_raw(FamilyId id, const Coefficients& c, double x) {
  switch (id) {
    case FamilyId::ho_1d:
      return c.omega * x;
    case FamilyId::radial_osc:
      return c.omega * x - c.g / x;
    case FamilyId::poschl_teller:
      return -c.g / std::tan(x) + c.h * std::tan(x);
    case FamilyId::coulomb:
      return c.e2 / (2.0 * c.g_tilde) - c.g_tilde / x;
    case FamilyId::morse:
      return c.mu * std::exp(x) - c.h;
    case FamilyId::rosen_morse:
      return c.mu / c.h_tilde + c.h_tilde * std::tanh(x);
    case FamilyId::eckart:
      return c.mu / c.g_tilde - c.g_tilde / std::tanh(x);
    case FamilyId::hyperbolic_pt:
      return -c.g / std::tanh(x) + c.h_tilde * std::tanh(x);
    case FamilyId::hyperbolic_top2:
      return c.mu * sech(x) + c.h_tilde * std::tanh(x);
  }
  return 0.0;
}

double superpotential_derivative_raw(FamilyId id, const Coefficients& c, double x) {
  switch (id) {
    case FamilyId::ho_1d:
      return c.omega;
    case FamilyId::radial_osc:
      return c.omega + c.g / (x * x);
    case FamilyId::poschl_teller: {
      const double s = std::sin(x);
      const double co = std::cos(x);
      return c.g / (s * s) + c.h / (co * co);
    }
    case FamilyId::coulomb:
      return c.g_tilde / (x * x);
    case FamilyId::morse:
      return c.mu * std::exp(x);
    case FamilyId::rosen_morse:
      return c.h_tilde * sech(x) * sech(x);
    case FamilyId::eckart:
      return c.g_tilde * csch(x) * csch(x);
    case FamilyId::hyperbolic_pt:
      return c.g * csch(x) * csch(x) + c.h_tilde * sech(x) * sech(x);
    case FamilyId::hyperbolic_top2:
      return -c.mu * sech(x) * std::tanh(x) + c.h_tilde * sech(x) * sech(x);
  }
  return 0.0;
}

double PotentialModel::W(double x) const {
  if (!domain_.contains(x)) {
    std::ostringstream msg;
    msg << to_string(family_) << ": x=" << x << " outside domain (" << domain_.lo << ", "
        << domain_.hi << ")";
    throw DomainError(msg.str());
  }
  return superpotential_raw(family_, coeffs_, x);
}

double PotentialModel::W_prime(double x) const {
  if (!domain_.contains(x)) {
    std::ostringstream msg;
    msg << to_string(family_) << ": x=" << x << " outside domain";
    throw DomainError(msg.str());
  }
  return superpotential_derivative_raw(family_, coeffs_, x);
}

Coefficients PotentialModel::shifted_coefficients() const {
  Coefficients c = coeffs_;
  switch (family_) {
    case FamilyId::ho_1d:
      break;
    case FamilyId::radial_osc:
      c.g += 1.0;
      break;
    case FamilyId::poschl_teller:
      c.g += 1.0;
      c.h += 1.0;
      break;
    case FamilyId::coulomb:
    case FamilyId::eckart:
      c.g_tilde += 1.0;
      break;
    case FamilyId::morse:
      c.h -= 1.0;
      break;
    case FamilyId::rosen_morse:
    case FamilyId::hyperbolic_top2:
      c.h_tilde -= 1.0;
      break;
    case FamilyId::hyperbolic_pt:
      c.g += 1.0;
      c.h_tilde -= 1.0;
      break;
  }
  return c;
}

double PotentialModel::energy_shift() const { return energy_formula(family_, coeffs_, 1); }

PotentialModel make_model(FamilyId family, const Params& params, Admissibility admissibility) {
  const FamilyInfo& fi = info(family);
  for (const auto& [name, value] : params) {
    if (std::find(fi.params.begin(), fi.params.end(), name) == fi.params.end()) {
      reject(family, "unknown parameter '" + name + "'; accepted: " + join(fi.params));
    }
    if (!std::isfinite(value)) reject(family, "parameter '" + name + "' must be finite");
  }
  for (const auto& name : fi.params) {
    if (!params.contains(name)) {
      reject(family, "missing parameter '" + name + "'; required: " + join(fi.params));
    }
  }

  auto get = [&](const char* name) { return params.at(name); };
  Coefficients c;
  for (const auto& name : fi.params) {
    const double v = get(name.c_str());
    if (name == "omega") c.omega = v;
    if (name == "g") c.g = v;
    if (name == "h") c.h = v;
    if (name == "e2") c.e2 = v;
    if (name == "mu") c.mu = v;
    if (name == "g_tilde") c.g_tilde = v;
    if (name == "h_tilde") c.h_tilde = v;
  }

  const double canonical_floor = admissibility == Admissibility::schrodinger ? 0.5 : 0.0;
  auto require = [&](bool ok, const std::string& constraint, double got) {
    if (!ok) {
      std::ostringstream msg;
      msg << "requires " << constraint << " (got " << got << ")";
      reject(family, msg.str());
    }
  };

  PotentialModel m;
  m.family_ = family;
  m.params_ = params;
  m.coeffs_ = c;
  m.domain_ = fi.domain;

  switch (family) {
    case FamilyId::ho_1d:
      require(c.omega > 0.0, "omega > 0", c.omega);
      m.w_zero_ = 0.0;
      break;
    case FamilyId::radial_osc:
      require(c.omega > 0.0, "omega > 0", c.omega);
      require(c.g > canonical_floor, canonical_floor > 0 ? "g > 1/2" : "g > 0", c.g);
      m.w_zero_ = std::sqrt(c.g / c.omega);
      break;
    case FamilyId::poschl_teller:
      require(c.g > canonical_floor, canonical_floor > 0 ? "g > 1/2" : "g > 0", c.g);
      require(c.h > canonical_floor, canonical_floor > 0 ? "h > 1/2" : "h > 0", c.h);
      m.w_zero_ = std::atan(std::sqrt(c.g / c.h));
      break;
    case FamilyId::coulomb:
      require(c.e2 > 0.0, "e2 > 0", c.e2);
      require(c.g_tilde > 0.5, "g_tilde > 1/2", c.g_tilde);
      m.w_zero_ = 2.0 * c.g_tilde * c.g_tilde / c.e2;
      m.plateau_hi_ = std::pow(c.e2 / (2.0 * c.g_tilde), 2);
      break;
    case FamilyId::morse:
      require(c.mu > 0.0, "mu > 0", c.mu);
      require(c.h > 0.0, "h > 0", c.h);
      m.w_zero_ = std::log(c.h / c.mu);
      m.plateau_lo_ = c.h * c.h;
      m.n_max_ = largest_below(c.h);
      break;
    case FamilyId::rosen_morse:
      require(c.h_tilde > 0.0, "h_tilde > 0", c.h_tilde);
      require(std::abs(c.mu) < c.h_tilde * c.h_tilde, "|mu| < h_tilde^2", c.mu);
      m.w_zero_ = std::atanh(-c.mu / (c.h_tilde * c.h_tilde));
      m.plateau_lo_ = std::pow(c.mu / c.h_tilde - c.h_tilde, 2);
      m.plateau_hi_ = std::pow(c.mu / c.h_tilde + c.h_tilde, 2);
      m.n_max_ = largest_below(c.h_tilde - std::sqrt(std::abs(c.mu)));
      break;
    case FamilyId::eckart:
      require(c.g_tilde > 0.5, "g_tilde > 1/2", c.g_tilde);
      require(c.mu > c.g_tilde * c.g_tilde, "mu > g_tilde^2", c.mu);
      m.w_zero_ = std::atanh(c.g_tilde * c.g_tilde / c.mu);
      m.plateau_hi_ = std::pow(c.mu / c.g_tilde - c.g_tilde, 2);
      m.n_max_ = largest_below(std::sqrt(c.mu) - c.g_tilde);
      break;
    case FamilyId::hyperbolic_pt:
      require(c.g > 0.5, "g > 1/2", c.g);
      require(c.h_tilde > c.g, "h_tilde > g", c.h_tilde);
      m.w_zero_ = std::atanh(std::sqrt(c.g / c.h_tilde));
      m.plateau_hi_ = std::pow(c.h_tilde - c.g, 2);
      m.n_max_ = largest_below(0.5 * (c.h_tilde - c.g));
      break;
    case FamilyId::hyperbolic_top2:
      require(c.h_tilde > 0.0, "h_tilde > 0", c.h_tilde);
      m.w_zero_ = std::asinh(-c.mu / c.h_tilde);
      m.plateau_lo_ = c.h_tilde * c.h_tilde;
      m.plateau_hi_ = c.h_tilde * c.h_tilde;
      m.n_max_ = largest_below(c.h_tilde);
      break;
  }
  return m;
}

double superpotential(const PotentialModel& model, double x) { return model.W(x); }

double exact_energy(const PotentialModel& model, int n) {
  if (n < 0) throw ParameterError("quantum number n must be >= 0");
  if (model.n_max() && n > *model.n_max()) {
    std::ostringstream msg;
    msg << to_string(model.family()) << ": level n=" << n << " exceeds the " << *model.n_max() + 1
        << " bound state(s)";
    throw NoBoundStateError(msg.str());
  }
  return energy_formula(model.family(), model.coefficients(), n);
}

double energy_formula(FamilyId id, const Coefficients& c, int n) {
  if (n == 0) return 0.0;
  const double k = n;
  switch (id) {
    case FamilyId::ho_1d:
      return 2.0 * k * c.omega;
    case FamilyId::radial_osc:
      return 4.0 * k * c.omega;
    case FamilyId::poschl_teller:
      return 4.0 * k * (k + c.g + c.h);
    case FamilyId::coulomb: {
      const double e4 = c.e2 * c.e2;
      return e4 / (4.0 * c.g_tilde * c.g_tilde) - e4 / (4.0 * std::pow(c.g_tilde + k, 2));
    }
    case FamilyId::morse:
      return 2.0 * k * c.h - k * k;
    case FamilyId::rosen_morse:
      return 2.0 * k * c.h_tilde - k * k + c.mu * c.mu / (c.h_tilde * c.h_tilde) -
             c.mu * c.mu / std::pow(c.h_tilde - k, 2);
    case FamilyId::eckart:
      return -2.0 * k * c.g_tilde - k * k + c.mu * c.mu / (c.g_tilde * c.g_tilde) -
             c.mu * c.mu / std::pow(c.g_tilde + k, 2);
    case FamilyId::hyperbolic_pt:
      return 4.0 * k * (c.h_tilde - c.g - k);
    case FamilyId::hyperbolic_top2:
      return 2.0 * k * c.h_tilde - k * k;
  }
  return 0.0;
}

double wavefunction(const PotentialModel& model, int n, double x) {
  using orthopoly::CopFamily;
  using orthopoly::eval_cop;
  exact_energy(model, n);  // validates n
  if (!model.domain().contains(x)) {
    std::ostringstream msg;
    msg << to_string(model.family()) << ": x=" << x << " outside domain";
    throw DomainError(msg.str());
  }
  const Coefficients& c = model.coefficients();
  switch (model.family()) {
    case FamilyId::ho_1d:
      return std::exp(-0.5 * c.omega * x * x) *
             eval_cop(CopFamily::hermite(), n, std::sqrt(c.omega) * x);
    case FamilyId::radial_osc:
      return std::exp(-0.5 * c.omega * x * x) * std::pow(x, c.g) *
             eval_cop(CopFamily::laguerre(c.g - 0.5), n, c.omega * x * x);
    case FamilyId::poschl_teller:
      return std::pow(std::sin(x), c.g) * std::pow(std::cos(x), c.h) *
             eval_cop(CopFamily::jacobi(c.g - 0.5, c.h - 0.5), n, std::cos(2.0 * x));
    case FamilyId::coulomb: {
      const double k = c.e2 / (c.g_tilde + n);
      return std::exp(-0.5 * k * x) * std::pow(x, c.g_tilde) *
             eval_cop(CopFamily::laguerre(2.0 * c.g_tilde - 1.0), n, k * x);
    }
    case FamilyId::morse: {
      const double y = 2.0 * c.mu * std::exp(x);
      return std::exp(-0.5 * y + (c.h - n) * x) *
             eval_cop(CopFamily::laguerre(2.0 * (c.h - n)), n, y);
    }
    default:
      break;
  }
  throw CapabilityError(std::string(to_string(model.family())) +
                        ": wavefunctions available for ho_1d, radial_osc, poschl_teller, "
                        "coulomb, morse");
}

ShapeInvarianceReport shape_invariance_residual(const PotentialModel& model,
                                                std::span<const double> grid) {
  if (grid.empty()) throw ParameterError("shape-invariance grid is empty");
  const Coefficients a = model.coefficients();
  const Coefficients fa = model.shifted_coefficients();
  const FamilyId id = model.family();

  ShapeInvarianceReport report;
  report.epsilon = model.energy_shift();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  for (double x : grid) {
    if (!model.domain().contains(x)) {
      std::ostringstream msg;
      msg << to_string(id) << ": grid point " << x << " outside domain";
      throw DomainError(msg.str());
    }
    const double wa = superpotential_raw(id, a, x);
    const double wf = superpotential_raw(id, fa, x);
    const double r = wa * wa + superpotential_derivative_raw(id, a, x) - wf * wf +
                     superpotential_derivative_raw(id, fa, x);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    sum += r;
  }
  report.stats = {sum / static_cast<double>(grid.size()), hi - lo, lo, hi};
  return report;
}

std::string catalog_json() {
  auto bound = [](double v) -> nlohmann::json {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    if (v == 0.5 * std::numbers::pi) return "pi/2";
    return v;
  };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : family_table()) {
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : f.params) params.push_back(p);
    out.push_back({{"family", f.tag},
                   {"parameters", params},
                   {"constraints", f.constraints},
                   {"domain", {bound(f.domain.lo), bound(f.domain.hi)}},
                   {"superpotential", f.superpotential},
                   {"energy", f.energy},
                   {"n_max_rule", f.n_max_rule}});
  }
  return out.dump(2);
}

}  // namespace swkb::catalog
