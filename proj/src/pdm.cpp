#include "swkb/pdm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "swkb/error.hpp"
#include "swkb/quantization.hpp"

namespace swkb::pdm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double param(const std::map<std::string, double>& p, const std::string& name) {
  const auto it = p.find(name);
  if (it == p.end()) throw ParameterError("missing parameter '" + name + "'");
  if (!std::isfinite(it->second)) throw ParameterError("parameter '" + name + "' must be finite");
  return it->second;
}

void only_accept(const std::map<std::string, double>& p, std::initializer_list<const char*> names,
                 std::string_view model) {
  for (const auto& [key, value] : p) {
    if (std::none_of(names.begin(), names.end(), [&](const char* n) { return key == n; })) {
      std::string accepted;
      for (const char* n : names) accepted += (accepted.empty() ? "" : ", ") + std::string(n);
      throw ParameterError(std::string(model) + ": unknown parameter '" + key +
                           "'; accepted: " + accepted);
    }
  }
}

void check_level(int n) {
  if (n < 0) throw ParameterError("quantum number n must be >= 0");
}

quantization::SuperpotentialView view_of(const DeformedModel& m) {
  quantization::SuperpotentialView v;
  v.w = m.W;
  v.lo = m.domain.lo;
  v.hi = m.domain.hi;
  v.zero = m.w_zero;
  return v;
}

double weighted_integral(const DeformedModel& m, int n, double tol, bool weighted) {
  check_level(n);
  if (n == 0) return 0.0;
  const double E = m.exact_energy(n);
  const auto tp = quantization::turning_points(view_of(m), E);
  auto q = [&](double x) {
    const double w = m.W(x);
    const double base = m.mass_scale * (E - w * w);
    if (!weighted) return base;
    const double eta = m.eta(x);
    return base / (eta * eta);
  };
  return numerics::integrate_sqrt_bracket(q, tp.a, tp.b, tol).value;
}

// The parameter that fixes eta for each kind; partners must agree on it.
double eta_parameter(const DeformedModel& m) {
  switch (m.kind) {
    case DeformedKind::deformed_ho:
      return m.params.at("alpha");
    case DeformedKind::semi_confined_ho:
      return m.params.at("x0");
    case DeformedKind::custom:
      break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string_view to_string(DeformedKind k) {
  switch (k) {
    case DeformedKind::deformed_ho:
      return "deformed_ho";
    case DeformedKind::semi_confined_ho:
      return "semi_confined_ho";
    case DeformedKind::custom:
      return "custom";
  }
  return "custom";
}

DeformedKind parse_kind(std::string_view tag) {
  std::string t(tag);
  std::replace(t.begin(), t.end(), '-', '_');
  if (t == "deformed_ho") return DeformedKind::deformed_ho;
  if (t == "semi_confined_ho" || t == "semi_confined") return DeformedKind::semi_confined_ho;
  throw ParameterError("unknown deformed model '" + std::string(tag) +
                       "'; known: deformed-ho, semi-confined");
}

DeformedModel make_deformed(DeformedKind kind, const std::map<std::string, double>& params,
                            double mass_scale) {
  if (!(mass_scale > 0.0) || !std::isfinite(mass_scale)) {
    throw ParameterError("mass scale 2*m0 must be positive");
  }
  DeformedModel m;
  m.kind = kind;
  m.params = params;
  m.mass_scale = mass_scale;

  switch (kind) {
    case DeformedKind::deformed_ho: {
      only_accept(params, {"omega", "alpha"}, "deformed_ho");
      const double omega = param(params, "omega");
      const double alpha = param(params, "alpha");
      if (!(omega > 0.0)) throw ParameterError("deformed_ho: requires omega > 0");
      if (!(alpha >= 0.0)) throw ParameterError("deformed_ho: requires alpha >= 0");
      m.W = [omega](double x) { return omega * x; };
      m.W_prime = [omega](double) { return omega; };
      m.eta = [alpha](double x) { return 1.0 + alpha * x * x; };
      m.eta_prime = [alpha](double x) { return 2.0 * alpha * x; };
      m.exact_energy = [omega, alpha](int n) { return 2.0 * n * omega + n * n * alpha; };
      m.domain = {-kInf, kInf};
      break;
    }
    case DeformedKind::semi_confined_ho: {
      only_accept(params, {"omega", "x0"}, "semi_confined_ho");
      const double omega = param(params, "omega");
      const double x0 = param(params, "x0");
      if (!(omega > 0.0)) throw ParameterError("semi_confined_ho: requires omega > 0");
      if (!(x0 > 0.0)) throw ParameterError("semi_confined_ho: requires x0 > 0");
      m.W = [omega, x0](double x) { return omega * x * std::sqrt(x0 / (x + x0)); };
      m.W_prime = [omega, x0](double x) {
        const double y = x + x0;
        return omega * std::sqrt(x0) * (x + 2.0 * x0) / (2.0 * y * std::sqrt(y));
      };
      m.eta = [x0](double x) { return std::sqrt((x + x0) / x0); };
      m.eta_prime = [x0](double x) { return 0.5 / std::sqrt(x0 * (x + x0)); };
      m.exact_energy = [omega](int n) { return 2.0 * n * omega; };
      m.domain = {-x0, kInf};
      break;
    }
    case DeformedKind::custom:
      throw CapabilityError("custom deformed models are assembled field by field, not by name");
  }
  return m;
}

double deformed_swkb_integral(const DeformedModel& model, int n, double tol) {
  return weighted_integral(model, n, tol, true);
}

double ordinary_swkb_integral(const DeformedModel& model, int n, double tol) {
  return weighted_integral(model, n, tol, false);
}

catalog::ResidualStats deformed_si_residual(const DeformedModel& model,
                                            const DeformedModel& shifted,
                                            std::span<const double> grid) {
  if (model.kind != shifted.kind || model.kind == DeformedKind::custom ||
      eta_parameter(model) != eta_parameter(shifted) || model.mass_scale != shifted.mass_scale) {
    throw ParameterError("deformed shape invariance compares models with the same eta and mass");
  }
  if (grid.empty()) throw ParameterError("residual grid is empty");
  const double inv_sqrt_mass = 1.0 / std::sqrt(model.mass_scale);
  catalog::ResidualStats s;
  s.min = kInf;
  s.max = -kInf;
  double sum = 0.0;
  for (double x : grid) {
    if (!model.domain.contains(x)) {
      std::ostringstream msg;
      msg << "grid point " << x << " outside the model domain";
      throw DomainError(msg.str());
    }
    const double eta = model.eta(x) * inv_sqrt_mass;
    const double wa = model.W(x);
    const double wf = shifted.W(x);
    const double r = wa * wa + eta * model.W_prime(x) - wf * wf + eta * shifted.W_prime(x);
    s.min = std::min(s.min, r);
    s.max = std::max(s.max, r);
    sum += r;
  }
  s.mean = sum / static_cast<double>(grid.size());
  s.spread = s.max - s.min;
  return s;
}

DeformedModel deformed_shift(const DeformedModel& model) {
  if (model.kind != DeformedKind::deformed_ho) {
    throw CapabilityError("the parameter shift is only determined for deformed_ho");
  }
  const double omega = model.params.at("omega");
  const double alpha = model.params.at("alpha");
  const double a_eff = alpha / std::sqrt(model.mass_scale);
  // The residual is constant only when its value at x = 1 and x = 0 agree.
  auto mismatch = [&](double w) {
    const auto partner = make_deformed(DeformedKind::deformed_ho, {{"omega", w}, {"alpha", alpha}},
                                       model.mass_scale);
    const double xs[] = {0.0, 1.0};
    double r[2];
    for (int i = 0; i < 2; ++i) {
      const double x = xs[i];
      const double eta = model.eta(x) / std::sqrt(model.mass_scale);
      r[i] = model.W(x) * model.W(x) + eta * model.W_prime(x) - partner.W(x) * partner.W(x) +
             eta * partner.W_prime(x);
    }
    return r[1] - r[0];
  };
  const auto bracket = numerics::make_bracket(mismatch, omega, omega + 1.0 + 2.0 * a_eff);
  const double shifted = numerics::find_root(mismatch, bracket, 1e-15);
  return make_deformed(DeformedKind::deformed_ho, {{"omega", shifted}, {"alpha", alpha}},
                       model.mass_scale);
}

FlattenedSystem flatten(const DeformedModel& model, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw ParameterError("kappa must be positive");
  if (!model.domain.contains(0.0)) {
    throw DomainError("flattening fixes z(0) = 0, so the domain must contain x = 0");
  }
  FlattenedSystem f;
  f.kappa = kappa;
  auto eta = model.eta;
  f.z_of_x = [eta, kappa](double x) {
    auto inv = [&eta](double t) { return 1.0 / eta(t); };
    return kappa * numerics::integrate_smooth(inv, 0.0, x, 1e-14).value;
  };

  const catalog::Domain dom = model.domain;
  auto z_of_x = f.z_of_x;
  f.x_of_z = [z_of_x, dom](double z) {
    if (z == 0.0) return 0.0;
    auto g = [&](double x) { return z_of_x(x) - z; };
    const int dir = z > 0.0 ? 1 : -1;
    const double edge = dir > 0 ? dom.hi : dom.lo;
    double prev = 0.0;
    for (int k = 0; k < 1100; ++k) {
      const double cur = std::isfinite(edge) ? edge - edge * std::ldexp(1.0, -(k + 1))
                                             : dir * 1e-3 * std::ldexp(1.0, k);
      if (!std::isfinite(cur) || cur == edge || cur == prev) break;
      if ((g(cur) > 0.0) == (dir > 0)) {
        const double lo = std::min(prev, cur);
        const double hi = std::max(prev, cur);
        return numerics::find_root(g, numerics::make_bracket(g, lo, hi), 1e-15);
      }
      prev = cur;
    }
    std::ostringstream msg;
    msg << "z=" << z << " lies outside the image of the flattening map";
    throw DomainError(msg.str());
  };

  auto x_of_z = f.x_of_z;
  auto W = model.W;
  auto W_prime = model.W_prime;
  const double inv_sqrt_mass = 1.0 / std::sqrt(model.mass_scale);
  f.w = [x_of_z, W, kappa](double z) { return -W(x_of_z(z)) / kappa; };
  f.U = [x_of_z, W, W_prime, eta, kappa, inv_sqrt_mass](double z) {
    const double x = x_of_z(z);
    const double w = W(x);
    return (w * w - eta(x) * inv_sqrt_mass * W_prime(x)) / (kappa * kappa);
  };
  auto energy = model.exact_energy;
  f.epsilon = [energy, kappa](int n) { return energy(n) / (kappa * kappa); };
  return f;
}

double flat_swkb_integral(const DeformedModel& model, const FlattenedSystem& flat, int n,
                          double tol) {
  check_level(n);
  if (n == 0) return 0.0;
  const auto tp = quantization::turning_points(view_of(model), model.exact_energy(n));
  const double za = flat.z_of_x(tp.a);
  const double zb = flat.z_of_x(tp.b);
  const double eps = flat.epsilon(n);
  auto q = [&](double z) {
    const double w = flat.w(z);
    return model.mass_scale * (eps - w * w);
  };
  return numerics::integrate_sqrt_bracket(q, za, zb, tol).value;
}

}  // namespace swkb::pdm
