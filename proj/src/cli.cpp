#include "swkb/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "swkb/catalog.hpp"
#include "swkb/error.hpp"
#include "swkb/natanzon.hpp"
#include "swkb/pct.hpp"
#include "swkb/pdm.hpp"
#include "swkb/quantization.hpp"
#include "swkb/report.hpp"

namespace swkb::cli {

namespace {

using report::Cell;
using report::Table;

constexpr double kPi = std::numbers::pi;

struct Common {
  std::string format = "table";
  std::optional<std::string> output;
  std::optional<double> tol;
  int n_max = -1;
  bool parallel = false;
};

// Named model parameters as they appear on the command line.
struct ParamFlags {
  std::optional<std::string> family;
  std::map<std::string, std::optional<double>> values{
      {"omega", {}}, {"g", {}}, {"h", {}}, {"e2", {}}, {"mu", {}}, {"g_tilde", {}}, {"h_tilde", {}}};

  catalog::Params collect() const {
    catalog::Params p;
    for (const auto& [name, v] : values) {
      if (v) p[name] = *v;
    }
    return p;
  }
};

void add_common(CLI::App* sub, Common& c, int default_n_max) {
  c.n_max = default_n_max;
  sub->add_option("--format", c.format, "table, json or csv")->capture_default_str();
  sub->add_option("--output", c.output, "write the report to this path");
  sub->add_option("--tol", c.tol, "quadrature tolerance (env SWKB_LAB_TOL)");
  sub->add_option("--n-max", c.n_max, "highest quantum number")->capture_default_str();
  sub->add_flag("--parallel", c.parallel, "evaluate levels on worker threads");
}

void add_params(CLI::App* sub, ParamFlags& p, bool family_required) {
  auto* fam = sub->add_option("--family", p.family, "catalog family, e.g. ho-1d, morse");
  if (family_required) fam->required();
  for (auto& [name, value] : p.values) {
    std::string flag = "--" + name;
    std::replace(flag.begin(), flag.end(), '_', '-');
    sub->add_option(flag, value, "parameter " + name);
  }
}

double resolve_tol(const Common& c) {
  double tol = numerics::kDefaultQuadTol;
  if (c.tol) {
    tol = *c.tol;
  } else if (const char* env = std::getenv("SWKB_LAB_TOL"); env && *env) {
    const std::string s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), tol);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw ParameterError("SWKB_LAB_TOL is not a number: '" + s + "'");
    }
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ParameterError("tolerance must be positive");
  return tol;
}

// Runs fn(i) for i in [0, count), optionally on worker threads. Results are
// written by index, so ordering never depends on scheduling; the exception
// from the lowest failing index wins.
void for_each_index(std::size_t count, bool parallel, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  auto guarded = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (!parallel || count < 2) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  } else {
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) guarded(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

int levels_for(std::optional<int> model_n_max, int requested, std::ostream& err) {
  if (requested < 0) throw ParameterError("--n-max must be >= 0");
  if (model_n_max && requested > *model_n_max) {
    err << "warning: n-max lowered from " << requested << " to " << *model_n_max
        << " (last bound state)\n";
    return *model_n_max;
  }
  return requested;
}

Cell opt(const std::optional<double>& v) { return v ? Cell(*v) : Cell(); }

int finish(const Table& t, const Common& c, bool ok, std::ostream& out) {
  report::emit_report(t, report::parse_format(c.format), c.output, out);
  return ok ? kOk : kViolation;
}

int cmd_catalog(const Common& c, std::ostream& out) {
  const auto fmt = report::parse_format(c.format);
  if (fmt == report::Format::json) {
    const std::string doc = catalog::catalog_json() + "\n";
    if (c.output) {
      std::ofstream file(*c.output, std::ios::binary);
      if (!file || !(file << doc)) throw IoError("cannot write '" + *c.output + "'");
    } else {
      out << doc;
    }
    return kOk;
  }
  Table t{{"family", "parameters", "domain", "energy", "n_max_rule"}, {}};
  for (const auto& f : nlohmann::json::parse(catalog::catalog_json())) {
    std::string params;
    for (const auto& p : f["parameters"]) params += (params.empty() ? "" : " ") + p.get<std::string>();
    auto bound = [](const nlohmann::json& b) {
      return b.is_string() ? b.get<std::string>() : report::format_number(b.get<double>(), report::Format::json);
    };
    t.rows.push_back({f["family"].get<std::string>(), params,
                      "(" + bound(f["domain"][0]) + ", " + bound(f["domain"][1]) + ")",
                      f["energy"].get<std::string>(), f["n_max_rule"].get<std::string>()});
  }
  return finish(t, c, true, out);
}

int cmd_check(const Common& c, const ParamFlags& pf, bool solve, std::ostream& out,
              std::ostream& err) {
  const double tol = resolve_tol(c);
  const auto model = catalog::make_model(catalog::parse_family(*pf.family), pf.collect());
  const int top = levels_for(model.n_max(), c.n_max, err);
  std::vector<quantization::SwkbReport> rows(top + 1);
  for_each_index(rows.size(), c.parallel, [&](std::size_t i) {
    const int n = static_cast<int>(i);
    auto r = quantization::swkb_check(model, n, tol);
    if (solve) {
      r.energy_swkb = quantization::swkb_solve_energy(model, n, tol);
      const double scale = r.energy_exact == 0.0 ? 1.0 : std::abs(r.energy_exact);
      r.relative_energy_error = std::abs(*r.energy_swkb - r.energy_exact) / scale;
    }
    rows[i] = r;
  });

  const double bound = std::max(10.0 * tol, 1e-8);
  bool ok = true;
  Table t{{"n", "E_exact", "integral", "deviation", "E_swkb", "rel_err"}, {}};
  for (const auto& r : rows) {
    if (r.clamped > 0) {
      err << "warning: n=" << r.n << " clamped " << r.clamped
          << " negative radicand values near the turning points\n";
    }
    ok = ok && std::abs(r.deviation) <= bound;
    if (r.relative_energy_error) ok = ok && *r.relative_energy_error <= bound;
    t.rows.push_back({static_cast<long long>(r.n), r.energy_exact, r.integral, r.deviation,
                      opt(r.energy_swkb), opt(r.relative_energy_error)});
  }
  return finish(t, c, ok, out);
}

// Default parameter points for the derived rows when no family is given.
catalog::Params default_pct_params(catalog::FamilyId id) {
  using catalog::FamilyId;
  switch (id) {
    case FamilyId::coulomb:
      return {{"e2", 2.0}, {"g_tilde", 1.0}};
    case FamilyId::morse:
      return {{"mu", 1.0}, {"h", 3.5}};
    case FamilyId::rosen_morse:
      return {{"mu", 1.0}, {"h_tilde", 4.0}};
    case FamilyId::eckart:
      return {{"mu", 9.0}, {"g_tilde", 1.2}};
    case FamilyId::hyperbolic_pt:
      return {{"g", 1.0}, {"h_tilde", 8.0}};
    case FamilyId::hyperbolic_top2:
      return {{"mu", 1.5}, {"h_tilde", 4.5}};
    default:
      return {};
  }
}

std::vector<double> se_grid(const catalog::PotentialModel& m) {
  const auto d = m.domain();
  const double lo = std::isfinite(d.lo) ? d.lo + 0.05 : m.w_zero() - 4.0;
  const double hi = std::isfinite(d.lo) ? std::max(12.0, 4.0 * m.w_zero()) : m.w_zero() + 4.0;
  std::vector<double> xs(50);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = lo + (hi - lo) * i / (xs.size() - 1.0);
  return xs;
}

int cmd_pct(const Common& c, const ParamFlags& pf, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tol(c);
  struct Job {
    const pct::TransformSpec* spec;
    catalog::Params params;
    int n;
  };
  std::vector<Job> jobs;
  auto add_row = [&](const pct::TransformSpec& spec, const catalog::Params& params) {
    const auto model = catalog::make_model(spec.target, params);
    const int top = levels_for(model.n_max(), c.n_max, err);
    for (int n = 0; n <= top; ++n) jobs.push_back({&spec, params, n});
  };
  if (pf.family) {
    add_row(pct::find_transform(catalog::parse_family(*pf.family)), pf.collect());
  } else {
    if (!pf.collect().empty()) throw ParameterError("parameters need --family");
    for (const auto& spec : pct::list_transforms()) add_row(spec, default_pct_params(spec.target));
  }

  struct Row {
    std::optional<pct::TransformReport> swkb;
    std::optional<double> se_residual;
    pct::EnergyMapReport energy;
    bool passed = true;
  };
  std::vector<Row> rows(jobs.size());
  for_each_index(jobs.size(), c.parallel, [&](std::size_t i) {
    const Job& j = jobs[i];
    Row r;
    r.energy = pct::verify_energy_map(*j.spec, j.params, j.n);
    r.passed = r.energy.passed;
    if (j.spec->realness == pct::Realness::real_map) {
      r.swkb = pct::verify_swkb_transform(*j.spec, j.params, j.n, std::max(10.0 * tol, 1e-8), tol);
      r.passed = r.passed && r.swkb->passed;
      const auto model = catalog::make_model(j.spec->target, j.params);
      const auto grid = se_grid(model);
      r.se_residual = pct::verify_se_transform(*j.spec, j.params, j.n, grid).max_residual;
      r.passed = r.passed && *r.se_residual < 1e-5;
    }
    rows[i] = r;
  });

  Table t{{"target", "source", "realness", "n", "E_target", "target_integral", "source_integral",
           "deviation", "se_residual", "energy_map_error", "energy_map_imag", "passed"},
          {}};
  bool ok = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& j = jobs[i];
    const auto& r = rows[i];
    ok = ok && r.passed;
    t.rows.push_back({std::string(catalog::to_string(j.spec->target)),
                      std::string(catalog::to_string(j.spec->source)),
                      std::string(pct::to_string(j.spec->realness)), static_cast<long long>(j.n),
                      r.energy.target_energy,
                      r.swkb ? Cell(r.swkb->target_integral) : Cell(),
                      r.swkb ? Cell(r.swkb->source_integral) : Cell(),
                      r.swkb ? Cell(r.swkb->max_deviation) : Cell(), opt(r.se_residual),
                      r.energy.max_abs_error, r.energy.max_imag, r.passed});
  }
  return finish(t, c, ok, out);
}

struct NatanzonFlags {
  std::string cls = "L";
  double A = 0.0, B = 0.0, C = 1.0, D = 0.0, F = 0.0, G = 0.0;
  std::optional<std::string> emit_potential;
  std::optional<double> z_min, z_max;
  int z_points = 200;
};

std::string six_digits(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

void write_potential(const natanzon::NatanzonParams& nat, const NatanzonFlags& nf) {
  const bool lag = nat.cls == natanzon::NatanzonClass::laguerre;
  const double lo = nf.z_min.value_or(0.05);
  const double hi = nf.z_max.value_or(lag ? 5.0 : 0.5 * kPi - 0.05);
  if (nf.z_points < 2 || !(lo < hi)) throw ParameterError("potential grid needs z-min < z-max and >= 2 points");
  std::vector<double> zs(nf.z_points);
  for (int i = 0; i < nf.z_points; ++i) zs[i] = lo + (hi - lo) * i / (nf.z_points - 1.0);
  const auto curve = natanzon::natanzon_potential_curve(nat, zs);
  std::ofstream file(*nf.emit_potential, std::ios::binary);
  if (!file) throw IoError("cannot open '" + *nf.emit_potential + "' for writing");
  file << "z,x,V\n";
  for (const auto& p : curve) file << six_digits(p.z) << ',' << six_digits(p.x) << ',' << six_digits(p.V) << '\n';
  if (!file.flush()) throw IoError("failed writing '" + *nf.emit_potential + "'");
}

int cmd_natanzon(const Common& c, const NatanzonFlags& nf, std::ostream& out, std::ostream& err) {
  const double tol = resolve_tol(c);
  natanzon::NatanzonParams nat{natanzon::parse_class(nf.cls), nf.A, nf.B, nf.C, nf.D, nf.F, nf.G};
  natanzon::validate(nat);
  if (c.n_max < 0) throw ParameterError("--n-max must be >= 0");

  // Levels exist up to some finite count; find it before fanning out.
  std::vector<double> energies;
  for (int n = 0; n <= c.n_max; ++n) {
    try {
      energies.push_back(natanzon::natanzon_exact_energy(nat, n));
    } catch (const NoBoundStateError&) {
      if (n == 0) throw;
      err << "warning: only " << n << " bound level(s); n-max lowered to " << n - 1 << "\n";
      break;
    }
  }
  struct Row {
    double e_swkb = 0.0;
    double naive = 0.0;
  };
  std::vector<Row> rows(energies.size());
  for_each_index(rows.size(), c.parallel, [&](std::size_t i) {
    const int n = static_cast<int>(i);
    rows[i] = {natanzon::natanzon_solve_swkb_energy(nat, n, tol),
               natanzon::natanzon_naive_swkb(nat, n, tol)};
  });

  Table t{{"n", "E_exact", "E_swkb", "naive_integral", "naive_deviation"}, {}};
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double e = energies[i];
    ok = ok && std::abs(rows[i].e_swkb - e) <= 1e-6 * std::max(1.0, std::abs(e));
    t.rows.push_back({static_cast<long long>(i), e, rows[i].e_swkb, rows[i].naive,
                      rows[i].naive - static_cast<double>(i) * kPi});
  }
  if (nf.emit_potential) write_potential(nat, nf);
  return finish(t, c, ok, out);
}

struct PdmFlags {
  std::string model;
  std::optional<double> omega, alpha, x0;
  double mass_scale = 1.0;
};

int cmd_pdm(const Common& c, const PdmFlags& pf, std::ostream& out) {
  const double tol = resolve_tol(c);
  std::map<std::string, double> params;
  if (pf.omega) params["omega"] = *pf.omega;
  if (pf.alpha) params["alpha"] = *pf.alpha;
  if (pf.x0) params["x0"] = *pf.x0;
  const auto model = pdm::make_deformed(pdm::parse_kind(pf.model), params, pf.mass_scale);
  if (c.n_max < 0) throw ParameterError("--n-max must be >= 0");

  struct Row {
    double deformed = 0.0;
    double ordinary = 0.0;
  };
  std::vector<Row> rows(c.n_max + 1);
  for_each_index(rows.size(), c.parallel, [&](std::size_t i) {
    const int n = static_cast<int>(i);
    rows[i] = {pdm::deformed_swkb_integral(model, n, tol), pdm::ordinary_swkb_integral(model, n, tol)};
  });

  const double bound = std::max(10.0 * tol, 1e-8);
  Table t{{"n", "E_exact", "deformed_integral", "ordinary_integral", "deviation_ordinary"}, {}};
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double npi = static_cast<double>(i) * kPi;
    ok = ok && std::abs(rows[i].deformed - npi) <= bound * (1.0 + npi);
    t.rows.push_back({static_cast<long long>(i), model.exact_energy(static_cast<int>(i)),
                      rows[i].deformed, rows[i].ordinary, rows[i].ordinary - npi});
  }
  return finish(t, c, ok, out);
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SWKB quantization checks for shape-invariant, Natanzon and deformed systems",
               "swkb_lab"};
  app.require_subcommand(1);
  // "-h" would collide with the --h parameter flag.
  app.set_help_flag("--help", "print this help message and exit");

  Common c_catalog, c_check, c_solve, c_pct, c_nat, c_pdm;
  ParamFlags p_check, p_solve, p_pct;
  NatanzonFlags nf;
  PdmFlags pf;

  auto* catalog_cmd = app.add_subcommand("catalog", "list the shape-invariant families");
  add_common(catalog_cmd, c_catalog, 0);

  auto* check_cmd = app.add_subcommand("check", "SWKB integral at the exact energies");
  add_common(check_cmd, c_check, 5);
  add_params(check_cmd, p_check, true);

  auto* solve_cmd = app.add_subcommand("solve", "invert the SWKB condition for the energies");
  add_common(solve_cmd, c_solve, 5);
  add_params(solve_cmd, p_solve, true);

  auto* pct_cmd = app.add_subcommand("pct", "point canonical transformation checks");
  add_common(pct_cmd, c_pct, 3);
  add_params(pct_cmd, p_pct, false);

  auto* nat_cmd = app.add_subcommand("natanzon", "Natanzon spectra and extended SWKB");
  add_common(nat_cmd, c_nat, 3);
  nat_cmd->add_option("--class", nf.cls, "L (Laguerre) or J (Jacobi)")->capture_default_str();
  nat_cmd->add_option("--A", nf.A)->capture_default_str();
  nat_cmd->add_option("--B", nf.B)->capture_default_str();
  nat_cmd->add_option("--C", nf.C)->capture_default_str();
  nat_cmd->add_option("--D", nf.D)->capture_default_str();
  nat_cmd->add_option("--F", nf.F)->capture_default_str();
  nat_cmd->add_option("--G", nf.G)->capture_default_str();
  nat_cmd->add_option("--emit-potential", nf.emit_potential, "CSV path for z,x,V samples");
  nat_cmd->add_option("--z-min", nf.z_min);
  nat_cmd->add_option("--z-max", nf.z_max);
  nat_cmd->add_option("--z-points", nf.z_points)->capture_default_str();

  auto* pdm_cmd = app.add_subcommand("pdm", "position-dependent-mass SWKB integrals");
  add_common(pdm_cmd, c_pdm, 8);
  pdm_cmd->add_option("--model", pf.model, "deformed-ho or semi-confined")->required();
  pdm_cmd->add_option("--omega", pf.omega);
  pdm_cmd->add_option("--alpha", pf.alpha);
  pdm_cmd->add_option("--x0", pf.x0);
  pdm_cmd->add_option("--mass-scale", pf.mass_scale, "2*m0")->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: kind=usage msg=" << one_line(e.what()) << "\n";
    return kValidation;
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(c_catalog, out);
    if (check_cmd->parsed()) return cmd_check(c_check, p_check, false, out, err);
    if (solve_cmd->parsed()) return cmd_check(c_solve, p_solve, true, out, err);
    if (pct_cmd->parsed()) return cmd_pct(c_pct, p_pct, out, err);
    if (nat_cmd->parsed()) return cmd_natanzon(c_nat, nf, out, err);
    if (pdm_cmd->parsed()) return cmd_pdm(c_pdm, pf, out);
  } catch (const Error& e) {
    err << "error: kind=" << e.kind() << " msg=" << one_line(e.what()) << "\n";
    return e.is_validation() ? kValidation : kNumerical;
  } catch (const std::exception& e) {
    err << "error: kind=internal msg=" << one_line(e.what()) << "\n";
    return kNumerical;
  }
  return kValidation;
}

}  // namespace swkb::cli
