#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "landau/dirac.hpp"
#include "landau/eigenfunctions.hpp"
#include "landau/errors.hpp"
#include "landau/spectra.hpp"
#include "landau/units.hpp"
#include "output.hpp"

#ifndef LANDAU_VERSION
#define LANDAU_VERSION "0.0.0"
#endif

namespace landau::cli {
namespace {

using json = nlohmann::ordered_json;

class Manifest {
 public:
  Manifest(std::string command, json parameters) {
    doc_["command"] = std::move(command);
    doc_["tool_version"] = LANDAU_VERSION;
    doc_["parameters"] = std::move(parameters);
    doc_["dimensionless"] = json::object();
    doc_["outputs"] = json::array();
  }

  json& operator[](const char* key) { return doc_[key]; }

  void write(const Context& ctx, const std::string& name, std::string_view text) {
    write_text(ctx.out_dir / name, text);
    doc_["outputs"].push_back(name);
  }

  void finish(const Context& ctx) {
    write_text(ctx.out_dir / "manifest.json", doc_.dump(2) + "\n");
  }

 private:
  json doc_;
};

void prepare(const Context& ctx) { std::filesystem::create_directories(ctx.out_dir); }

std::ostream& out(const Context& ctx) { return *ctx.out; }

Spin parse_spin(const std::string& s) {
  if (s == "up" || s == "+1/2" || s == "1/2" || s == "0.5" || s == "+0.5") return Spin::up;
  if (s == "down" || s == "-1/2" || s == "-0.5") return Spin::down;
  throw UsageError("unknown spin projection '" + s + "' (use up, down, +1/2 or -1/2)");
}

std::string spin_label(Spin s) { return s == Spin::up ? "up" : "down"; }

std::vector<std::string> split_formats(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "csv" && item != "json" && item != "svg" && item != "ascii") {
      throw UsageError("unknown format '" + item + "' (choose from csv, json, svg, ascii)");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty format list");
  return out;
}

std::string bracket_text(const BracketPolynomial& b) {
  std::string s;
  for (int p = static_cast<int>(b.coefficients.size()) - 1; p >= 0; --p) {
    const long long c = b.coefficients[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || p == 0) s += std::to_string(mag);
    if (p >= 1) s += "(br)";
    if (p >= 2) s += "^" + std::to_string(p);
  }
  return s;
}

std::string state_label(int n, int m_l) {
  return "F(" + std::to_string(n) + "," + std::to_string(m_l) + ")";
}

}  // namespace

void cmd_table(const TableOptions& opt, const Context& ctx) {
  if (opt.max_n < 0 || opt.max_n > 8) throw UnsupportedRange("table is available for 0 <= max-n <= 8");
  prepare(ctx);
  Manifest manifest("table", {{"max-n", opt.max_n}});
  manifest["dimensionless"] = {{"beta", 1.0}};

  std::string csv = "n,m_l,norm_denominator,normalization,bracket\n";
  json rows = json::array();
  out(ctx) << "F = 1/sqrt(pi * D) * [bracket] * exp(-(br)^2/2) * exp(i m_l phi), br = beta rho\n";
  for (int n = 0; n <= opt.max_n; ++n) {
    for (int m = n; m >= -n; m -= 2) {
      const auto b = bracket_polynomial(n, m);
      const double norm = 1.0 / std::sqrt(std::numbers::pi * static_cast<double>(b.norm_denominator));
      std::string coeffs;
      for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
        if (j) coeffs += ' ';
        coeffs += std::to_string(b.coefficients[j]);
      }
      csv += std::to_string(n) + ',' + std::to_string(m) + ',' + std::to_string(b.norm_denominator) + ',' +
             format_double(norm) + ',' + coeffs + '\n';
      rows.push_back({{"n", n},
                      {"m_l", m},
                      {"norm_denominator", b.norm_denominator},
                      {"normalization", norm},
                      {"coefficients", b.coefficients},
                      {"closed_form_tabulated", has_closed_form(n, m)}});
      out(ctx) << state_label(n, m) << "  D=" << b.norm_denominator << "  [" << bracket_text(b) << "]";
      if (m != 0) out(ctx) << "  exp(" << (m > 0 ? "" : "-") << (std::abs(m) == 1 ? "" : std::to_string(std::abs(m))) << "i phi)";
      out(ctx) << '\n';
    }
  }
  manifest.write(ctx, "table.csv", csv);
  manifest.write(ctx, "table.json", json{{"rows", rows}}.dump(2) + "\n");
  manifest.finish(ctx);
}

void cmd_density(const DensityOptions& opt, const Context& ctx) {
  const auto formats = split_formats(opt.format);
  if (opt.plane < 0) throw UsageError("--plane must be >= 0");
  const EigenfunctionSpec spec{opt.n, opt.m_l};
  validate(spec);
  const auto profile = sample_profile(spec, opt.rho_max, opt.points, ctx.threads);
  prepare(ctx);

  Manifest manifest("density", {{"n", opt.n},
                                {"m-l", opt.m_l},
                                {"points", opt.points},
                                {"rho-max", opt.rho_max},
                                {"format", opt.format},
                                {"plane", opt.plane}});
  manifest["dimensionless"] = {{"beta", 1.0}};
  const int zeros = count_interior_zeros(profile);
  const double integral = trapezoid(profile);
  const auto peak = static_cast<std::size_t>(
      std::max_element(profile.density.begin(), profile.density.end()) - profile.density.begin());
  manifest["summary"] = {{"interior_zeros", zeros},
                         {"trapezoid_integral", integral},
                         {"peak_rho", profile.rho[peak]}};
  manifest["notes"] = json::array({"rho in units of 1/beta", "density is 2 pi rho |F|^2"});

  for (const auto& f : formats) {
    if (f == "csv") {
      manifest.write(ctx, "density.csv", to_csv({{"rho", "density"}, {profile.rho, profile.density}}));
    } else if (f == "json") {
      const json doc = {{"n", opt.n}, {"m_l", opt.m_l}, {"rho", profile.rho}, {"density", profile.density}};
      manifest.write(ctx, "density.json", doc.dump(2) + "\n");
    } else if (f == "svg") {
      manifest.write(ctx, "density.svg",
                     line_plot_svg({"Radial probability density " + state_label(opt.n, opt.m_l),
                                    "beta rho", "D(rho)"},
                                   {{state_label(opt.n, opt.m_l), "#1f4e9c", &profile.rho, &profile.density}}));
    } else {
      const std::string text = ascii_plot(profile.rho, profile.density);
      manifest.write(ctx, "density.txt", text);
      out(ctx) << text;
    }
  }

  if (opt.plane > 0) {
    const int n = opt.plane;
    std::vector<double> xs, ys, values;
    std::vector<double> grid(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r) {
      const double y = n == 1 ? 0.0 : opt.rho_max - 2.0 * opt.rho_max * r / (n - 1);
      for (int c = 0; c < n; ++c) {
        const double x = n == 1 ? 0.0 : -opt.rho_max + 2.0 * opt.rho_max * c / (n - 1);
        const double v = std::norm(evaluate_F(spec, std::hypot(x, y), std::atan2(y, x)));
        xs.push_back(x);
        ys.push_back(y);
        values.push_back(v);
        grid[static_cast<std::size_t>(r * n + c)] = v;
      }
    }
    manifest.write(ctx, "density_plane.csv", to_csv({{"x", "y", "density"}, {xs, ys, values}}));
    manifest.write(ctx, "density_plane.svg",
                   heatmap_svg({"|F|^2 " + state_label(opt.n, opt.m_l), "beta x", "beta y"}, n, grid,
                               opt.rho_max));
  }
  manifest.finish(ctx);
  out(ctx) << state_label(opt.n, opt.m_l) << ": " << zeros << " interior zeros, integral "
           << format_double(integral) << ", peak at rho " << format_double(profile.rho[peak]) << '\n';
}

void cmd_spectrum(const SpectrumOptions& opt, const Context& ctx) {
  if (opt.n_max < 0) throw DomainError("--n-max must be >= 0");
  const int r_max = opt.r_max.value_or(opt.n_max + 1);
  if (r_max < 0) throw DomainError("--r-max must be >= 0");
  SpinFilter filter = SpinFilter::both;
  if (opt.spin == "up") {
    filter = SpinFilter::up;
  } else if (opt.spin == "down") {
    filter = SpinFilter::down;
  } else if (opt.spin != "both") {
    throw UsageError("--spin must be both, up or down");
  }
  prepare(ctx);
  Manifest manifest("spectrum", {{"n-max", opt.n_max}, {"r-max", r_max}, {"spin", opt.spin}});
  manifest["dimensionless"] = {{"zeta", 0.0}};
  manifest["notes"] = json::array({"energies in units of hbar omega, omega = eB/2m0, p_z = 0",
                                   "degeneracy counts only states with n <= n-max"});

  const Scales rest = Scales::dimensionless(0.0);
  std::string csv = "n,m_l,m_s,r,E_over_hbar_omega\n";
  json records = json::array();
  for (const auto& q : enumerate_states(opt.n_max, filter)) {
    const auto rec = energy_record(q, rest);
    const double ms = projection(q.m_s);
    csv += std::to_string(q.n) + ',' + std::to_string(q.m_l) + ',' + format_double(ms) + ',' +
           std::to_string(*rec.landau_r) + ',' + format_double(rec.e_schrodinger) + '\n';
    records.push_back({{"n", q.n}, {"m_l", q.m_l}, {"m_s", ms}, {"r", *rec.landau_r},
                       {"E_over_hbar_omega", rec.e_schrodinger}});
  }
  std::string deg_csv = "r,E_over_hbar_omega,count\n";
  json degeneracy = json::array();
  out(ctx) << "Landau levels up to r = " << r_max << " counting states with n <= " << opt.n_max
           << " (spin " << opt.spin << ")\n";
  for (int r = 0; r <= r_max; ++r) {
    const auto level = enumerate_landau_level(r, opt.n_max, filter);
    deg_csv += std::to_string(r) + ',' + std::to_string(2 * r) + ',' + std::to_string(level.size()) + '\n';
    json states = json::array();
    std::string listing;
    for (const auto& q : level) {
      states.push_back({{"n", q.n}, {"m_l", q.m_l}, {"m_s", projection(q.m_s)}});
      listing += " (" + std::to_string(q.n) + "," + std::to_string(q.m_l) + "," + spin_label(q.m_s) + ")";
    }
    degeneracy.push_back({{"r", r}, {"E_over_hbar_omega", 2 * r}, {"count", level.size()}, {"states", states}});
    out(ctx) << "r=" << r << " E=" << 2 * r << " count=" << level.size() << ":" << listing << '\n';
  }
  manifest.write(ctx, "spectrum.csv", csv);
  manifest.write(ctx, "degeneracy.csv", deg_csv);
  manifest.write(ctx, "spectrum.json",
                 json{{"n_max", opt.n_max}, {"records", records}, {"degeneracy", degeneracy}}.dump(2) + "\n");
  manifest.finish(ctx);
}

namespace {

json comparison_summary(const DensityComparison& c, const DiracSpinorField& s) {
  return {{"energy_schrodinger_hbar_omega", c.energy_schrodinger},
          {"energy_dirac_m0c2", c.energy_dirac},
          {"sup_difference", c.sup_difference},
          {"mean_radius_schrodinger", c.mean_radius_schrodinger},
          {"mean_radius_dirac", c.mean_radius_dirac},
          {"lower_component_weight", c.lower_component_weight},
          {"fourth_component_weight", s.component_weight(3)},
          {"norm_constant", s.norm_constant}};
}

std::string comparison_csv(const DensityComparison& c) {
  return to_csv({{"rho", "density_schrodinger", "density_dirac"},
                 {c.schrodinger.rho, c.schrodinger.density, c.dirac.density}});
}

json comparison_notes() {
  return json::array({"rho in units of 1/beta",
                      "Dirac density sums all four spinor components",
                      "spinor normalized per unit length along z"});
}

}  // namespace

void cmd_dirac_compare(const DiracCompareOptions& opt, const Context& ctx) {
  if (opt.kappa.has_value() == opt.b_tesla.has_value()) {
    throw UsageError("give exactly one of --kappa or --B-tesla");
  }
  if (opt.zeta && opt.p_z) throw UsageError("--zeta and --pz are mutually exclusive");
  const QuantumNumbers q{opt.n, opt.m_l, parse_spin(opt.m_s)};
  validate(q);

  json params = {{"n", opt.n}, {"m-l", opt.m_l}, {"m-s", spin_label(q.m_s)}};
  const PhysicalConstants constants{};
  double kappa = 0.0;
  std::optional<Scales> si;
  if (opt.kappa) {
    kappa = *opt.kappa;
    params["kappa"] = kappa;
  } else {
    si = derive_scales({*opt.b_tesla, opt.p_z.value_or(0.0), constants});
    kappa = si->kappa;
    params["B-tesla"] = *opt.b_tesla;
  }
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("field strength must be positive (kappa > 0)");
  double zeta = opt.zeta.value_or(0.0);
  if (opt.p_z) {
    zeta = *opt.p_z / (constants.electron_mass * constants.speed_of_light);
    params["pz"] = *opt.p_z;
  } else {
    params["zeta"] = zeta;
  }
  params["points"] = opt.points;
  params["rho-max"] = opt.rho_max;

  const Scales scales = Scales::dimensionless(kappa, zeta);
  const auto cmp = compare_densities(q, scales, {opt.rho_max, opt.points}, ctx.threads);
  const auto spinor = build_spinor(q, scales);
  prepare(ctx);

  Manifest manifest("dirac-compare", params);
  manifest["dimensionless"] = {{"kappa", kappa}, {"zeta", zeta}, {"beta", 1.0}};
  if (si) {
    manifest["si"] = {{"b_tesla", *opt.b_tesla}, {"beta_per_meter", si->beta}, {"omega_rad_per_s", si->omega}};
  }
  manifest["results"] = comparison_summary(cmp, spinor);
  manifest["notes"] = comparison_notes();
  manifest.write(ctx, "dirac_compare.csv", comparison_csv(cmp));
  manifest.write(ctx, "dirac_compare.svg",
                 line_plot_svg({"Schrodinger vs Dirac " + describe(q) + ", kappa = " + format_double(kappa),
                                "beta rho", "D(rho)"},
                               {{"Schrodinger", "#1f4e9c", &cmp.schrodinger.rho, &cmp.schrodinger.density},
                                {"Dirac", "#c0392b", &cmp.dirac.rho, &cmp.dirac.density}}));
  manifest.finish(ctx);
  out(ctx) << describe(q) << " kappa=" << format_double(kappa) << " zeta=" << format_double(zeta)
           << "\n  E_schrodinger/hbar_omega=" << format_double(cmp.energy_schrodinger)
           << "  E_dirac/m0c2=" << format_double(cmp.energy_dirac)
           << "\n  sup|D_dirac - D_schrodinger|=" << format_double(cmp.sup_difference)
           << "  <rho> " << format_double(cmp.mean_radius_schrodinger) << " -> "
           << format_double(cmp.mean_radius_dirac) << '\n';
}

void cmd_sweep(const SweepOptions& opt, const Context& ctx) {
  if (!(opt.kappa_min > 0.0) || !(opt.kappa_max > opt.kappa_min) || !std::isfinite(opt.kappa_max)) {
    throw DomainError("sweep requires 0 < kappa-min < kappa-max");
  }
  if (opt.steps < 2) throw DomainError("sweep requires steps >= 2");
  const QuantumNumbers q{opt.n, opt.m_l, parse_spin(opt.m_s)};
  validate(q);
  prepare(ctx);

  Manifest manifest("sweep", {{"n", opt.n},
                              {"m-l", opt.m_l},
                              {"m-s", spin_label(q.m_s)},
                              {"kappa-min", opt.kappa_min},
                              {"kappa-max", opt.kappa_max},
                              {"steps", opt.steps},
                              {"zeta", opt.zeta},
                              {"points", opt.points},
                              {"rho-max", opt.rho_max}});
  manifest["dimensionless"] = {{"zeta", opt.zeta}, {"beta", 1.0}, {"spacing", "logarithmic in kappa"}};
  manifest["notes"] = comparison_notes();
  const bool ground = q == QuantumNumbers{0, 0, Spin::up};
  const double log_min = std::log(opt.kappa_min), log_max = std::log(opt.kappa_max);
  json frames = json::array();
  for (int i = 0; i < opt.steps; ++i) {
    double kappa = std::exp(log_min + (log_max - log_min) * i / (opt.steps - 1));
    if (i == 0) kappa = opt.kappa_min;
    if (i == opt.steps - 1) kappa = opt.kappa_max;
    const Scales scales = Scales::dimensionless(kappa, opt.zeta);
    const auto cmp = compare_densities(q, scales, {opt.rho_max, opt.points}, ctx.threads);
    const auto spinor = build_spinor(q, scales);
    std::string name = std::to_string(i);
    name = "sweep_" + std::string(name.size() < 3 ? 3 - name.size() : 0, '0') + name + ".csv";
    manifest.write(ctx, name, comparison_csv(cmp));
    json frame = {{"index", i}, {"kappa", kappa}, {"file", name}};
    frame.update(comparison_summary(cmp, spinor));
    if (ground) {
      const double e1 = spinor.energy + 1.0;
      const double x = 4.0 * kappa / (e1 * e1);
      frame["fourth_component_weight_closed_form"] = x / (1.0 + x + opt.zeta * opt.zeta / (e1 * e1));
    }
    frames.push_back(frame);
    out(ctx) << name << " kappa=" << format_double(kappa) << " sup_diff=" << format_double(cmp.sup_difference)
             << " <rho>_dirac=" << format_double(cmp.mean_radius_dirac) << '\n';
  }
  manifest["frames"] = frames;
  manifest.finish(ctx);
}

}  // namespace landau::cli
