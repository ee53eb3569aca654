#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "landau/errors.hpp"
#include "output.hpp"

namespace landau::cli {

std::vector<std::string> replay_arguments(const std::filesystem::path& manifest) {
  std::ifstream f(manifest);
  if (!f) throw UsageError("cannot read manifest " + manifest.string());
  const auto doc = nlohmann::ordered_json::parse(f);
  std::vector<std::string> args{doc.at("command").get<std::string>()};
  for (const auto& [key, value] : doc.at("parameters").items()) {
    args.push_back("--" + key);
    if (value.is_string()) {
      args.push_back(value.get<std::string>());
    } else if (value.is_number_integer()) {
      args.push_back(std::to_string(value.get<long long>()));
    } else if (value.is_number()) {
      args.push_back(format_double(value.get<double>()));
    } else {
      throw UsageError("unsupported parameter type for '" + key + "' in manifest");
    }
  }
  return args;
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool allow_replay) {
  CLI::App app{"Electron in a uniform magnetic field: eigenfunctions, Landau levels, Dirac comparison",
               "landau"};
  app.set_version_flag("--version", LANDAU_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_dir = ".";
  unsigned threads = 0;
  app.add_option("-o,--out", out_dir, "Directory for output files")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for grid sampling (0 = all cores)");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Eigenfunction brackets and normalizations");
  table_cmd->add_option("--max-n", table.max_n, "Largest n (0..8)")->capture_default_str();

  DensityOptions density;
  auto* density_cmd = app.add_subcommand("density", "Radial probability density of F(n,m_l)");
  density_cmd->add_option("--n", density.n, "Principal oscillator number")->required();
  density_cmd->add_option("--m-l", density.m_l, "Angular momentum projection")->required();
  density_cmd->add_option("--points", density.points, "Grid points")->capture_default_str();
  density_cmd->add_option("--rho-max", density.rho_max, "Grid end in units of 1/beta")->capture_default_str();
  density_cmd->add_option("--format", density.format, "Comma-separated list of csv,json,svg,ascii")
      ->capture_default_str();
  density_cmd->add_option("--plane", density.plane, "Side of an extra 2D grid (0 = none)")->capture_default_str();

  SpectrumOptions spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Energies and Landau-level degeneracy");
  spectrum_cmd->add_option("--n-max", spectrum.n_max, "Largest n to enumerate")->capture_default_str();
  spectrum_cmd->add_option("--r-max", spectrum.r_max, "Largest Landau index (default n-max + 1)");
  spectrum_cmd->add_option("--spin", spectrum.spin, "both, up or down")->capture_default_str();

  DiracCompareOptions dirac;
  auto* dirac_cmd = app.add_subcommand("dirac-compare", "Schrodinger vs Dirac radial density");
  dirac_cmd->add_option("--n", dirac.n)->required();
  dirac_cmd->add_option("--m-l", dirac.m_l)->required();
  dirac_cmd->add_option("--m-s", dirac.m_s, "up, down, +1/2 or -1/2")->capture_default_str();
  auto* kappa_opt = dirac_cmd->add_option("--kappa", dirac.kappa, "hbar omega / m0 c^2");
  auto* b_opt = dirac_cmd->add_option("--B-tesla", dirac.b_tesla, "Field strength in tesla");
  kappa_opt->excludes(b_opt);
  auto* zeta_opt = dirac_cmd->add_option("--zeta", dirac.zeta, "p_z / m0 c (default 0)");
  auto* pz_opt = dirac_cmd->add_option("--pz", dirac.p_z, "Axial momentum in kg m/s");
  zeta_opt->excludes(pz_opt);
  dirac_cmd->add_option("--points", dirac.points)->capture_default_str();
  dirac_cmd->add_option("--rho-max", dirac.rho_max)->capture_default_str();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Dirac comparison frames over a log range of kappa");
  sweep_cmd->add_option("--n", sweep.n)->capture_default_str();
  sweep_cmd->add_option("--m-l", sweep.m_l)->capture_default_str();
  sweep_cmd->add_option("--m-s", sweep.m_s)->capture_default_str();
  sweep_cmd->add_option("--kappa-min", sweep.kappa_min)->capture_default_str();
  sweep_cmd->add_option("--kappa-max", sweep.kappa_max)->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps)->capture_default_str();
  sweep_cmd->add_option("--zeta", sweep.zeta)->capture_default_str();
  sweep_cmd->add_option("--points", sweep.points)->capture_default_str();
  sweep_cmd->add_option("--rho-max", sweep.rho_max)->capture_default_str();

  std::string manifest_path;
  CLI::App* replay_cmd = nullptr;
  if (allow_replay) {
    replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    replay_cmd->add_option("manifest", manifest_path, "manifest.json written by an earlier run")->required();
  }

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx;
  ctx.out_dir = out_dir;
  ctx.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  ctx.out = &out;

  if (replay_cmd && replay_cmd->parsed()) {
    auto replayed = replay_arguments(manifest_path);
    replayed.insert(replayed.begin(), {"--out", out_dir, "--threads", std::to_string(ctx.threads)});
    return dispatch(replayed, out, err, false);
  }
  if (table_cmd->parsed()) cmd_table(table, ctx);
  if (density_cmd->parsed()) cmd_density(density, ctx);
  if (spectrum_cmd->parsed()) cmd_spectrum(spectrum, ctx);
  if (dirac_cmd->parsed()) cmd_dirac_compare(dirac, ctx);
  if (sweep_cmd->parsed()) cmd_sweep(sweep, ctx);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err, true);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: malformed manifest: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace landau::cli
