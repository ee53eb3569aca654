#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace landau::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct Context {
  std::filesystem::path out_dir = ".";
  unsigned threads = 1;
  std::ostream* out = nullptr;
};

struct TableOptions {
  int max_n = 5;
};

struct DensityOptions {
  int n = 0;
  int m_l = 0;
  int points = 1024;
  double rho_max = 8.0;
  std::string format = "csv,svg";
  int plane = 0;  // side of the optional 2D grid, 0 to skip
};

struct SpectrumOptions {
  int n_max = 4;
  std::optional<int> r_max;  // defaults to n_max + 1
  std::string spin = "both";
};

struct DiracCompareOptions {
  int n = 0;
  int m_l = 0;
  std::string m_s = "up";
  std::optional<double> kappa;
  std::optional<double> b_tesla;
  std::optional<double> zeta;
  std::optional<double> p_z;
  int points = 1024;
  double rho_max = 8.0;
};

struct SweepOptions {
  int n = 0;
  int m_l = 0;
  std::string m_s = "up";
  double kappa_min = 1e-6;
  double kappa_max = 0.25;
  int steps = 8;
  double zeta = 0.0;
  int points = 1024;
  double rho_max = 8.0;
};

void cmd_table(const TableOptions& opt, const Context& ctx);
void cmd_density(const DensityOptions& opt, const Context& ctx);
void cmd_spectrum(const SpectrumOptions& opt, const Context& ctx);
void cmd_dirac_compare(const DiracCompareOptions& opt, const Context& ctx);
void cmd_sweep(const SweepOptions& opt, const Context& ctx);

/// Rebuilds the argument list recorded in a manifest.
std::vector<std::string> replay_arguments(const std::filesystem::path& manifest);

/// Parses and runs one command; `args` excludes the program name. Returns the
/// process exit code and never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landau::cli
