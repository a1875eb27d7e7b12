#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "config.hpp"
#include "csv.hpp"
#include "piezoscan/errors.hpp"
#include "piezoscan/materials.hpp"
#include "piezoscan/oracle.hpp"
#include "piezoscan/scanner.hpp"
#include "piezoscan/sweep.hpp"
#include "piezoscan/verification.hpp"

namespace piezoscan::cli {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

/// Output path could not be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& contents) {
  try {
    write_atomic(path, contents);
  } catch (const std::runtime_error& e) {
    throw OutputError(e.what());
  }
}

int cmd_model(const std::string& config_path, const std::string& out_path, std::ostream& out) {
  const ScannerDesign design = resolve(load_config(config_path));
  const ScannerSolution sol = solve_scanner(design.geometry(), design.voltage, 2);
  out << "phi_deg=" << format_number(sol.tilt_magnitude() * kDeg) << " y_max_um=" << format_number(sol.y_max * 1e6)
      << " F_uN=" << format_number(std::abs(sol.force) * 1e6) << '\n';
  write_output(out_path, model_csv(sol));
  return kSuccess;
}

int cmd_profile(const std::string& config_path, std::size_t samples, const std::string& out_path, std::ostream& out) {
  const ScannerDesign design = resolve(load_config(config_path));
  const ScannerSolution sol = solve_scanner(design.geometry(), design.voltage, samples);
  write_output(out_path, profile_csv(sol.profile));
  out << "wrote " << sol.profile.size() << " profile points to " << out_path << '\n';
  return kSuccess;
}

struct SweepArgs {
  std::string config;
  std::string axis;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 0;
  std::string out;
  unsigned threads = 1;
  std::string optimize;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepSpec spec;
  spec.base = resolve(load_config(a.config));
  try {
    spec.axis = parse_axis(a.axis);
    spec.from = a.from;
    spec.to = a.to;
    spec.steps = a.steps;
    spec.validate();
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
  const auto records = run_sweep(spec, a.threads);
  write_output(a.out, sweep_csv(spec.axis, records));
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.ok() ? 0 : 1;
  out << "wrote " << records.size() << " sweep records (" << failed << " failed) to " << a.out << '\n';

  if (!a.optimize.empty()) {
    const Objective objective = a.optimize == "tilt" ? Objective::tilt : Objective::y_max;
    const Optimum best = optimize_1d(spec, objective);
    out << "optimum " << a.axis << "=" << format_number(best.value) << " "
        << (objective == Objective::tilt ? "phi_deg=" : "y_max_um=")
        << format_number(objective == Objective::tilt ? best.objective : best.objective * 1e6) << '\n';
  }
  return kSuccess;
}

int cmd_table1(const std::string& config_path, const std::string& out_path, std::ostream& out) {
  const ScannerDesign base = config_path.empty() ? reference_design() : resolve(load_config(config_path));
  const auto rows = table1(base);
  write_output(out_path, sweep_csv(SweepAxis::beam_length, rows));
  constexpr const char* labels[] = {"A", "B", "C"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << labels[i] << " beam_um=" << format_number(rows[i].value * 1e6) << " phi_deg="
        << format_number(rows[i].tilt_deg) << " y_max_um=" << format_number(rows[i].y_max * 1e6) << '\n';
  }
  return kSuccess;
}

int cmd_verify(std::size_t nodes, std::ostream& out, std::ostream& err) {
  const MaterialRegistry registry = MaterialRegistry::with_defaults();
  out << "assumed material constants:\n";
  for (const auto& [key, m] : registry) {
    out << "  " << m.name << " E_Pa=" << format_number(m.young_modulus);
    if (m.d31) out << " d31_m_per_V=" << format_number(*m.d31);
    if (m.s11E) out << " s11E_per_Pa=" << format_number(*m.s11E);
    out << '\n';
  }

  verification::Options options;
  options.nodes = nodes;
  const auto checks = verification::run_all(options);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name
        << " value=" << format_number(c.value) << " tol=" << format_number(c.tolerance);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
    if (!c.passed) {
      ++failed;
      err << "verify: " << c.name << " value " << format_number(c.value) << " breaches tolerance "
          << format_number(c.tolerance) << '\n';
    }
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kSuccess : kNumericError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Static model of a piezoelectric multimorph micro-scanner", "piezoscan"};
  app.require_subcommand(1);

  std::string config, out_path;
  std::size_t samples = 401;
  std::size_t nodes = 2001;
  SweepArgs sweep;

  auto* model = app.add_subcommand("model", "Evaluate tilt, maximum deflection and force; write model CSV");
  model->add_option("--config", config, "Config file")->required();
  model->add_option("--out", out_path, "Output CSV")->default_val("model.csv");

  auto* profile = app.add_subcommand("profile", "Write the full-device deflection profile CSV");
  profile->add_option("--config", config, "Config file")->required();
  profile->add_option("--samples", samples, "Number of uniform samples over both beams and the mirror")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
  profile->add_option("--out", out_path, "Output CSV")->required();

  auto* sw = app.add_subcommand("sweep", "Sweep one parameter (SI values) and write sweep CSV");
  sw->add_option("--config", sweep.config, "Config file")->required();
  sw->add_option("--axis", sweep.axis, "beam_length|beam_width|substrate_thickness|piezo_thickness|mirror_side|voltage")
      ->required();
  sw->add_option("--from", sweep.from, "First value, SI units")->required();
  sw->add_option("--to", sweep.to, "Last value, SI units")->required();
  sw->add_option("--steps", sweep.steps, "Number of points (>= 2)")->required();
  sw->add_option("--out", sweep.out, "Output CSV")->required();
  sw->add_option("--threads", sweep.threads, "Worker threads")->default_val(1u);
  sw->add_option("--optimize", sweep.optimize, "Also maximize an objective over the range")
      ->check(CLI::IsMember({"tilt", "y_max"}));

  auto* t1 = app.add_subcommand("table1", "Evaluate the three tabulated devices (850/600/500 um beams)");
  t1->add_option("--config", config, "Base config (defaults to the reference device)");
  t1->add_option("--out", out_path, "Output CSV")->required();

  auto* verify = app.add_subcommand("verify", "Run closed-form identities and the finite-difference oracle");
  verify->add_option("--nodes", nodes, "Oracle grid nodes (odd, >= 11)")->default_val(2001);

  std::vector<std::string> argv_storage{"piezoscan"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "config: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*model) return cmd_model(config, out_path, out);
    if (*profile) return cmd_profile(config, samples, out_path, out);
    if (*sw) return cmd_sweep(sweep, out);
    if (*t1) return cmd_table1(config, out_path, out);
    if (*verify) {
      if (nodes < 11 || nodes % 2 == 0) {
        err << "config: --nodes must be odd and >= 11\n";
        return kConfigError;
      }
      return cmd_verify(nodes, out, err);
    }
  } catch (const ConfigError& e) {
    err << "config: " << e.what() << '\n';
    return kConfigError;
  } catch (const OutputError& e) {
    err << "config: " << e.what() << '\n';
    return kConfigError;
  } catch (const UnknownMaterialError& e) {
    err << "config: " << e.what() << '\n';
    return kConfigError;
  } catch (const UnsupportedUnitError& e) {
    err << "config: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "numeric: " << e.what() << '\n';
    return kNumericError;
  }
  return kConfigError;
}

}  // namespace piezoscan::cli
