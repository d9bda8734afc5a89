// bodysphere: field sweeps around a dielectric sphere and a self-check suite.
//
//   bodysphere simulate --config scenario.json --out field.csv [options]
//   bodysphere verify [--full]
//
// Exit status: 0 success, 1 invalid input, 2 solver failure, 3 I/O error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bodysphere/app/scenario_io.hpp"
#include "bodysphere/app/sweep.hpp"
#include "bodysphere/app/verify.hpp"
#include "bodysphere/errors.hpp"
#include "bodysphere/format.hpp"
#include "bodysphere/scattering.hpp"

namespace {

using namespace bodysphere;

enum Exit { kOk = 0, kValidation = 1, kSolver = 2, kIo = 3 };

struct SimulateArgs {
  std::string config;
  std::string out;
  std::vector<double> theta;
  std::vector<double> offsets;
  std::string field = "scattered";
  std::string offset_mode = "radial";
  int truncation_q = kDefaultMaxOrder;
  double receiver_r = 0.18;
  unsigned threads = 0;
  bool plot_script = false;
  std::string dump_coefficients;
};

int simulate(const SimulateArgs& a) {
  app::SweepConfig cfg;
  if (!a.theta.empty()) cfg.theta_values = a.theta;
  if (!a.offsets.empty()) cfg.offsets_m = a.offsets;
  cfg.field = a.field == "total" ? app::FieldSelector::Total : app::FieldSelector::Scattered;
  cfg.offset_mode = a.offset_mode == "vertical" ? app::OffsetMode::Vertical : app::OffsetMode::Radial;
  cfg.truncation.max_order_q = a.truncation_q;
  cfg.truncation.max_azimuthal_l = a.truncation_q;
  cfg.receiver_r = a.receiver_r;
  cfg.threads = a.threads;
  cfg.validate();

  const app::SweepSummary s = app::run_sweep(a.config, cfg, a.out);

  if (!a.dump_coefficients.empty()) {
    const app::ScenarioConfig sc = app::load_scenario(a.config);
    std::ofstream out(a.dump_coefficients, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + a.dump_coefficients + "'");
    write_coefficients_csv(CoefficientTable(sc.scenario, a.truncation_q), out);
    if (!out) throw IoError("error while writing '" + a.dump_coefficients + "'");
  }
  if (a.plot_script) {
    std::filesystem::path gp(a.out);
    gp.replace_extension(".gp");
    std::ofstream out(gp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + gp.string() + "'");
    app::write_plot_script(a.out, cfg, out);
    if (!out) throw IoError("error while writing '" + gp.string() + "'");
  }

  std::cout << "rows " << s.rows << "\n"
            << "max_db " << format_double(s.max_db) << "\n"
            << "min_db " << format_double(s.min_db) << "\n";
  for (const auto& t : s.trends) {
    std::cout << "theta " << format_double(t.theta) << " mean|E_phi|";
    for (double v : t.mean_abs_ephi) std::cout << ' ' << format_double(v);
    std::cout << (t.monotone ? "  decreasing" : "  not monotone") << "\n";
  }
  std::cout << "monotone_trend " << (s.monotone_trend ? "true" : "false") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Dyadic Green's function field sweeps around a dielectric sphere"};
  cli.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate_cmd = cli.add_subcommand("simulate", "Sweep the receiver over theta, offset and phi; write CSV");
  simulate_cmd->add_option("--config", sim.config, "Scenario JSON file")->required();
  simulate_cmd->add_option("--out", sim.out, "Output CSV file")->required();
  simulate_cmd->add_option("--theta", sim.theta, "Polar angles in radians (comma separated)")->delimiter(',');
  simulate_cmd->add_option("--offsets", sim.offsets, "Receiver offsets in metres (comma separated)")->delimiter(',');
  simulate_cmd->add_option("--field", sim.field, "Field to report")->check(CLI::IsMember({"scattered", "total"}));
  simulate_cmd->add_option("--offset-mode", sim.offset_mode, "radial: r grows by the offset; vertical: z grows")
      ->check(CLI::IsMember({"radial", "vertical"}));
  simulate_cmd->add_option("--receiver-r", sim.receiver_r, "Receiver range at zero offset (m)");
  simulate_cmd->add_option("--truncation-q", sim.truncation_q, "Maximum series order");
  simulate_cmd->add_option("--threads", sim.threads, "Worker threads (0: all cores)");
  simulate_cmd->add_flag("--plot-script", sim.plot_script, "Write a gnuplot script next to the CSV");
  simulate_cmd->add_option("--dump-coefficients", sim.dump_coefficients, "Write interface coefficients to this CSV");

  bool full = false;
  auto* verify_cmd = cli.add_subcommand("verify", "Run the self-verification suite");
  verify_cmd->add_flag("--full", full, "Full sample counts instead of the quick subset");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (simulate_cmd->parsed()) return simulate(sim);
    const app::VerifyReport r = app::verify(full ? app::VerifyLevel::Full : app::VerifyLevel::Quick);
    app::print_report(r, std::cout);
    return r.passed() ? kOk : kSolver;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kSolver;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  }
}
