// Command-line front end: algebraic identity checking plus solve / sweep /
// residual-verification runs of the rotating-insulator configuration,
// emitting machine-readable JSON or CSV for plotting and CI.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "form4/identity_suite.hpp"
#include "form4/records.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

int cmd_check_identities(std::uint64_t seed, int cases) {
  const form4::IdentityReport rep = form4::run_identity_suite(seed, cases);
  for (const auto& r : rep.results) std::cout << r.summary() << "\n";
  if (!rep.all_pass()) {
    for (const auto& r : rep.results) {
      if (!r.pass)
        std::cerr << "identity '" << r.name << "' violated; worst case: " << r.worst_case
                  << " (replay with --seed " << seed << " --cases " << cases << ")\n";
    }
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exterior-calculus toolkit for rotating-insulator electrodynamics"};
  app.require_subcommand(1);

  // check-identities
  auto* check = app.add_subcommand("check-identities", "run the seeded algebraic identity suite");
  std::uint64_t seed = 1;
  int cases = 1000;
  check->add_option("--seed", seed, "random seed")->capture_default_str();
  check->add_option("--cases", cases, "cases per identity")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // wwe solve / sweep / residual
  auto* wwe_cmd = app.add_subcommand("wwe", "rotating magnetic insulator solver");
  wwe_cmd->require_subcommand(1);

  std::string config_path, out_path, format = "json", param_name = "omega";
  double sweep_from = 0.0, sweep_to = 0.0, fd_step = 0.0;
  int sweep_steps = 1;

  auto* solve = wwe_cmd->add_subcommand("solve", "solve one configuration");
  solve->add_option("--config", config_path, "JSON configuration file")->required();
  int samples_override = -1;
  solve->add_option("--samples", samples_override, "sample count override")
      ->check(CLI::PositiveNumber);
  solve->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  solve->add_option("--out", out_path, "output file (default stdout)");

  auto* sweep = wwe_cmd->add_subcommand("sweep", "sweep one parameter");
  sweep->add_option("--config", config_path, "JSON configuration file")->required();
  sweep->add_option("--param", param_name, "omega|epsilon|mu|B0")
      ->check(CLI::IsMember({"omega", "epsilon", "mu", "B0"}))
      ->required();
  sweep->add_option("--from", sweep_from, "first value")->required();
  sweep->add_option("--to", sweep_to, "last value")->required();
  sweep->add_option("--steps", sweep_steps, "number of points")
      ->check(CLI::PositiveNumber)
      ->required();
  sweep->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sweep->add_option("--out", out_path, "output file (default stdout)");

  auto* residual = wwe_cmd->add_subcommand("residual", "verify the field equations and jumps");
  residual->set_help_flag("--help", "print help");  // frees -h for the step option
  residual->add_option("--config", config_path, "JSON configuration file")->required();
  residual->add_option("--h", fd_step, "finite-difference step")->check(CLI::PositiveNumber);
  residual->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check_identities(seed, cases);

    form4::records::RunConfig rc = form4::records::load_run_config(config_path);

    if (solve->parsed()) {
      if (samples_override > 0) rc.samples = samples_override;
      const auto rec = form4::records::build_solve_record(rc);
      const std::string text = (format == "json") ? form4::records::solve_record_json(rec)
                                                  : form4::records::solve_record_csv(rec);
      return emit(text, out_path);
    }

    if (sweep->parsed()) {
      form4::wwe::SweepParam param = form4::wwe::SweepParam::omega;
      if (param_name == "epsilon") param = form4::wwe::SweepParam::epsilon;
      if (param_name == "mu") param = form4::wwe::SweepParam::mu;
      if (param_name == "B0") param = form4::wwe::SweepParam::B0;
      const auto rows = form4::wwe::sweep(rc.config, param, sweep_from, sweep_to, sweep_steps);
      const std::string text = (format == "json") ? form4::records::sweep_json(rows, param)
                                                  : form4::records::sweep_csv(rows, param);
      return emit(text, out_path);
    }

    if (residual->parsed()) {
      const double h = (fd_step > 0.0) ? fd_step : rc.fd_step;
      const auto sol = form4::wwe::solve(rc.config);
      const auto rep = form4::wwe::residual_report(sol, h);
      const int rc_emit = emit(form4::records::residual_report_json(rc, rep), out_path);
      if (rc_emit != kExitOk) return rc_emit;
      return rep.pass() ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
