// sim: planar aerial-manipulator pushing scenarios from the command line.
//
// subcommands:
//   run       one scenario -> report JSON (+ optional CSV telemetry / SVG plot)
//   table     all scenarios in a directory -> summary table + ordering checks
//   envelope  static force/thrust envelopes over the roll angle
//   validate  scenario file check plus the derived setpoints

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uam/sim_runner.hpp"

namespace fs = std::filesystem;

namespace {

// exit codes: 1 config/validation, 2 did-not-engage, 3 diverged
constexpr int kExitConfig = 1;
constexpr int kExitDidNotEngage = 2;
constexpr int kExitDiverged = 3;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw uam::SimError("cannot open for writing: " + path.string());
  out << content;
}

int cmd_run(const std::string& case_path, const std::string& out_dir, bool csv, bool svg) {
  const uam::SimCase c = uam::load_sim_case(case_path);
  std::vector<uam::TelemetryRow> rows;
  const uam::SimReport report = uam::run_case_collect(c, rows);

  std::cout << uam::report_json(report);

  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  write_file(dir / (c.name + "_report.json"), uam::report_json(report));
  if (csv) {
    std::string text = uam::telemetry_csv_header();
    for (const auto& r : rows) uam::append_telemetry_csv(text, r);
    write_file(dir / (c.name + "_telemetry.csv"), text);
  }
  if (svg) {
    uam::emit_timeseries_plot(c, rows, report, (dir / (c.name + "_timeseries.svg")).string());
  }
  return 0;
}

int cmd_table(const std::string& cases_dir, const std::string& out_dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cases_dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw uam::InvalidConfig("no .json case files in " + cases_dir);

  std::vector<uam::SimCase> cases;
  for (const auto& f : files) cases.push_back(uam::load_sim_case(f.string()));

  const uam::TableResult table = uam::run_table(cases);
  std::cout << uam::format_table(table);

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "table.json", uam::table_json(table));
  }

  bool all_ok = true;
  for (const auto& e : table.entries) all_ok = all_ok && e.ok;
  for (const auto& chk : table.checks) all_ok = all_ok && chk.passed;
  return all_ok ? 0 : kExitConfig;
}

int cmd_envelope(const std::vector<double>& betas, double gt, int points,
                 const std::string& out_dir) {
  uam::MassGeometry mg;
  mg.m_B = gt / mg.g;  // envelope depends only on the total weight
  mg.m_E = 0.0;

  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  for (double beta_deg : betas) {
    const auto sweep = uam::envelope_sweep(uam::deg2rad(beta_deg), mg, points);
    char name[64];
    std::snprintf(name, sizeof(name), "envelope_beta%g.csv", beta_deg);
    write_file(dir / name, uam::envelope_csv(sweep));
  }
  uam::emit_envelope_plot(betas, mg, (dir / "envelope.svg").string(), points);
  std::cout << "wrote envelope CSVs and envelope.svg to " << dir.string() << "\n";
  return 0;
}

int cmd_validate(const std::string& case_path) {
  const uam::SimCase c = uam::load_sim_case(case_path);
  const uam::PoseConfig pose = uam::case_pose(c);
  const uam::MassGeometry mg = uam::derive_mass_geometry(c.params, pose);
  const uam::EquilibriumSolution eq = uam::equilibrium_forces(pose, mg);
  std::cout << "OK " << c.name << "\n"
            << "  alpha_d_deg: " << uam::rad2deg(pose.alpha_signed()) << "\n"
            << "  f_E_d_N:     " << eq.f_E << "\n"
            << "  T_sum_d_N:   " << eq.T_sum << "\n"
            << "  I_xx:        " << c.params.I_xx << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar aerial-manipulator pushing simulator"};
  app.require_subcommand(1);

  std::string case_path, out_dir, cases_dir;
  bool opt_csv = false, opt_svg = false;

  CLI::App* run = app.add_subcommand("run", "run one scenario");
  run->add_option("case", case_path, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "output directory (default .)");
  run->add_flag("--csv", opt_csv, "write telemetry CSV");
  run->add_flag("--svg", opt_svg, "write time-series SVG");

  CLI::App* table = app.add_subcommand("table", "run all scenarios in a directory");
  table->add_option("dir", cases_dir, "directory of scenario JSON files")->required();
  table->add_option("--out", out_dir, "write table.json here");

  std::vector<double> betas{10.0, 30.0, 60.0, 80.0, 90.0};
  double gt = 7.4529141490554;
  int points = 400;
  CLI::App* envelope = app.add_subcommand("envelope", "static force/thrust envelopes");
  envelope->add_option("--betas", betas, "surface inclinations [deg]")->delimiter(',');
  envelope->add_option("--gt", gt, "total weight G_t [N]");
  envelope->add_option("--points", points, "grid points per sweep");
  envelope->add_option("--out", out_dir, "output directory (default .)");

  CLI::App* validate = app.add_subcommand("validate", "check a scenario file");
  validate->add_option("case", case_path, "scenario JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(case_path, out_dir, opt_csv, opt_svg);
    if (table->parsed()) return cmd_table(cases_dir, out_dir);
    if (envelope->parsed()) return cmd_envelope(betas, gt, points, out_dir);
    if (validate->parsed()) return cmd_validate(case_path);
  } catch (const uam::DidNotEngage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDidNotEngage;
  } catch (const uam::Diverged& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const uam::SimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
