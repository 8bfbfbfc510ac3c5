#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uam/actuation.hpp"
#include "uam/sim_case.hpp"

namespace uam {

/// Steady-state outcome of one scenario, compared against the closed-form
/// predictions. Steady-state means are taken over the final 20% of the run.
struct SimReport {
  std::string case_name;
  double beta_deg = 0.0;
  double phi_d_deg = 0.0;
  double alpha_d_deg = 0.0;
  double f_E_d = 0.0;    // closed-form desired contact force [N]
  double T_sum_d = 0.0;  // closed-form equilibrium thrust [N]
  double f_E_ss = 0.0;   // mean estimated interaction force in the window [N]
  double T_sum_ss = 0.0; // mean achieved total thrust in the window [N]
  double f_E_err_pct = 0.0;
  double T_sum_err_pct = 0.0;
  bool settled = false;  // f_E_est std-dev < 2% of mean inside the window
  long saturated_steps = 0;
  double t_engaged_s = -1.0;  // first contact detection time
};

/// Per-step emission consumed by the CSV writer and plotting.
struct TelemetryRow {
  double t = 0.0;
  PlanarState state;
  double T_sum_cmd = 0.0;
  double T_sum_ach = 0.0;
  double M_X = 0.0;
  std::array<double, 4> rotor_thrusts{};
  Wrench2D contact;
  double f_E_est = 0.0;
  double f_E_true = 0.0;
  int mode = 0;  // 0 = baseline, 1 = interaction
  double u_f = 0.0;
};

using StepCallback = std::function<void(const TelemetryRow&)>;

/// Telemetry CSV column set; one row per control step plus the initial row.
std::string telemetry_csv_header();
void append_telemetry_csv(std::string& out, const TelemetryRow& row);

/// Runs approach -> contact -> interaction and reports the steady state.
/// Deterministic: identical case (and seed) gives byte-identical telemetry.
/// Throws DidNotEngage if contact is never detected, Diverged on a
/// non-finite state.
SimReport run_case(const SimCase& c, const StepCallback& on_step = nullptr);

/// Convenience wrapper capturing the full telemetry.
SimReport run_case_collect(const SimCase& c, std::vector<TelemetryRow>& rows);

struct TableEntry {
  std::string case_name;
  bool ok = false;
  std::string error;  // set when the case failed to run
  SimReport report;
};

struct ComparisonCheck {
  std::string description;
  bool passed = false;
};

/// Table-style multi-case summary plus the cross-case ordering checks:
/// at equal |phi_d| a smaller |beta| must push harder, at equal |beta| a
/// larger |phi_d| must push harder.
struct TableResult {
  std::vector<TableEntry> entries;
  std::vector<ComparisonCheck> checks;
};

TableResult run_table(const std::vector<SimCase>& cases);

std::string format_table(const TableResult& table);

std::string report_json(const SimReport& report);
std::string table_json(const TableResult& table);

/// Static force/thrust envelopes for several surface inclinations, one
/// series per beta, three stacked panels (f_E, f_E_Z, T_sum over phi0).
void emit_envelope_plot(const std::vector<double>& betas_deg, const MassGeometry& mg,
                        const std::string& path, int n_points = 400);

/// Time-series plot of one run: estimated/true force against the desired
/// value, achieved thrust, and roll angle.
void emit_timeseries_plot(const SimCase& c, const std::vector<TelemetryRow>& rows,
                          const SimReport& report, const std::string& path);

}  // namespace uam
