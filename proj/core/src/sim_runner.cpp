#include "uam/sim_runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "uam/svg_plot.hpp"

namespace uam {

namespace {

constexpr double kSteadyWindowFraction = 0.20;
constexpr double kSettledStdFraction = 0.02;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct WindowStats {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
};

WindowStats window_stats(const std::vector<double>& values) {
  WindowStats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double acc = 0.0;
  for (double v : values) acc += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(acc / static_cast<double>(values.size()));
  return s;
}

}  // namespace

std::string telemetry_csv_header() {
  return "t,y,z,phi_deg,vy,vz,omega,T_sum_cmd,T_sum_ach,M_X,T1,T2,T3,T4,f_E_est,f_E_true,"
         "mode,u_f\n";
}

void append_telemetry_csv(std::string& out, const TelemetryRow& r) {
  char line[512];
  std::snprintf(line, sizeof(line),
                "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,"
                "%.10g,%.10g,%.10g,%.10g,%d,%.10g\n",
                r.t, r.state.p[0], r.state.p[1], rad2deg(r.state.phi), r.state.v[0],
                r.state.v[1], r.state.omega, r.T_sum_cmd, r.T_sum_ach, r.M_X,
                r.rotor_thrusts[0], r.rotor_thrusts[1], r.rotor_thrusts[2], r.rotor_thrusts[3],
                r.f_E_est, r.f_E_true, r.mode, r.u_f);
  out += line;
}

SimReport run_case(const SimCase& c, const StepCallback& on_step) {
  validate(c);

  const PoseConfig pose = case_pose(c);
  const double alpha_d = pose.alpha_signed();
  const double phi_d = pose.phi_signed();
  const UamParams& params = c.params;
  const MassGeometry mg_pose = derive_mass_geometry(params, pose);
  const EquilibriumSolution eq = equilibrium_forces(pose, mg_pose);

  const SurfaceDef surface = case_surface(c);
  const SurfaceFrame frame = surface_frame(surface);
  const Vec2 push_dir = -frame.normal;  // desired e.e. Z axis, toward the surface

  // Approach reference built for the tip at level roll: at the ramp end the
  // tip reference sits `overshoot` beyond the surface, which guarantees a
  // detectable press for every admissible pose.
  const Vec2 offset_level = tip_offset(0.0, alpha_d, params);
  const Vec2 body_target = surface.anchor_point + c.approach.overshoot * push_dir - offset_level;

  PlanarState state = c.start_pose;
  if (!c.start_pose_explicit) {
    state = PlanarState{};
    state.p = surface.anchor_point - c.approach.standoff * push_dir - offset_level;
  }

  const Vec2 ramp_from = state.p;
  const double ramp_dist = (body_target - ramp_from).norm();
  const double ramp_time = ramp_dist / c.approach.speed;
  const Vec2 ramp_dir = ramp_dist > 0.0 ? Vec2((body_target - ramp_from) / ramp_dist)
                                        : Vec2(0.0, 0.0);

  Controller ctrl(c.gains, params, c.detect_threshold);
  WrenchObserver observer(params, c.observer);

  std::mt19937 rng(c.noise.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const bool with_noise = c.noise.accel_std > 0.0 || c.noise.gyro_std > 0.0;

  const long n_steps = std::lround(c.duration_s / c.dt_s);
  const double dt = c.dt_s;
  const double window_start = c.duration_s * (1.0 - kSteadyWindowFraction);

  const auto ext_at = [&](const PlanarState& s) {
    return contact_wrench(s, alpha_d, surface, params, c.contact);
  };

  ControlInput applied{};          // zero-order-hold input over each step
  RotorCommand rotor{};
  Vec2 hold_point = body_target;   // altitude reference after the mode switch
  bool engaged_once = false;
  double t_engaged = -1.0;

  SimReport report;
  report.case_name = c.name;
  report.beta_deg = c.beta_deg;
  report.phi_d_deg = c.phi_d_deg;
  report.alpha_d_deg = rad2deg(alpha_d);
  report.f_E_d = eq.f_E;
  report.T_sum_d = eq.T_sum;

  std::vector<double> win_f, win_t;

  const auto emit = [&](double t, const Wrench2D& cw, const ControlOutput& out) {
    TelemetryRow row;
    row.t = t;
    row.state = state;
    row.T_sum_cmd = out.T_sum_cmd;
    row.T_sum_ach = rotor.T_sum_achieved;
    row.M_X = rotor.M_X_achieved;
    row.rotor_thrusts = rotor.thrusts;
    row.contact = cw;
    row.f_E_est = observer.estimate().f_E_est;
    row.f_E_true = cw.f.dot(-zdir(state.phi + alpha_d));
    row.mode = out.mode == ControlMode::Interaction ? 1 : 0;
    row.u_f = out.u_f;
    if (on_step) on_step(row);
    if (t >= window_start - 1e-12) {
      win_f.push_back(row.f_E_est);
      win_t.push_back(row.T_sum_ach);
    }
  };

  ControlOutput out_prev{};
  try {
    for (long k = 0; k < n_steps; ++k) {
      const double t = static_cast<double>(k) * dt;

      Setpoint sp;
      sp.mode = ctrl.mode();
      sp.phi_d = phi_d;
      sp.alpha_d = alpha_d;
      sp.f_E_d = eq.f_E;
      sp.beta0 = pose.beta0();
      sp.beta_signed = pose.beta_signed();
      if (ctrl.mode() == ControlMode::Interaction) {
        sp.p_d = hold_point;
      } else if (engaged_once) {
        sp.p_d = body_target;  // after a dropout, keep pressing
      } else if (t < ramp_time) {
        sp.p_d = ramp_from + (t / ramp_time) * (body_target - ramp_from);
        sp.v_d = c.approach.speed * ramp_dir;
      } else {
        sp.p_d = body_target;
      }

      // the acceleration produced over the previous interval, measured now
      const Wrench2D cw = ext_at(state);
      const StateDerivative sd = dynamics_rhs(state, applied, cw, params, alpha_d);
      ImuSample imu{sd.dv, state.omega};
      if (with_noise) {
        imu.accel += c.noise.accel_std * Vec2(gauss(rng), gauss(rng));
        imu.omega += c.noise.gyro_std * gauss(rng);
      }
      const WrenchEstimate est = observer.step(imu, applied, state.phi, alpha_d, dt);

      const ControlOutput out = ctrl.step(state, sp, est, dt);
      if (out.switched) {
        hold_point = state.p;
        engaged_once = true;
        if (t_engaged < 0.0) t_engaged = t;
      }
      rotor = allocate(out.T_sum_cmd, out.M_cmd, params);
      applied = ControlInput{rotor.T_sum_achieved, rotor.M_X_achieved};
      if (rotor.saturated) ++report.saturated_steps;

      emit(t, cw, out);
      out_prev = out;

      state = step_rk4(state, applied, ext_at, params, alpha_d, dt);
    }
  } catch (const NonFinite& e) {
    throw Diverged(std::string("case '") + c.name + "' diverged: " + e.what());
  }

  emit(static_cast<double>(n_steps) * dt, ext_at(state), out_prev);

  if (!engaged_once) {
    throw DidNotEngage("case '" + c.name + "' never detected contact");
  }

  const WindowStats f_stats = window_stats(win_f);
  const WindowStats t_stats = window_stats(win_t);
  report.f_E_ss = f_stats.mean;
  report.T_sum_ss = t_stats.mean;
  report.f_E_err_pct = 100.0 * (f_stats.mean - eq.f_E) / eq.f_E;
  report.T_sum_err_pct = 100.0 * (t_stats.mean - eq.T_sum) / eq.T_sum;
  report.settled = f_stats.count > 0 && f_stats.mean > 0.0 &&
                   f_stats.stddev < kSettledStdFraction * f_stats.mean;
  report.t_engaged_s = t_engaged;
  return report;
}

SimReport run_case_collect(const SimCase& c, std::vector<TelemetryRow>& rows) {
  rows.clear();
  rows.reserve(static_cast<std::size_t>(c.duration_s / c.dt_s) + 2);
  return run_case(c, [&rows](const TelemetryRow& r) { rows.push_back(r); });
}

TableResult run_table(const std::vector<SimCase>& cases) {
  if (cases.empty()) throw InvalidConfig("run_table: need at least one case");

  TableResult table;
  for (const SimCase& c : cases) {
    TableEntry entry;
    entry.case_name = c.name;
    try {
      entry.report = run_case(c);
      entry.ok = true;
    } catch (const SimError& e) {
      entry.error = e.what();
    }
    table.entries.push_back(std::move(entry));
  }

  // cross-case ordering: the closed-form model predicts a harder push for a
  // smaller |beta| at equal |phi_d| and for a larger |phi_d| at equal |beta|
  const auto& es = table.entries;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (!es[i].ok || !es[j].ok) continue;
      const double bi = std::abs(cases[i].beta_deg), bj = std::abs(cases[j].beta_deg);
      const double pi_ = std::abs(cases[i].phi_d_deg), pj = std::abs(cases[j].phi_d_deg);
      char desc[160];
      if (std::abs(pi_ - pj) < 1e-9 && std::abs(bi - bj) > 1e-9) {
        const std::size_t lo = bi < bj ? i : j, hi = bi < bj ? j : i;
        std::snprintf(desc, sizeof(desc), "vertical: f_E(%s) > f_E(%s) at |phi_d|=%g deg",
                      es[lo].case_name.c_str(), es[hi].case_name.c_str(), pi_);
        table.checks.push_back({desc, es[lo].report.f_E_ss > es[hi].report.f_E_ss});
      } else if (std::abs(bi - bj) < 1e-9 && std::abs(pi_ - pj) > 1e-9) {
        const std::size_t lo = pi_ < pj ? i : j, hi = pi_ < pj ? j : i;
        std::snprintf(desc, sizeof(desc), "horizontal: f_E(%s) > f_E(%s) at |beta|=%g deg",
                      es[hi].case_name.c_str(), es[lo].case_name.c_str(), bi);
        table.checks.push_back({desc, es[hi].report.f_E_ss > es[lo].report.f_E_ss});
      }
    }
  }
  return table;
}

std::string format_table(const TableResult& table) {
  std::string out;
  char line[320];
  std::snprintf(line, sizeof(line), "%-10s %9s %9s %9s %9s %9s %8s %9s %9s %8s %8s %5s\n",
                "case", "beta", "phi_d", "alpha_d", "f_E_d", "f_E_ss", "err%", "T_sum_d",
                "T_sum_ss", "err%", "settled", "sat");
  out += line;
  for (const TableEntry& e : table.entries) {
    if (!e.ok) {
      std::snprintf(line, sizeof(line), "%-10s FAILED: %s\n", e.case_name.c_str(),
                    e.error.c_str());
      out += line;
      continue;
    }
    const SimReport& r = e.report;
    std::snprintf(line, sizeof(line),
                  "%-10s %9.4g %9.4g %9.4f %9.4f %9.4f %8.2f %9.4f %9.4f %8.2f %8s %5ld\n",
                  e.case_name.c_str(), r.beta_deg, r.phi_d_deg, r.alpha_d_deg, r.f_E_d,
                  r.f_E_ss, r.f_E_err_pct, r.T_sum_d, r.T_sum_ss, r.T_sum_err_pct,
                  r.settled ? "yes" : "no", r.saturated_steps);
    out += line;
  }
  for (const ComparisonCheck& chk : table.checks) {
    out += chk.passed ? "[pass] " : "[FAIL] ";
    out += chk.description;
    out += '\n';
  }
  return out;
}

std::string report_json(const SimReport& r) {
  nlohmann::ordered_json j;
  j["case"] = r.case_name;
  j["beta_deg"] = r.beta_deg;
  j["phi_d_deg"] = r.phi_d_deg;
  j["alpha_d_deg"] = r.alpha_d_deg;
  j["f_E_d_N"] = r.f_E_d;
  j["T_sum_d_N"] = r.T_sum_d;
  j["f_E_ss_N"] = r.f_E_ss;
  j["T_sum_ss_N"] = r.T_sum_ss;
  j["f_E_err_pct"] = r.f_E_err_pct;
  j["T_sum_err_pct"] = r.T_sum_err_pct;
  j["settled"] = r.settled;
  j["saturated_steps"] = r.saturated_steps;
  j["t_engaged_s"] = r.t_engaged_s;
  return j.dump(2) + "\n";
}

std::string table_json(const TableResult& table) {
  nlohmann::ordered_json j;
  j["cases"] = nlohmann::ordered_json::array();
  for (const TableEntry& e : table.entries) {
    nlohmann::ordered_json je;
    je["case"] = e.case_name;
    je["ok"] = e.ok;
    if (e.ok) {
      je["report"] = nlohmann::ordered_json::parse(report_json(e.report));
    } else {
      je["error"] = e.error;
    }
    j["cases"].push_back(je);
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const ComparisonCheck& c : table.checks) {
    j["checks"].push_back({{"description", c.description}, {"passed", c.passed}});
  }
  return j.dump(2) + "\n";
}

void emit_envelope_plot(const std::vector<double>& betas_deg, const MassGeometry& mg,
                        const std::string& path, int n_points) {
  const double gt = mg.total_weight();
  PlotPanel pf{"contact force f_E", "phi0 [deg]", "f_E [N]", {}, true, 0.0, 6.0 * gt};
  PlotPanel pz{"vertical component f_E_Z", "phi0 [deg]", "f_E_Z [N]", {}, true, 0.0, 6.0 * gt};
  PlotPanel pt{"total thrust T_sum", "phi0 [deg]", "T_sum [N]", {}, true, 0.0, 6.0 * gt};

  std::size_t idx = 0;
  for (double beta_deg : betas_deg) {
    const auto sweep = envelope_sweep(deg2rad(beta_deg), mg, n_points);
    char label[48];
    std::snprintf(label, sizeof(label), "beta0 = %g deg", beta_deg);
    PlotSeries sf{label, {}, {}, plot_color(idx), false};
    PlotSeries sz = sf, st = sf;
    for (const EnvelopePoint& p : sweep) {
      const double x = rad2deg(p.phi0);
      sf.x.push_back(x);
      sf.y.push_back(p.f_E);
      sz.x.push_back(x);
      sz.y.push_back(p.f_E_Z);
      st.x.push_back(x);
      st.y.push_back(p.T_sum);
    }
    pf.series.push_back(std::move(sf));
    pz.series.push_back(std::move(sz));
    pt.series.push_back(std::move(st));
    ++idx;
  }
  write_svg_panels(path, "static interaction force envelope (G_t = " + fmt(gt) + " N)",
                   {pf, pz, pt});
}

void emit_timeseries_plot(const SimCase& c, const std::vector<TelemetryRow>& rows,
                          const SimReport& report, const std::string& path) {
  if (rows.empty()) throw InvalidConfig("emit_timeseries_plot: no telemetry");

  const std::size_t stride = std::max<std::size_t>(1, rows.size() / 2000);
  std::vector<double> t, f_est, f_true, t_ach, phi;
  for (std::size_t i = 0; i < rows.size(); i += stride) {
    const TelemetryRow& r = rows[i];
    t.push_back(r.t);
    f_est.push_back(r.f_E_est);
    f_true.push_back(r.f_E_true);
    t_ach.push_back(r.T_sum_ach);
    phi.push_back(rad2deg(r.state.phi));
  }
  const std::vector<double> t_ends{rows.front().t, rows.back().t};

  PlotPanel pf{"interaction force", "t [s]", "f [N]", {}};
  pf.series.push_back({"f_E estimated", t, f_est, plot_color(0), false});
  pf.series.push_back({"f_E true", t, f_true, "#999999", false});
  pf.series.push_back(
      {"f_E desired", t_ends, {report.f_E_d, report.f_E_d}, plot_color(3), true});

  PlotPanel pt{"total thrust", "t [s]", "T_sum [N]", {}};
  pt.series.push_back({"T_sum achieved", t, t_ach, plot_color(0), false});
  pt.series.push_back(
      {"T_sum desired", t_ends, {report.T_sum_d, report.T_sum_d}, plot_color(3), true});

  PlotPanel pp{"roll angle", "t [s]", "phi [deg]", {}};
  pp.series.push_back({"phi", t, phi, plot_color(0), false});
  pp.series.push_back(
      {"phi desired", t_ends, {c.phi_d_deg, c.phi_d_deg}, plot_color(3), true});

  write_svg_panels(path, c.name + ": approach and sustained push", {pf, pt, pp});
}

}  // namespace uam
