#include "uam/sim_case.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uam/dynamics.hpp"

namespace uam {

namespace {

using nlohmann::json;

double get_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}

void parse_params(const json& j, SimCase& c) {
  auto& p = c.params;
  auto& mg = p.mass_geometry;
  mg.m_B = get_or(j, "m_B_kg", mg.m_B);
  mg.m_E = get_or(j, "m_E_kg", mg.m_E);
  mg.g = get_or(j, "g_mps2", mg.g);
  p.arm_length = get_or(j, "arm_length_m", p.arm_length);
  p.joint_offset = get_or(j, "joint_offset_m", p.joint_offset);
  p.arm_cog_fraction = get_or(j, "arm_cog_fraction", p.arm_cog_fraction);
  p.rotor_arm = get_or(j, "rotor_arm_m", p.rotor_arm);
  p.k_af = get_or(j, "k_af", p.k_af);
  p.k_am = get_or(j, "k_am", p.k_am);
  p.T_i_max = get_or(j, "T_i_max_N", p.T_i_max);
  if (j.contains("I_xx")) {
    p.I_xx = j.at("I_xx").get<double>();
  } else if (j.contains("I_body_xx")) {
    // composite inertia is recomputed per scenario at the commanded joint angle
    const PoseConfig pose = solve_joint_angle(deg2rad(c.beta_deg), deg2rad(c.phi_d_deg));
    p.I_xx = composite_roll_inertia(j.at("I_body_xx").get<double>(), p, pose.alpha_signed());
  }
}

void parse_gains(const json& j, Gains& g) {
  g.k_p = get_or(j, "k_p", g.k_p);
  g.k_d = get_or(j, "k_d", g.k_d);
  g.k_phi_p = get_or(j, "k_phi_p", g.k_phi_p);
  g.k_phi_d = get_or(j, "k_phi_d", g.k_phi_d);
  g.k_p_f = get_or(j, "k_p_f", g.k_p_f);
  g.k_d_f = get_or(j, "k_d_f", g.k_d_f);
  g.k_i_f = get_or(j, "k_i_f", g.k_i_f);
  g.pos_kp = get_or(j, "pos_kp", g.pos_kp);
  g.pos_kd = get_or(j, "pos_kd", g.pos_kd);
  if (j.contains("tilt_max_deg")) g.tilt_max = deg2rad(j.at("tilt_max_deg").get<double>());
  if (j.contains("phi_d_slew_degps")) {
    g.phi_d_slew = deg2rad(j.at("phi_d_slew_degps").get<double>());
  }
}

}  // namespace

SimCase parse_sim_case(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("case file is not valid JSON: ") + e.what());
  }

  SimCase c;
  try {
    c.name = j.contains("name") ? j.at("name").get<std::string>() : "unnamed";
    c.beta_deg = j.at("beta_deg").get<double>();
    c.phi_d_deg = j.at("phi_d_deg").get<double>();
    c.duration_s = get_or(j, "duration_s", c.duration_s);
    c.dt_s = get_or(j, "dt_s", c.dt_s);

    if (j.contains("params")) parse_params(j.at("params"), c);
    if (j.contains("contact")) {
      const json& jc = j.at("contact");
      c.contact.k_n = get_or(jc, "k_n", c.contact.k_n);
      c.contact.c_n = get_or(jc, "c_n", c.contact.c_n);
      c.contact.mu = get_or(jc, "mu", c.contact.mu);
      c.contact.v_stick = get_or(jc, "v_stick", c.contact.v_stick);
    }
    if (j.contains("gains")) parse_gains(j.at("gains"), c.gains);
    if (j.contains("observer")) {
      const json& jo = j.at("observer");
      c.observer.k_obs = get_or(jo, "k_obs", c.observer.k_obs);
      c.observer.rate_lpf = get_or(jo, "rate_lpf", c.observer.rate_lpf);
      c.detect_threshold = get_or(jo, "detect_threshold_N", c.detect_threshold);
    }
    if (j.contains("noise")) {
      const json& jn = j.at("noise");
      c.noise.accel_std = get_or(jn, "accel_std", 0.0);
      c.noise.gyro_std = get_or(jn, "gyro_std", 0.0);
      c.noise.seed = static_cast<std::uint32_t>(get_or(jn, "seed", 1.0));
    }
    if (j.contains("surface")) {
      const json& js = j.at("surface");
      c.surface_anchor = Vec2(get_or(js, "anchor_y_m", 0.0), get_or(js, "anchor_z_m", 1.0));
    }
    if (j.contains("approach")) {
      const json& ja = j.at("approach");
      c.approach.standoff = get_or(ja, "standoff_m", c.approach.standoff);
      c.approach.overshoot = get_or(ja, "overshoot_m", c.approach.overshoot);
      c.approach.speed = get_or(ja, "speed_mps", c.approach.speed);
    }
    if (j.contains("start_pose")) {
      const json& js = j.at("start_pose");
      c.start_pose.p = Vec2(get_or(js, "y_m", 0.0), get_or(js, "z_m", 0.0));
      c.start_pose.phi = deg2rad(get_or(js, "phi_deg", 0.0));
      c.start_pose_explicit = true;
    }
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("case file schema error: ") + e.what());
  }

  validate(c);
  return c;
}

SimCase load_sim_case(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open case file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sim_case(ss.str());
}

void validate(const SimCase& c) {
  if (std::abs(c.beta_deg) > 90.0) {
    throw InvalidSurface("beta_deg must lie in [-90, 90]");
  }
  if (c.beta_deg == 0.0) {
    throw InvalidSurface("beta_deg = 0 (flat overhead surface) is not an equilibrium scenario");
  }
  if (c.phi_d_deg == 0.0) {
    throw InvalidConfig("phi_d_deg = 0 exerts no force; a pushing task needs a nonzero roll");
  }
  // shares the remaining checks (sign, |phi| < |beta|) with the pose solver
  (void)case_pose(c);

  if (!(c.duration_s > 0.0)) throw InvalidConfig("duration_s must be positive");
  if (!(c.dt_s > 0.0) || c.dt_s > c.duration_s) throw InvalidConfig("dt_s out of range");

  const auto& mg = c.params.mass_geometry;
  if (!(mg.m_B > 0.0) || mg.m_E < 0.0 || !(mg.g > 0.0)) {
    throw InvalidConfig("masses/gravity out of range");
  }
  if (!(c.params.I_xx > 0.0) || !(c.params.arm_length > 0.0) ||
      !(c.params.joint_offset > 0.0) || !(c.params.rotor_arm > 0.0) ||
      !(c.params.k_af > 0.0) || !(c.params.k_am > 0.0) || !(c.params.T_i_max > 0.0)) {
    throw InvalidConfig("vehicle geometry/propeller parameters must be positive");
  }
  if (!(c.params.arm_cog_fraction > 0.0) || c.params.arm_cog_fraction > 1.0) {
    throw InvalidConfig("arm_cog_fraction must lie in (0, 1]");
  }
  if (!(c.contact.k_n > 0.0) || c.contact.c_n < 0.0 || c.contact.mu < 0.0 ||
      !(c.contact.v_stick > 0.0)) {
    throw InvalidConfig("contact parameters out of range");
  }
  if (!(c.detect_threshold > 0.0)) throw InvalidConfig("detect_threshold_N must be positive");
  if (!(c.approach.speed > 0.0) || !(c.approach.standoff > 0.0)) {
    throw InvalidConfig("approach plan out of range");
  }
}

PoseConfig case_pose(const SimCase& c) {
  return solve_joint_angle(deg2rad(c.beta_deg), deg2rad(c.phi_d_deg));
}

SurfaceDef case_surface(const SimCase& c) {
  return SurfaceDef{deg2rad(c.beta_deg), c.surface_anchor};
}

}  // namespace uam
