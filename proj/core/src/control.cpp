#include "uam/control.hpp"

#include <algorithm>
#include <cmath>

namespace uam {

namespace {

double cos_phi_guarded(double phi) {
  const double c = std::cos(phi);
  if (std::abs(c) < kTiltGuard) {
    throw TiltSingular("thrust control undefined near |phi| = 90 deg");
  }
  return c;
}

}  // namespace

double baseline_thrust(const PlanarState& state, const Setpoint& sp, const MassGeometry& mg,
                       const Gains& gains) {
  const double c = cos_phi_guarded(state.phi);
  const double e_z = sp.p_d[1] - state.p[1];
  const double de_z = sp.v_d[1] - state.v[1];
  return (gains.k_p * e_z + gains.k_d * de_z - mg.m_B * sp.a_d[1] + mg.m_B * mg.g) / c;
}

double attitude_moment(const PlanarState& state, double phi_d, const Gains& gains,
                       const UamParams& params, double alpha_signed) {
  return -gains.k_phi_p * (state.phi - phi_d) - gains.k_phi_d * state.omega -
         arm_gravity_torque(state.phi, alpha_signed, params);
}

std::pair<Wrench2D, Wrench2D> disturbance_vectors(const Setpoint& sp, const MassGeometry& mg) {
  const double ks = static_cast<double>((sp.beta_signed > 0.0) - (sp.beta_signed < 0.0));

  Wrench2D d;
  d.f = Vec2(0.0, -mg.m_E * mg.g);
  d.tau_x = ks * mg.m_E * mg.g * mg.l_GE;

  Wrench2D d_e;
  d_e.f = sp.f_E_d * Vec2(std::sin(sp.beta_signed), -std::cos(sp.beta_signed));
  d_e.tau_x = -ks * sp.f_E_d * mg.l_E;
  return {d, d_e};
}

Controller::Controller(const Gains& gains, const UamParams& params, double detect_threshold)
    : gains_(gains), params_(params), detector_(detect_threshold) {}

void Controller::reset() {
  detector_.reset();
  mode_ = ControlMode::Baseline;
  force_integral_ = 0.0;
  phi_d_slewed_ = 0.0;
  last_u_f_ = 0.0;
}

double Controller::interaction_thrust(const PlanarState& state, const Setpoint& sp,
                                      const WrenchEstimate& est, double dt) {
  const double c = cos_phi_guarded(state.phi);
  const auto& mg = params_.mass_geometry;

  const double e_z = sp.p_d[1] - state.p[1];
  const double de_z = sp.v_d[1] - state.v[1];
  const double t_ff = (gains_.k_p * e_z + gains_.k_d * de_z - mg.m_B * sp.a_d[1] +
                       params_.m_t() * mg.g + sp.f_E_d * std::cos(sp.beta0)) /
                      c;

  const double f_err = sp.f_E_d - est.f_E_est;
  force_integral_ += f_err * dt;
  if (gains_.k_i_f > 0.0) {
    const double cap = 2.0 * sp.f_E_d / gains_.k_i_f;
    force_integral_ = std::clamp(force_integral_, -cap, cap);
  }
  const double u_f = gains_.k_p_f * f_err + gains_.k_d_f * (-est.f_E_est_rate) +
                     gains_.k_i_f * force_integral_;
  last_u_f_ = u_f;
  return t_ff + u_f / c;
}

ControlOutput Controller::step(const PlanarState& state, const Setpoint& sp_in,
                               const WrenchEstimate& est, double dt) {
  const bool contact = detector_.update(est.f_E_est);

  ControlOutput out;
  if (mode_ == ControlMode::Baseline && contact) {
    mode_ = ControlMode::Interaction;
    force_integral_ = 0.0;
    phi_d_slewed_ = state.phi;  // slew from the current roll to phi_d
    out.switched = true;
  } else if (mode_ == ControlMode::Interaction && !contact) {
    mode_ = ControlMode::Baseline;
    force_integral_ = 0.0;
  }
  out.mode = mode_;

  Setpoint sp = sp_in;
  sp.mode = mode_;

  if (mode_ == ControlMode::Baseline) {
    // lateral position cascade: desired acceleration -> small roll command
    const double a_y = gains_.pos_kp * (sp.p_d[0] - state.p[0]) +
                       gains_.pos_kd * (sp.v_d[0] - state.v[0]) + sp.a_d[0];
    const double phi_cmd =
        std::clamp(-a_y / params_.mass_geometry.g, -gains_.tilt_max, gains_.tilt_max);
    out.T_sum_cmd = baseline_thrust(state, sp, params_.mass_geometry, gains_);
    out.M_cmd = {attitude_moment(state, phi_cmd, gains_, params_, sp.alpha_d), 0.0, 0.0};
    out.u_f = 0.0;
    last_u_f_ = 0.0;
  } else {
    const double step_max = gains_.phi_d_slew * dt;
    phi_d_slewed_ += std::clamp(sp.phi_d - phi_d_slewed_, -step_max, step_max);
    out.T_sum_cmd = interaction_thrust(state, sp, est, dt);
    out.M_cmd = {attitude_moment(state, phi_d_slewed_, gains_, params_, sp.alpha_d), 0.0, 0.0};
    out.u_f = last_u_f_;
  }
  return out;
}

}  // namespace uam
