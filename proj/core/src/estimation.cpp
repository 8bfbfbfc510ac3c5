#include "uam/estimation.hpp"

namespace uam {

WrenchObserver::WrenchObserver(const UamParams& params, ObserverParams op)
    : params_(params), op_(op) {}

void WrenchObserver::reset() {
  force_est_.setZero();
  tau_est_ = 0.0;
  prev_omega_ = 0.0;
  have_prev_omega_ = false;
  prev_f_e_ = 0.0;
  have_prev_f_ = false;
  rate_est_ = 0.0;
  last_ = {};
}

WrenchEstimate WrenchObserver::step(const ImuSample& imu, const ControlInput& u_applied,
                                    double phi, double alpha_signed, double dt) {
  const auto& mg = params_.mass_geometry;

  // Vehicle-only momentum residual: everything the model does not explain
  // (contact plus the held arm's reaction) appears as the external wrench.
  const Vec2 raw_force =
      mg.m_B * imu.accel - u_applied.T_sum * zdir(phi) + Vec2(0.0, mg.m_B * mg.g);

  double domega = 0.0;
  if (have_prev_omega_) domega = (imu.omega - prev_omega_) / dt;
  prev_omega_ = imu.omega;
  have_prev_omega_ = true;
  const double raw_tau = params_.I_xx * domega - u_applied.M_X;

  force_est_ += op_.k_obs * dt * (raw_force - force_est_);
  tau_est_ += op_.k_obs * dt * (raw_tau - tau_est_);

  WrenchEstimate est;
  est.total_ext = Wrench2D{force_est_, tau_est_};

  // deduct the arm-gravity disturbance at the current attitude
  Wrench2D d;
  d.f = Vec2(0.0, -mg.m_E * mg.g);
  d.tau_x = arm_gravity_torque(phi, alpha_signed, params_);
  est.interaction = est.total_ext - d;

  const double phi_E = phi + alpha_signed;
  est.f_E_est = est.interaction.f.dot(-zdir(phi_E));

  double raw_rate = 0.0;
  if (have_prev_f_) raw_rate = (est.f_E_est - prev_f_e_) / dt;
  prev_f_e_ = est.f_E_est;
  have_prev_f_ = true;
  rate_est_ += op_.rate_lpf * dt * (raw_rate - rate_est_);
  est.f_E_est_rate = rate_est_;

  last_ = est;
  return est;
}

ContactDetector::ContactDetector(double threshold) : threshold_(threshold) {
  if (!(threshold > 0.0)) throw InvalidConfig("ContactDetector: threshold must be positive");
}

bool ContactDetector::update(double f_E_est) {
  // release at half the engage threshold
  engaged_ = engaged_ ? (f_E_est >= 0.5 * threshold_) : (f_E_est >= threshold_);
  return engaged_;
}

}  // namespace uam
