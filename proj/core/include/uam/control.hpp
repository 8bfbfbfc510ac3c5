#pragma once

#include <array>
#include <utility>

#include "uam/estimation.hpp"

namespace uam {

struct Gains {
  // altitude PD (per-thrust), error convention desired-minus-actual
  double k_p = 300.0;  // [N/m]
  double k_d = 27.0;   // [N s/m]
  // attitude PD; high gains keep the roll error small during interaction
  double k_phi_p = 60.0;  // [N m/rad]
  double k_phi_d = 1.4;   // [N m s/rad]
  // force PID on the estimated interaction force magnitude
  double k_p_f = 1.0;
  double k_d_f = 0.02;
  double k_i_f = 4.0;
  // lateral position cascade (acceleration per error) for the approach phase
  double pos_kp = 50.0;  // [1/s^2]
  double pos_kd = 13.0;  // [1/s]
  double tilt_max = 0.35;    // |phi_d| clamp for the cascade [rad]
  double phi_d_slew = 0.7;   // roll setpoint slew after the mode switch [rad/s]
};

enum class ControlMode { Baseline, Interaction };

/// Reference bundle consumed by one controller step.
struct Setpoint {
  ControlMode mode = ControlMode::Baseline;
  Vec2 p_d{0.0, 0.0};
  Vec2 v_d{0.0, 0.0};
  Vec2 a_d{0.0, 0.0};
  double phi_d = 0.0;        // interaction roll phi^d [rad]
  double alpha_d = 0.0;      // held joint angle [rad]
  double f_E_d = 0.0;        // desired interaction force magnitude [N]
  double beta0 = 0.0;        // |beta| of the work surface [rad]
  double beta_signed = 0.0;  // signed beta, for the signed feedforwards
};

struct ControlOutput {
  double T_sum_cmd = 0.0;
  std::array<double, 3> M_cmd{0.0, 0.0, 0.0};  // (M_X, M_Y, M_Z)
  ControlMode mode = ControlMode::Baseline;
  double u_f = 0.0;      // force-loop PID output [N]
  bool switched = false; // true on the step that entered Interaction
};

inline constexpr double kTiltGuard = 0.05;  // minimum |cos(phi)|

/// Baseline altitude thrust: PD on altitude error plus vehicle-weight
/// feedforward, divided by cos(phi). Throws TiltSingular near 90 degrees.
double baseline_thrust(const PlanarState& state, const Setpoint& sp, const MassGeometry& mg,
                       const Gains& gains);

/// Roll moment: PD toward phi_d plus exact cancellation of the arm's
/// gravity torque at the current attitude.
double attitude_moment(const PlanarState& state, double phi_d, const Gains& gains,
                       const UamParams& params, double alpha_signed);

/// Disturbance wrenches at G_B in the inertial frame: D from arm gravity and
/// D_E from the desired interaction force, signed consistently with the
/// surface side (k_s).
std::pair<Wrench2D, Wrench2D> disturbance_vectors(const Setpoint& sp, const MassGeometry& mg);

/// Hybrid attitude/force controller with the baseline/interaction switch
/// driven by the contact detector. Owns the per-run mutable state (mode,
/// force integrator, slewed roll setpoint); one instance per run.
class Controller {
 public:
  Controller(const Gains& gains, const UamParams& params, double detect_threshold = 0.3);

  ControlOutput step(const PlanarState& state, const Setpoint& sp, const WrenchEstimate& est,
                     double dt);

  /// Interaction-mode total thrust: altitude terms plus the weight and
  /// contact-force feedforwards, plus the force PID correction. At zero
  /// errors this equals the closed-form equilibrium thrust. Advances the
  /// force integrator (anti-windup clamp |integral| <= 2 f_E_d / k_i_f).
  double interaction_thrust(const PlanarState& state, const Setpoint& sp,
                            const WrenchEstimate& est, double dt);

  ControlMode mode() const { return mode_; }
  double force_integral() const { return force_integral_; }
  void reset();

 private:
  Gains gains_;
  UamParams params_;
  ContactDetector detector_;
  ControlMode mode_ = ControlMode::Baseline;
  double force_integral_ = 0.0;
  double phi_d_slewed_ = 0.0;
  double last_u_f_ = 0.0;
};

}  // namespace uam
