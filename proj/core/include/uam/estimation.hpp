#pragma once

#include "uam/dynamics.hpp"

namespace uam {

/// Simulated IMU reading: inertial-frame acceleration of G_B and roll rate.
struct ImuSample {
  Vec2 accel{0.0, 0.0};  // [m/s^2]
  double omega = 0.0;    // [rad/s]
};

struct WrenchEstimate {
  Wrench2D total_ext;    // estimated external wrench at G_B, inertial frame
  Wrench2D interaction;  // total_ext minus the arm-gravity disturbance
  double f_E_est = 0.0;      // interaction force along -Z_E [N]
  double f_E_est_rate = 0.0; // filtered derivative [N/s]
};

struct ObserverParams {
  double k_obs = 20.0;      // first-order observer gain [1/s]
  double rate_lpf = 100.0;  // derivative filter pole [1/s]
};

/// Momentum-residual external wrench observer over the vehicle-only model:
/// the held arm is not part of the model, so its gravity shows up inside the
/// estimated external wrench and is deducted afterwards to isolate the
/// interaction wrench. Converges to a constant wrench with time constant
/// 1/k_obs. One instance per simulation run.
class WrenchObserver {
 public:
  explicit WrenchObserver(const UamParams& params, ObserverParams op = {});

  /// `u_applied` must be the post-saturation input the plant actually
  /// received while `imu` was measured.
  WrenchEstimate step(const ImuSample& imu, const ControlInput& u_applied, double phi,
                      double alpha_signed, double dt);

  void reset();
  const WrenchEstimate& estimate() const { return last_; }

 private:
  UamParams params_;
  ObserverParams op_;
  Vec2 force_est_{0.0, 0.0};
  double tau_est_ = 0.0;
  double prev_omega_ = 0.0;
  bool have_prev_omega_ = false;
  double prev_f_e_ = 0.0;
  bool have_prev_f_ = false;
  double rate_est_ = 0.0;
  WrenchEstimate last_{};
};

/// Threshold with 50% release hysteresis on the estimated interaction force;
/// drives the baseline -> interaction controller switch.
class ContactDetector {
 public:
  explicit ContactDetector(double threshold);

  bool update(double f_E_est);
  bool engaged() const { return engaged_; }
  void reset() { engaged_ = false; }

 private:
  double threshold_;
  bool engaged_ = false;
};

}  // namespace uam
