#include "uam/actuation.hpp"

#include <algorithm>
#include <cmath>

namespace uam {

RotorCommand allocate(double T_sum_cmd, const std::array<double, 3>& M_cmd,
                      const UamParams& params) {
  const double d = params.rotor_arm;
  const double kappa = params.k_am / params.k_af;  // drag torque per thrust
  const double mx = M_cmd[0], my = M_cmd[1], mz = M_cmd[2];

  RotorCommand rc;
  rc.T_sum_cmd = T_sum_cmd;
  rc.M_X_cmd = mx;

  const double base = std::max(0.0, T_sum_cmd) / 4.0;
  rc.saturated = T_sum_cmd < 0.0;

  // plus configuration: rotors 0/2 on +/-Y_B drive M_X, rotors 1/3 on +/-X_B
  // drive M_Y; alternating spin splits M_Z across the pairs
  const std::array<double, 4> request{
      base + mx / (2.0 * d) + mz / (4.0 * kappa),
      base - my / (2.0 * d) - mz / (4.0 * kappa),
      base - mx / (2.0 * d) + mz / (4.0 * kappa),
      base + my / (2.0 * d) - mz / (4.0 * kappa),
  };
  for (std::size_t i = 0; i < 4; ++i) {
    rc.thrusts[i] = std::clamp(request[i], 0.0, params.T_i_max);
    if (rc.thrusts[i] != request[i]) rc.saturated = true;
    rc.speeds[i] = std::sqrt(rc.thrusts[i] / params.k_af);
  }

  const AchievedWrench w = achieved_wrench(rc, 0.0, params);
  rc.T_sum_achieved = w.T_sum;
  rc.M_X_achieved = w.tau_X;
  return rc;
}

AchievedWrench achieved_wrench(const RotorCommand& cmd, double phi, const UamParams& params) {
  (void)phi;  // a roll rotation about X preserves the X torque component
  AchievedWrench w;
  for (double t : cmd.thrusts) w.T_sum += t;
  // thrust moments: only the +/-Y_B pair has an X-axis arm; the drag torques
  // lie along Z_B and contribute nothing about X
  w.tau_X = params.rotor_arm * (cmd.thrusts[0] - cmd.thrusts[2]);
  return w;
}

}  // namespace uam
