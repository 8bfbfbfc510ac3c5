#pragma once

#include <array>

#include "uam/dynamics.hpp"

namespace uam {

/// Per-rotor thrusts and speeds after mixing and saturation. Rotors 1/3
/// (indices 0/2) sit on +/-Y_B, rotors 2/4 (indices 1/3) on +/-X_B, all at
/// rotor_arm distance, with alternating spin direction.
struct RotorCommand {
  std::array<double, 4> thrusts{};  // [N], clamped to [0, T_i_max]
  std::array<double, 4> speeds{};   // [rad/s], Omega_i = sqrt(T_i / k_af)
  double T_sum_cmd = 0.0;
  double M_X_cmd = 0.0;
  double T_sum_achieved = 0.0;
  double M_X_achieved = 0.0;
  bool saturated = false;
};

struct AchievedWrench {
  double T_sum = 0.0;  // [N]
  double tau_X = 0.0;  // [N m], about the inertial X axis
};

/// Plus-configuration mixing of (T_sum, M_X, M_Y, M_Z) into four thrusts,
/// clamped per rotor to [0, T_i_max]. Saturation is reported through the
/// achieved fields, never thrown, and no reallocation is attempted.
RotorCommand allocate(double T_sum_cmd, const std::array<double, 3>& M_cmd,
                      const UamParams& params);

/// Total thrust magnitude and X-axis torque produced by a rotor set. Roll
/// rotations leave the X torque component unchanged, so this is valid in the
/// inertial frame for any phi.
AchievedWrench achieved_wrench(const RotorCommand& cmd, double phi, const UamParams& params);

}  // namespace uam
