#pragma once

#include <string>
#include <vector>

#include "uam/geometry.hpp"

namespace uam {

/// Masses, gravity and the two moment arms of the planar free-body balance.
/// The moment arms depend on the held pose; derive_mass_geometry() in
/// dynamics.hpp fills them from the vehicle geometry.
struct MassGeometry {
  double m_B = 0.70;  // aerial vehicle mass [kg]
  double m_E = 0.06;  // manipulator mass [kg]
  double g = 9.81;    // gravity [m/s^2]
  double l_E = 0.0;   // moment arm of the contact force about G_B [m]
  double l_GE = 0.0;  // moment arm of the arm weight about G_B [m]

  /// Total weight G_t = (m_B + m_E) * g, the scale of all equilibrium forces.
  double total_weight() const { return (m_B + m_E) * g; }
};

/// Static-equilibrium solution for a valid pose against an inclined surface.
struct EquilibriumSolution {
  double f_E = 0.0;        // contact force magnitude along -Z_E [N]
  double f_E_Z = 0.0;      // its component along inertial -Z: f_E * cos(beta0) [N]
  double T_sum = 0.0;      // total thrust magnitude at equilibrium [N]
  double tau_sum_X = 0.0;  // propeller torque about X from the torque balance [N m]
};

/// Raw substitution residuals of the three balance equations.
struct BalanceResidual {
  double r_Z = 0.0;  // [N]
  double r_Y = 0.0;  // [N]
  double r_X = 0.0;  // [N m]
};

struct EnvelopePoint {
  double phi0 = 0.0;  // [rad]
  double f_E = 0.0;
  double f_E_Z = 0.0;
  double T_sum = 0.0;
};

/// Below this joint-angle magnitude the configuration is treated as singular
/// rather than producing a near-infinite setpoint.
inline constexpr double kSingularAlphaTol = 1e-6;  // [rad]

/// Relative offset of the sweep's right endpoint from the open boundary beta0.
inline constexpr double kSweepEndOffset = 1e-3;

/// Closed-form equilibrium forces:
///   f_E   = G_t sin(phi0) / sin(alpha0)
///   f_E_Z = f_E cos(beta0)
///   T_sum = G_t sin(beta0) / sin(alpha0)
///   tau_sum_X = f_E l_E - m_E g l_GE
/// Throws SingularConfig at alpha0 < kSingularAlphaTol, InvalidConfig when
/// phi0 >= beta0 or beta0 = 0.
EquilibriumSolution equilibrium_forces(const PoseConfig& config, const MassGeometry& mg);

/// Substitutes a candidate solution back into the force/torque balances.
BalanceResidual residual(const PoseConfig& config, const MassGeometry& mg,
                         const EquilibriumSolution& sol);

/// Force profile over phi0 in [0, beta0), sampled on a uniform grid whose
/// last point sits at beta0 * (1 - kSweepEndOffset).
std::vector<EnvelopePoint> envelope_sweep(double beta0, const MassGeometry& mg, int n_points);

/// Angular distance beta0 - phi0 to the singular configuration.
double singularity_margin(const PoseConfig& config);

/// CSV serialization with header phi0_deg,f_E_N,f_E_Z_N,T_sum_N.
std::string envelope_csv(const std::vector<EnvelopePoint>& sweep);

}  // namespace uam
