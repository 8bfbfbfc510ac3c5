#pragma once

#include <cmath>

#include "uam/force_model.hpp"

namespace uam {

/// Vehicle CoG state in the inertial (Y, Z) plane. phi is unrestricted here;
/// range checks apply only to equilibrium poses.
struct PlanarState {
  Vec2 p{0.0, 0.0};  // position [m]
  Vec2 v{0.0, 0.0};  // velocity [m/s]
  double phi = 0.0;    // roll about X [rad]
  double omega = 0.0;  // roll rate [rad/s]
};

struct StateDerivative {
  Vec2 dp{0.0, 0.0};
  Vec2 dv{0.0, 0.0};
  double dphi = 0.0;
  double domega = 0.0;
};

/// Physical parameters of the vehicle + held-arm composite.
struct UamParams {
  MassGeometry mass_geometry{};
  double I_xx = 0.01;             // composite roll inertia about G_B [kg m^2]
  double arm_length = 0.30;       // joint to e.e. tip [m]
  double joint_offset = 0.05;     // joint position along Z_B from G_B [m]
  double arm_cog_fraction = 0.5;  // arm CoG location along the link, (0, 1]
  double rotor_arm = 0.17;        // propeller center distance [m]
  double k_af = 1.0e-5;           // thrust coefficient [N/(rad/s)^2]
  double k_am = 2.0e-7;           // drag-moment coefficient [N m/(rad/s)^2]
  double T_i_max = 5.0;           // per-propeller thrust saturation [N]

  double m_t() const { return mass_geometry.m_B + mass_geometry.m_E; }
};

/// Compliant point-contact parameters at the e.e. tip.
struct ContactParams {
  double k_n = 5000.0;   // normal penalty stiffness [N/m]
  double c_n = 50.0;     // normal damping [N s/m]
  double mu = 0.8;       // Coulomb friction coefficient
  double v_stick = 0.01; // tangential velocity scale of the stick regime [m/s]
};

/// Planar wrench: force in the (Y, Z) plane plus torque about X.
struct Wrench2D {
  Vec2 f{0.0, 0.0};
  double tau_x = 0.0;

  Wrench2D operator+(const Wrench2D& o) const { return {f + o.f, tau_x + o.tau_x}; }
  Wrench2D operator-(const Wrench2D& o) const { return {f - o.f, tau_x - o.tau_x}; }
};

/// Total thrust and roll moment commanded to (or achieved by) the rotors.
struct ControlInput {
  double T_sum = 0.0;  // [N]
  double M_X = 0.0;    // [N m]
};

/// Body-to-tip offset in inertial coordinates for roll phi and joint angle
/// alpha: joint_offset along Z_B plus arm_length along Z_E.
inline Vec2 tip_offset(double phi, double alpha, const UamParams& params) {
  return params.joint_offset * zdir(phi) + params.arm_length * zdir(phi + alpha);
}

/// Arm CoG offset from G_B in inertial coordinates.
inline Vec2 arm_cog_offset(double phi, double alpha, const UamParams& params) {
  return params.joint_offset * zdir(phi) +
         params.arm_cog_fraction * params.arm_length * zdir(phi + alpha);
}

/// Torque about G_B exerted by the arm's weight at the current attitude.
inline double arm_gravity_torque(double phi, double alpha, const UamParams& params) {
  const auto& mg = params.mass_geometry;
  return -mg.m_E * mg.g * arm_cog_offset(phi, alpha, params)[0];
}

Vec2 ee_tip_position(const PlanarState& state, double alpha_signed, const UamParams& params);
Vec2 ee_tip_velocity(const PlanarState& state, double alpha_signed, const UamParams& params);

/// Roll inertia of the composite about G_B: vehicle inertia plus the arm as a
/// slender rod (own-axis term) carried at its CoG offset (parallel axis).
double composite_roll_inertia(double vehicle_I_xx, const UamParams& params, double alpha);

/// MassGeometry for a held pose with the moment arms evaluated from the
/// vehicle geometry: l_E = joint_offset sin(alpha0),
/// l_GE = joint_offset sin(phi0) + arm_cog_fraction arm_length sin(beta0).
MassGeometry derive_mass_geometry(const UamParams& params, const PoseConfig& config);

/// Damped-penalty normal force plus regularized Coulomb friction at the tip;
/// zero wrench on the free side, never adhesive.
Wrench2D contact_wrench(const PlanarState& state, double alpha_signed,
                        const SurfaceDef& surface, const UamParams& params,
                        const ContactParams& cp);

/// Composite-rigid-body equations of motion about the vehicle CoG. The held
/// arm contributes its mass to m_t and its weight torque to the roll channel.
StateDerivative dynamics_rhs(const PlanarState& state, const ControlInput& u,
                             const Wrench2D& ext, const UamParams& params,
                             double alpha_signed);

namespace detail {
inline PlanarState advance(const PlanarState& s, const StateDerivative& d, double h) {
  PlanarState r;
  r.p = s.p + h * d.dp;
  r.v = s.v + h * d.dv;
  r.phi = s.phi + h * d.dphi;
  r.omega = s.omega + h * d.domega;
  return r;
}
}  // namespace detail

/// Classical RK4 step with the control input held constant over the step.
/// `ext_at` supplies the state-dependent external wrench (e.g. contact) and
/// is re-evaluated at every stage. Throws NonFinite if the result leaves the
/// finite range.
template <class ExtFn>
PlanarState step_rk4(const PlanarState& state, const ControlInput& u, ExtFn&& ext_at,
                     const UamParams& params, double alpha_signed, double dt) {
  if (!(dt > 0.0)) throw InvalidConfig("step_rk4: dt must be positive");
  const auto f = [&](const PlanarState& s) {
    return dynamics_rhs(s, u, ext_at(s), params, alpha_signed);
  };
  const StateDerivative k1 = f(state);
  const StateDerivative k2 = f(detail::advance(state, k1, dt / 2.0));
  const StateDerivative k3 = f(detail::advance(state, k2, dt / 2.0));
  const StateDerivative k4 = f(detail::advance(state, k3, dt));

  PlanarState out;
  out.p = state.p + dt / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
  out.v = state.v + dt / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
  out.phi = state.phi + dt / 6.0 * (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi);
  out.omega = state.omega + dt / 6.0 * (k1.domega + 2.0 * k2.domega + 2.0 * k3.domega + k4.domega);

  if (!out.p.allFinite() || !out.v.allFinite() || !std::isfinite(out.phi) ||
      !std::isfinite(out.omega)) {
    throw NonFinite("step_rk4: state left the finite range");
  }
  return out;
}

/// Zero external wrench, for free-flight integration.
inline Wrench2D no_external_wrench(const PlanarState&) { return {}; }

}  // namespace uam
