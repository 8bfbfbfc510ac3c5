#include "uam/dynamics.hpp"

#include <algorithm>

namespace uam {

Vec2 ee_tip_position(const PlanarState& state, double alpha_signed, const UamParams& params) {
  return state.p + tip_offset(state.phi, alpha_signed, params);
}

Vec2 ee_tip_velocity(const PlanarState& state, double alpha_signed, const UamParams& params) {
  return state.v + state.omega * perp(tip_offset(state.phi, alpha_signed, params));
}

double composite_roll_inertia(double vehicle_I_xx, const UamParams& params, double alpha) {
  const double m_E = params.mass_geometry.m_E;
  const double rod_own = m_E * params.arm_length * params.arm_length / 12.0;
  const double cog_r2 = arm_cog_offset(0.0, alpha, params).squaredNorm();
  return vehicle_I_xx + rod_own + m_E * cog_r2;
}

MassGeometry derive_mass_geometry(const UamParams& params, const PoseConfig& config) {
  MassGeometry mg = params.mass_geometry;
  mg.l_E = params.joint_offset * std::sin(config.alpha0());
  mg.l_GE = params.joint_offset * std::sin(config.phi0()) +
            params.arm_cog_fraction * params.arm_length * std::sin(config.beta0());
  return mg;
}

Wrench2D contact_wrench(const PlanarState& state, double alpha_signed,
                        const SurfaceDef& surface, const UamParams& params,
                        const ContactParams& cp) {
  const SurfaceFrame frame = surface_frame(surface);
  const Vec2 tip = ee_tip_position(state, alpha_signed, params);
  // signed distance along the normal; the free side is positive
  const double sep = (tip - surface.anchor_point).dot(frame.normal);
  if (sep >= 0.0) return {};

  const double penetration = -sep;
  const Vec2 v_tip = ee_tip_velocity(state, alpha_signed, params);
  // the damper acts only while approaching, so the contact never pulls
  const double approach_rate = std::max(0.0, -v_tip.dot(frame.normal));
  const double normal_force = std::max(0.0, cp.k_n * penetration + cp.c_n * approach_rate);

  const double v_t = v_tip.dot(frame.tangent);
  const double friction = -cp.mu * normal_force * std::clamp(v_t / cp.v_stick, -1.0, 1.0);

  Wrench2D w;
  w.f = normal_force * frame.normal + friction * frame.tangent;
  w.tau_x = cross2(tip - state.p, w.f);
  return w;
}

StateDerivative dynamics_rhs(const PlanarState& state, const ControlInput& u,
                             const Wrench2D& ext, const UamParams& params,
                             double alpha_signed) {
  const double m_t = params.m_t();
  const double g = params.mass_geometry.g;
  StateDerivative d;
  d.dp = state.v;
  d.dv = (u.T_sum * zdir(state.phi) + ext.f) / m_t + Vec2(0.0, -g);
  d.dphi = state.omega;
  d.domega = (u.M_X + ext.tau_x + arm_gravity_torque(state.phi, alpha_signed, params)) /
             params.I_xx;
  return d;
}

}  // namespace uam
