#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>

#include "uam/errors.hpp"

namespace uam {

/// Planar vector in the inertial (Y, Z) plane: component [0] is Y, [1] is Z.
/// The out-of-plane X axis carries all rotations (positive anticlockwise).
using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// 2-D rotation by `angle` about the X axis, acting on (Y, Z) components.
inline Eigen::Matrix2d rot2(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

/// Direction of a body Z axis rolled by `angle`: R(angle) * (0, 1).
inline Vec2 zdir(double angle) { return Vec2(-std::sin(angle), std::cos(angle)); }

/// X-component of the 3-D cross product of two in-plane vectors.
inline double cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

/// X_hat x r restricted to the plane; gives the velocity direction of a point
/// at offset r under unit roll rate.
inline Vec2 perp(const Vec2& r) { return Vec2(-r[1], r[0]); }

/// Signed angle triple (beta, phi, alpha): work-surface inclination, vehicle
/// roll and joint position. Valid configurations satisfy beta = phi + alpha
/// with all three angles sharing one sign (zeros allowed).
class PoseConfig {
 public:
  /// Validates ranges, the additive constraint and the common-sign rule.
  static PoseConfig make(double beta_signed, double phi_signed, double alpha_signed);

  double beta_signed() const { return beta_; }
  double phi_signed() const { return phi_; }
  double alpha_signed() const { return alpha_; }

  double beta0() const { return std::abs(beta_); }
  double phi0() const { return std::abs(phi_); }
  double alpha0() const { return std::abs(alpha_); }

  /// Sign selector k_s: +1 for beta > 0, -1 for beta < 0, 0 for the flat
  /// (ceiling) special case beta = 0.
  int sign_selector() const { return (beta_ > 0.0) - (beta_ < 0.0); }

 private:
  PoseConfig(double beta, double phi, double alpha) : beta_(beta), phi_(phi), alpha_(alpha) {}
  double beta_, phi_, alpha_;
};

/// Flat rigid work surface: the (X, Y) plane rotated about X by beta_signed,
/// passing through anchor_point.
struct SurfaceDef {
  double beta_signed = 0.0;
  Vec2 anchor_point{0.0, 0.0};
};

struct SurfaceFrame {
  Vec2 normal;   // unit, points from the surface toward the robot's side
  Vec2 tangent;  // unit, along the surface line
};

/// Orientation of the end-effector frame: phi_E = phi + alpha.
double ee_orientation(double phi_signed, double alpha_signed);

/// Joint angle completing the pose for a given surface and desired roll:
/// alpha = k_s * (beta0 - phi0). Throws SingularConfig when |phi_desired|
/// >= |beta| and InvalidSurface for beta = 0 with a nonzero roll request.
PoseConfig solve_joint_angle(double beta_signed, double phi_desired);

/// Unit normal/tangent pair of the surface. The robot operates on the side
/// the normal points to; for beta = 0 the normal is (0, -1).
SurfaceFrame surface_frame(const SurfaceDef& surface);

}  // namespace uam
