#include "uam/geometry.hpp"

#include <string>

namespace uam {

namespace {

constexpr double kHalfPi = kPi / 2.0;
constexpr double kRangeSlack = 1e-9;       // tolerate degree->radian rounding
constexpr double kAdditiveTol = 1e-12;     // beta = phi + alpha, 1-ulp scale

bool in_half_range(double a) { return std::abs(a) <= kHalfPi + kRangeSlack; }

// zero is compatible with either sign
bool signs_consistent(double beta, double phi, double alpha) {
  int s = 0;
  for (double a : {beta, phi, alpha}) {
    const int sa = (a > 0.0) - (a < 0.0);
    if (sa == 0) continue;
    if (s == 0) s = sa;
    else if (s != sa) return false;
  }
  return true;
}

}  // namespace

PoseConfig PoseConfig::make(double beta_signed, double phi_signed, double alpha_signed) {
  if (!in_half_range(beta_signed) || !in_half_range(phi_signed) || !in_half_range(alpha_signed)) {
    throw InvalidConfig("PoseConfig: angles must lie in [-pi/2, pi/2]");
  }
  if (std::abs(beta_signed - (phi_signed + alpha_signed)) > kAdditiveTol) {
    throw InvalidConfig("PoseConfig: beta = phi + alpha violated");
  }
  if (!signs_consistent(beta_signed, phi_signed, alpha_signed)) {
    throw InvalidConfig("PoseConfig: angles must share one sign");
  }
  return PoseConfig(beta_signed, phi_signed, alpha_signed);
}

double ee_orientation(double phi_signed, double alpha_signed) {
  return phi_signed + alpha_signed;
}

PoseConfig solve_joint_angle(double beta_signed, double phi_desired) {
  if (beta_signed == 0.0) {
    if (phi_desired != 0.0) {
      throw InvalidSurface("solve_joint_angle: beta = 0 admits only phi = 0");
    }
    // flat-surface special case: push straight up with alpha = 0
    return PoseConfig::make(0.0, 0.0, 0.0);
  }
  const int ks = (beta_signed > 0.0) ? 1 : -1;
  const int sphi = (phi_desired > 0.0) - (phi_desired < 0.0);
  if (sphi != 0 && sphi != ks) {
    throw InvalidConfig("solve_joint_angle: phi_desired must share beta's sign");
  }
  const double beta0 = std::abs(beta_signed);
  const double phi0 = std::abs(phi_desired);
  if (phi0 >= beta0) {
    throw SingularConfig("solve_joint_angle: |phi_desired| >= |beta| leaves no joint travel");
  }
  const double alpha = ks * (beta0 - phi0);
  return PoseConfig::make(beta_signed, ks * phi0, alpha);
}

SurfaceFrame surface_frame(const SurfaceDef& surface) {
  // Rotate the flat-surface frame (normal down toward the robot, tangent
  // along +Y) by the signed inclination.
  const Eigen::Matrix2d r = rot2(surface.beta_signed);
  return SurfaceFrame{r * Vec2(0.0, -1.0), r * Vec2(1.0, 0.0)};
}

}  // namespace uam
