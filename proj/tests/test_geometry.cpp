#include "uam/geometry.hpp"

#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace uam {
namespace {

TEST(EeOrientation, IdentityAtZero) {
  EXPECT_DOUBLE_EQ(ee_orientation(0.0, 0.0), 0.0);
}

TEST(EeOrientation, ReferenceTriple) {
  EXPECT_NEAR(ee_orientation(deg2rad(-10.0), deg2rad(-50.0)), deg2rad(-60.0), 1e-12);
}

TEST(EeOrientation, AdditiveDefinition) {
  EXPECT_NEAR(ee_orientation(deg2rad(15.0), deg2rad(30.0)), deg2rad(45.0), 1e-12);
}

TEST(SolveJointAngle, ReferenceCase3) {
  const PoseConfig c = solve_joint_angle(deg2rad(-60.0), deg2rad(-10.0));
  EXPECT_NEAR(rad2deg(c.beta_signed()), -60.0, 1e-12);
  EXPECT_NEAR(rad2deg(c.phi_signed()), -10.0, 1e-12);
  EXPECT_NEAR(rad2deg(c.alpha_signed()), -50.0, 1e-12);
  EXPECT_EQ(c.sign_selector(), -1);
}

TEST(SolveJointAngle, ReferenceCase6) {
  const PoseConfig c = solve_joint_angle(deg2rad(-90.0), deg2rad(-20.0));
  EXPECT_NEAR(rad2deg(c.alpha_signed()), -70.0, 1e-12);
}

TEST(SolveJointAngle, ZeroRollUsesFullJointTravel) {
  const PoseConfig c = solve_joint_angle(deg2rad(30.0), 0.0);
  EXPECT_DOUBLE_EQ(c.phi_signed(), 0.0);
  EXPECT_NEAR(rad2deg(c.alpha_signed()), 30.0, 1e-12);
  EXPECT_EQ(c.sign_selector(), 1);
}

TEST(SolveJointAngle, RollAtOrBeyondSurfaceIsSingular) {
  EXPECT_THROW(solve_joint_angle(deg2rad(-60.0), deg2rad(-60.0)), SingularConfig);
  EXPECT_THROW(solve_joint_angle(deg2rad(-60.0), deg2rad(-65.0)), SingularConfig);
}

TEST(SolveJointAngle, FlatSurfaceRejectsNonzeroRoll) {
  EXPECT_THROW(solve_joint_angle(0.0, deg2rad(-5.0)), InvalidSurface);
}

TEST(SolveJointAngle, FlatSurfaceZeroRollIsTheCeilingConfig) {
  const PoseConfig c = solve_joint_angle(0.0, 0.0);
  EXPECT_EQ(c.beta_signed(), 0.0);
  EXPECT_EQ(c.alpha_signed(), 0.0);
  EXPECT_EQ(c.sign_selector(), 0);
}

TEST(SolveJointAngle, SignMismatchRejected) {
  EXPECT_THROW(solve_joint_angle(deg2rad(-60.0), deg2rad(10.0)), InvalidConfig);
}

TEST(PoseConfig, RejectsAdditiveViolation) {
  EXPECT_THROW(PoseConfig::make(deg2rad(60.0), deg2rad(10.0), deg2rad(49.0)), InvalidConfig);
}

TEST(PoseConfig, RejectsMixedSigns) {
  EXPECT_THROW(PoseConfig::make(deg2rad(-10.0), deg2rad(10.0), deg2rad(-20.0)), InvalidConfig);
}

TEST(PoseConfig, RejectsOutOfRange) {
  EXPECT_THROW(PoseConfig::make(deg2rad(100.0), deg2rad(50.0), deg2rad(50.0)), InvalidConfig);
}

TEST(SurfaceFrame, FlatSurfaceNormalPointsDown) {
  const SurfaceFrame f = surface_frame(SurfaceDef{0.0, Vec2(0.0, 0.0)});
  EXPECT_NEAR(f.normal[0], 0.0, 1e-15);
  EXPECT_NEAR(f.normal[1], -1.0, 1e-15);
}

TEST(SurfaceFrame, VerticalSurfaceNormal) {
  // beta = -90 deg: rotate (0,-1) by -90 deg about X
  const SurfaceFrame f = surface_frame(SurfaceDef{deg2rad(-90.0), Vec2(0.0, 0.0)});
  EXPECT_NEAR(f.normal[0], -1.0, 1e-12);
  EXPECT_NEAR(f.normal[1], 0.0, 1e-12);
}

TEST(SurfaceFrame, Orthonormal) {
  for (double beta_deg : {-90.0, -45.0, -10.0, 0.0, 30.0, 60.0, 90.0}) {
    const SurfaceFrame f = surface_frame(SurfaceDef{deg2rad(beta_deg), Vec2(1.0, 2.0)});
    EXPECT_NEAR(f.normal.norm(), 1.0, 1e-14);
    EXPECT_NEAR(f.tangent.norm(), 1.0, 1e-14);
    EXPECT_NEAR(f.normal.dot(f.tangent), 0.0, 1e-14);
  }
}

TEST(PoseConfigProperty, SolvedPoseSatisfiesOrientationConstraintExactly) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> beta_dist(1e-3, kPi / 2.0);
  std::uniform_real_distribution<double> frac(0.0, 0.999);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < 10000; ++i) {
    const double beta = (flip(rng) ? 1.0 : -1.0) * beta_dist(rng);
    const double phi = beta * frac(rng);
    const PoseConfig c = solve_joint_angle(beta, phi);
    EXPECT_NEAR(ee_orientation(c.phi_signed(), c.alpha_signed()), beta, 1e-12);
    EXPECT_NEAR(c.alpha_signed() + phi, beta, 1e-12);
    // magnitudes compose as well
    EXPECT_NEAR(c.beta0(), c.phi0() + c.alpha0(), 1e-12);
    // sign invariant: all fields share one sign or are zero
    const int ks = c.sign_selector();
    for (double a : {c.phi_signed(), c.alpha_signed()}) {
      if (a != 0.0) EXPECT_EQ((a > 0.0) - (a < 0.0), ks);
    }
  }
}

}  // namespace
}  // namespace uam
