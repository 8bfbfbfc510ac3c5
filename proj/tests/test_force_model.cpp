#include "uam/force_model.hpp"

#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "test_support.hpp"

namespace uam {
namespace {

using test::back_solved_gt;
using test::kReferenceRows;

MassGeometry gt_only(double gt) {
  MassGeometry mg;
  mg.m_B = gt / mg.g;
  mg.m_E = 0.0;
  return mg;
}

// Independent oracle: solve the two linear balance equations
//   T cos(phi0) - f cos(beta0) = G_t
//   T sin(phi0) - f sin(beta0) = 0
// for (T, f) with a dense 2x2 solve.
std::pair<double, double> linear_balance_oracle(double beta0, double phi0, double gt) {
  Eigen::Matrix2d a;
  a << std::cos(phi0), -std::cos(beta0), std::sin(phi0), -std::sin(beta0);
  const Eigen::Vector2d b(gt, 0.0);
  const Eigen::Vector2d x = a.fullPivLu().solve(b);
  return {x[0], x[1]};  // (T_sum, f_E)
}

TEST(EquilibriumForces, ReproducesAllTabulatedValuesFromOneBackSolvedWeight) {
  const double gt = back_solved_gt();
  const MassGeometry mg = gt_only(gt);
  for (const auto& row : kReferenceRows) {
    const PoseConfig pose =
        solve_joint_angle(deg2rad(-row.beta0_deg), deg2rad(-row.phi0_deg));
    const EquilibriumSolution sol = equilibrium_forces(pose, mg);
    EXPECT_NEAR(sol.f_E, row.f_E_d, 2e-3) << "beta0=" << row.beta0_deg;
    EXPECT_NEAR(sol.T_sum, row.T_sum_d, 2e-3) << "beta0=" << row.beta0_deg;
    EXPECT_NEAR(sol.f_E_Z, sol.f_E * std::cos(deg2rad(row.beta0_deg)), 1e-12);
  }
}

TEST(EquilibriumForces, ZeroRollIsPureHover) {
  const MassGeometry mg = gt_only(10.0);
  const PoseConfig pose = solve_joint_angle(deg2rad(40.0), 0.0);
  const EquilibriumSolution sol = equilibrium_forces(pose, mg);
  EXPECT_NEAR(sol.f_E, 0.0, 1e-15);
  EXPECT_NEAR(sol.T_sum, mg.total_weight(), 1e-12);
}

TEST(EquilibriumForces, MatchesLinearBalanceOracle) {
  const MassGeometry mg = gt_only(10.0);
  const PoseConfig pose = solve_joint_angle(deg2rad(45.0), deg2rad(22.5));
  const auto [t_oracle, f_oracle] =
      linear_balance_oracle(pose.beta0(), pose.phi0(), mg.total_weight());
  const EquilibriumSolution sol = equilibrium_forces(pose, mg);
  EXPECT_NEAR(sol.T_sum, t_oracle, 1e-9);
  EXPECT_NEAR(sol.f_E, f_oracle, 1e-9);
}

TEST(EquilibriumForces, OracleEquivalenceOverRandomConfigs) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> beta_dist(1e-2, kPi / 2.0);
  std::uniform_real_distribution<double> frac(0.0, 0.995);
  std::uniform_real_distribution<double> gt_dist(1.0, 50.0);
  for (int i = 0; i < 10000; ++i) {
    const double beta0 = beta_dist(rng);
    const double phi0 = beta0 * frac(rng);
    const double gt = gt_dist(rng);
    const MassGeometry mg = gt_only(gt);
    const PoseConfig pose = PoseConfig::make(beta0, phi0, beta0 - phi0);
    const EquilibriumSolution sol = equilibrium_forces(pose, mg);
    const auto [t_oracle, f_oracle] = linear_balance_oracle(beta0, phi0, gt);
    const double tol_t = std::max(1e-9, 1e-12 * std::abs(t_oracle));
    const double tol_f = std::max(1e-9, 1e-12 * std::abs(f_oracle));
    ASSERT_NEAR(sol.T_sum, t_oracle, tol_t);
    ASSERT_NEAR(sol.f_E, f_oracle, tol_f);
  }
}

TEST(EquilibriumForces, SingularAndInvalidConfigs) {
  const MassGeometry mg = gt_only(10.0);
  // alpha0 below the guard
  EXPECT_THROW(
      equilibrium_forces(PoseConfig::make(0.4, 0.4 - 1e-8, 1e-8), mg), SingularConfig);
  // phi0 >= beta0 cannot be built via solve_joint_angle, so construct directly
  EXPECT_THROW(equilibrium_forces(PoseConfig::make(0.0, 0.0, 0.0), mg), InvalidConfig);
}

TEST(Residual, EquilibriumOutputSubstitutesToZero) {
  MassGeometry mg = gt_only(back_solved_gt());
  mg.l_E = 0.04;
  mg.l_GE = 0.12;
  for (const auto& row : kReferenceRows) {
    const PoseConfig pose =
        solve_joint_angle(deg2rad(-row.beta0_deg), deg2rad(-row.phi0_deg));
    const EquilibriumSolution sol = equilibrium_forces(pose, mg);
    const BalanceResidual r = residual(pose, mg, sol);
    EXPECT_LT(std::abs(r.r_Z), 1e-9);
    EXPECT_LT(std::abs(r.r_Y), 1e-9);
    EXPECT_LT(std::abs(r.r_X), 1e-9);
  }
}

TEST(Residual, ForcePerturbationShowsUpWithTheBalanceCoefficients) {
  const MassGeometry mg = gt_only(10.0);
  const PoseConfig pose = solve_joint_angle(deg2rad(60.0), deg2rad(10.0));
  EquilibriumSolution sol = equilibrium_forces(pose, mg);
  sol.f_E += 1.0;  // keep T_sum; the residual must pick up the f_E coefficients
  const BalanceResidual r = residual(pose, mg, sol);
  EXPECT_NEAR(r.r_Z, -std::cos(deg2rad(60.0)), 1e-12);
  EXPECT_NEAR(r.r_Y, -std::sin(deg2rad(60.0)), 1e-12);
}

TEST(Residual, HoverTorqueChannelMatchesArmWeightTerm) {
  MassGeometry mg;
  mg.m_B = 0.7;
  mg.m_E = 0.06;
  mg.l_E = 0.05;
  mg.l_GE = 0.1;
  const PoseConfig pose = solve_joint_angle(deg2rad(40.0), 0.0);
  const EquilibriumSolution sol = equilibrium_forces(pose, mg);  // f_E = 0
  const BalanceResidual r = residual(pose, mg, sol);
  EXPECT_NEAR(r.r_Z, 0.0, 1e-12);
  EXPECT_NEAR(r.r_Y, 0.0, 1e-12);
  // tau_sum_X + m_E g l_GE - 0, with tau_sum_X = -m_E g l_GE
  EXPECT_NEAR(r.r_X, 0.0, 1e-12);
  EXPECT_NEAR(sol.tau_sum_X, -mg.m_E * mg.g * mg.l_GE, 1e-12);
}

TEST(EnvelopeSweep, GridEndpoints) {
  const auto sweep = envelope_sweep(deg2rad(30.0), gt_only(10.0), 2);
  ASSERT_EQ(sweep.size(), 2u);
  EXPECT_DOUBLE_EQ(sweep.front().phi0, 0.0);
  EXPECT_NEAR(rad2deg(sweep.back().phi0), 29.97, 1e-9);
}

TEST(EnvelopeSweep, BlowsUpNearTheSingularity) {
  const double gt = 10.0;
  const auto sweep = envelope_sweep(deg2rad(10.0), gt_only(gt), 1000);
  // |phi0 - 9.99 deg| minimal at the last point
  EXPECT_NEAR(rad2deg(sweep.back().phi0), 9.99, 1e-9);
  EXPECT_GT(sweep.back().f_E, 50.0 * gt);
  EXPECT_GT(sweep.back().T_sum, 50.0 * gt);
}

TEST(EnvelopeSweep, VerticalSurfaceThrustIsMonotone) {
  const auto sweep = envelope_sweep(deg2rad(90.0), gt_only(10.0), 200);
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    EXPECT_GT(sweep[i].T_sum, sweep[i - 1].T_sum);
    // T_sum = G_t / sin(alpha0) for the vertical surface
    const double alpha0 = deg2rad(90.0) - sweep[i].phi0;
    EXPECT_NEAR(sweep[i].T_sum, 10.0 / std::sin(alpha0), 1e-9);
  }
}

TEST(EnvelopeSweep, MonotoneForceAndThrustInRoll) {
  const auto sweep = envelope_sweep(deg2rad(45.0), gt_only(8.0), 500);
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    EXPECT_GT(sweep[i].f_E, sweep[i - 1].f_E);
    EXPECT_GT(sweep[i].T_sum, sweep[i - 1].T_sum);
  }
}

TEST(EnvelopeSweep, RejectsBadDomain) {
  EXPECT_THROW(envelope_sweep(0.0, gt_only(10.0), 10), InvalidSurface);
  EXPECT_THROW(envelope_sweep(deg2rad(100.0), gt_only(10.0), 10), InvalidSurface);
  EXPECT_THROW(envelope_sweep(deg2rad(30.0), gt_only(10.0), 1), InvalidConfig);
}

TEST(CrossSurfaceOrdering, SmallerBetaPushesHarderAtFixedRoll) {
  const MassGeometry mg = gt_only(10.0);
  const double phi0 = deg2rad(5.0);
  double prev = std::numeric_limits<double>::infinity();
  for (double beta_deg : {10.0, 30.0, 60.0, 80.0, 90.0}) {
    const PoseConfig pose = PoseConfig::make(deg2rad(beta_deg), phi0, deg2rad(beta_deg) - phi0);
    const double f = equilibrium_forces(pose, mg).f_E;
    EXPECT_LT(f, prev) << "beta0=" << beta_deg;
    prev = f;
  }
}

TEST(SingularityMargin, ReferenceValues) {
  EXPECT_NEAR(rad2deg(singularity_margin(solve_joint_angle(deg2rad(-30.0), deg2rad(-5.0)))),
              25.0, 1e-12);
  EXPECT_NEAR(rad2deg(singularity_margin(solve_joint_angle(deg2rad(-90.0), deg2rad(-15.0)))),
              75.0, 1e-12);
  const PoseConfig singular = PoseConfig::make(deg2rad(40.0), deg2rad(40.0), 0.0);
  EXPECT_NEAR(singularity_margin(singular), 0.0, 1e-15);
}

TEST(EnvelopeCsv, HeaderAndRowCount) {
  const auto sweep = envelope_sweep(deg2rad(30.0), gt_only(10.0), 5);
  const std::string csv = envelope_csv(sweep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "phi0_deg,f_E_N,f_E_Z_N,T_sum_N");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

}  // namespace
}  // namespace uam
