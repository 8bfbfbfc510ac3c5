#include "uam/force_model.hpp"

#include <cstdio>

namespace uam {

EquilibriumSolution equilibrium_forces(const PoseConfig& config, const MassGeometry& mg) {
  const double beta0 = config.beta0();
  const double phi0 = config.phi0();
  const double alpha0 = config.alpha0();

  if (beta0 == 0.0) {
    throw InvalidConfig("equilibrium_forces: beta0 = 0 is thrust-saturation limited, not "
                        "equilibrium determined");
  }
  if (phi0 >= beta0) {
    throw InvalidConfig("equilibrium_forces: requires phi0 < beta0");
  }
  if (alpha0 < kSingularAlphaTol) {
    throw SingularConfig("equilibrium_forces: alpha0 ~ 0 is a singularity point");
  }

  const double gt = mg.total_weight();
  const double sa = std::sin(alpha0);

  EquilibriumSolution sol;
  sol.f_E = gt * std::sin(phi0) / sa;
  sol.f_E_Z = sol.f_E * std::cos(beta0);
  sol.T_sum = gt * std::sin(beta0) / sa;
  sol.tau_sum_X = sol.f_E * mg.l_E - mg.m_E * mg.g * mg.l_GE;
  return sol;
}

BalanceResidual residual(const PoseConfig& config, const MassGeometry& mg,
                         const EquilibriumSolution& sol) {
  const double beta0 = config.beta0();
  const double phi0 = config.phi0();
  BalanceResidual r;
  r.r_Z = sol.T_sum * std::cos(phi0) - mg.m_E * mg.g - mg.m_B * mg.g - sol.f_E * std::cos(beta0);
  r.r_Y = sol.T_sum * std::sin(phi0) - sol.f_E * std::sin(beta0);
  r.r_X = sol.tau_sum_X + mg.m_E * mg.g * mg.l_GE - sol.f_E * mg.l_E;
  return r;
}

std::vector<EnvelopePoint> envelope_sweep(double beta0, const MassGeometry& mg, int n_points) {
  if (!(beta0 > 0.0) || beta0 > kPi / 2.0 + 1e-9) {
    throw InvalidSurface("envelope_sweep: beta0 must lie in (0, pi/2]");
  }
  if (n_points < 2) {
    throw InvalidConfig("envelope_sweep: need at least 2 grid points");
  }

  const double phi_end = beta0 * (1.0 - kSweepEndOffset);
  std::vector<EnvelopePoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double phi0 = phi_end * static_cast<double>(i) / static_cast<double>(n_points - 1);
    const PoseConfig cfg = PoseConfig::make(beta0, phi0, beta0 - phi0);
    const EquilibriumSolution sol = equilibrium_forces(cfg, mg);
    out.push_back({phi0, sol.f_E, sol.f_E_Z, sol.T_sum});
  }
  return out;
}

double singularity_margin(const PoseConfig& config) {
  return config.beta0() - config.phi0();
}

std::string envelope_csv(const std::vector<EnvelopePoint>& sweep) {
  std::string out = "phi0_deg,f_E_N,f_E_Z_N,T_sum_N\n";
  char line[160];
  for (const EnvelopePoint& p : sweep) {
    std::snprintf(line, sizeof(line), "%.10g,%.10g,%.10g,%.10g\n", rad2deg(p.phi0), p.f_E,
                  p.f_E_Z, p.T_sum);
    out += line;
  }
  return out;
}

}  // namespace uam
