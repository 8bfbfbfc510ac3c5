#pragma once

#include <cstdint>
#include <string>

#include "uam/control.hpp"

namespace uam {

/// Straight-line approach toward a contact point `overshoot` beyond the
/// surface along the desired e.e. axis, referenced at level roll.
struct ApproachPlan {
  double standoff = 0.40;   // tip start distance from the surface [m]
  double overshoot = 0.02;  // tip reference crossing beyond the surface [m]
  double speed = 0.20;      // reference speed [m/s]
};

/// Optional zero-mean Gaussian measurement noise; off for golden files.
struct NoiseParams {
  double accel_std = 0.0;  // [m/s^2]
  double gyro_std = 0.0;   // [rad/s]
  std::uint32_t seed = 1;
};

/// One scenario: surface, desired roll, plant/controller parameters.
struct SimCase {
  std::string name;
  double beta_deg = 0.0;
  double phi_d_deg = 0.0;
  double duration_s = 20.0;
  double dt_s = 1e-3;

  UamParams params;  // I_xx resolved to the composite value at load time
  ContactParams contact;
  Gains gains;
  ObserverParams observer;
  double detect_threshold = 0.3;  // [N]
  NoiseParams noise;

  Vec2 surface_anchor{0.0, 1.0};
  ApproachPlan approach;

  PlanarState start_pose;            // derived from the approach plan unless explicit
  bool start_pose_explicit = false;
};

/// Parse a scenario from a JSON document (degrees in files, radians
/// internally). Unspecified fields keep their defaults. Validates before
/// returning; resolves I_xx from "I_body_xx" when given.
SimCase load_sim_case(const std::string& path);
SimCase parse_sim_case(const std::string& json_text);

/// Scenario invariants: nonzero signed beta in [-90, 90] deg, 0 < |phi_d| <
/// |beta| with matching sign (a pushing task needs a nonzero roll),
/// positive timing/plant/contact parameters.
void validate(const SimCase& c);

/// The commanded pose triple of the case.
PoseConfig case_pose(const SimCase& c);

SurfaceDef case_surface(const SimCase& c);

}  // namespace uam
