#pragma once

#include <stdexcept>

namespace uam {

/// Base class for every error thrown by this library.
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pose is at (or numerically indistinguishable from) the alpha0 = 0
/// singularity where the required contact force diverges.
struct SingularConfig : SimError {
  using SimError::SimError;
};

/// Work-surface inclination outside the admissible range.
struct InvalidSurface : SimError {
  using SimError::SimError;
};

/// Pose or scenario parameters violate a model precondition.
struct InvalidConfig : SimError {
  using SimError::SimError;
};

/// |cos(phi)| too small for thrust-based altitude control.
struct TiltSingular : SimError {
  using SimError::SimError;
};

/// A state component left the finite range during integration.
struct NonFinite : SimError {
  using SimError::SimError;
};

/// Contact was never detected within the scenario duration.
struct DidNotEngage : SimError {
  using SimError::SimError;
};

/// Simulation state became non-finite.
struct Diverged : SimError {
  using SimError::SimError;
};

}  // namespace uam
