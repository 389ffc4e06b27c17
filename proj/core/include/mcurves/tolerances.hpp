#pragma once

// Default numeric tolerances. Every operation that classifies or rejects
// takes an explicit tolerance parameter; these are the library-wide defaults.

namespace mcurves::tolerance {

inline constexpr double causal = 1e-10;           // causal classification, scaled by max(1, |v|^2)
inline constexpr double membership = 1e-8;        // unit pseudo-sphere membership
inline constexpr double frame = 1e-8;             // frame orthonormality checks
inline constexpr double unit_speed = 1e-6;        // |g(a',a') - 1| bound for unit-speed curves
inline constexpr double curvature_floor = 1e-6;   // below this, curvature counts as vanishing
inline constexpr double degenerate_pair = 1e-9;   // relative ||kappa| - |tau|| floor
inline constexpr double helix_ratio = 1e-6;       // torsion/curvature constancy
inline constexpr double residual_closed_form = 1e-6;
inline constexpr double residual_finite_diff = 1e-4;
inline constexpr double fd_step = 1e-4;           // default central-difference step
// Frame fields carry ~1e-12 cancellation noise at large |s|; second-derivative
// stencils amplify it by 1/h^2, so frame-level differencing uses a wider step.
inline constexpr double frame_fd_step = 1e-3;
inline constexpr double spray_drift = 1e-5;       // sphere-membership drift along trajectories

}  // namespace mcurves::tolerance
