#pragma once

#include <stdexcept>

#include "capsim/geometry.hpp"

namespace capsim {

/// Raised when a field evaluation point falls on (or within 1e-6 m of) a
/// current filament, where the Biot-Savart integrand is singular.
class SingularEvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Magnetic field [T] of a single circular filament carrying `current`,
/// evaluated by fixed-order quadrature of the Biot-Savart integral around the
/// loop. The trapezoidal rule on the periodic integrand converges spectrally,
/// so 64 points reproduce the on-axis closed form to well below 1e-9 relative.
Vec3 loop_field(const Vec3& eval_point, const Vec3& loop_center,
                const Vec3& loop_axis, double loop_radius, double current);

/// Field [T] of one coil: the winding cross-section is discretized into a
/// 4 (radial) x 10 (axial) stack of filaments with the turns apportioned
/// uniformly, then summed and scaled by core_gain. Linear in current.
Vec3 coil_field(const Vec3& eval_point, const CoilGeometry& coil, double current);

/// Total field of all coils energized per `mode` at unit scalar drive current.
Vec3 scene_field(const Vec3& eval_point, const ActuationMode& mode,
                 const std::array<CoilGeometry, 4>& coils);

/// Number of quadrature points per filament loop and the filament grid shape.
inline constexpr int kLoopQuadraturePoints = 64;
inline constexpr int kRadialFilaments = 4;
inline constexpr int kAxialFilaments = 10;

}  // namespace capsim
