#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

namespace capsim {

using Vec3 = Eigen::Vector3d;

/// One electromagnet of the four-coil array, modeled as an air-core winding
/// scaled by core_gain. The soft-iron core with its conical pole piece is not
/// simulated; instead the winding is placed so that its front face sits at the
/// pole-tip location and core_gain scales the resulting field.
struct CoilGeometry {
  Vec3 center_position = Vec3::Zero();  // winding centroid [m]
  Vec3 axis_direction = Vec3::UnitX();  // unit vector, toward the workspace
  int turns = 1500;
  double bobbin_inner_radius = 0.010;  // [m]
  double bobbin_outer_radius = 0.019;  // [m]
  double axial_length = 0.100;         // [m]
  double core_gain = 1.0;              // dimensionless field multiplier

  bool valid() const {
    return std::abs(axis_direction.norm() - 1.0) <= 1e-9 &&
           bobbin_inner_radius < bobbin_outer_radius && turns > 0 &&
           core_gain > 0.0 && axial_length > 0.0;
  }
};

/// Permanent magnet rigidly mounted in the capsule, reduced to a point dipole.
struct MagnetSpec {
  Vec3 body_frame_offset = Vec3::Zero();  // position relative to the rolling contact [m]
  double dipole_moment_magnitude = 0.0;   // [A·m²]
  Vec3 moment_axis = Vec3::UnitX();       // unit vector in the body frame

  bool valid() const {
    return body_frame_offset.y() == 0.0 && dipole_moment_magnitude > 0.0 &&
           std::abs(moment_axis.norm() - 1.0) <= 1e-9;
  }
};

enum class ActuationModeKind { Diagonal, Vertical };

/// Which coils are energized for a unit scalar drive current, and with what
/// polarity. Diagonal drives one opposing pair to make a 45-degree field for
/// pitch torque; Vertical drives all four for a near-vertical field.
struct ActuationMode {
  ActuationModeKind kind = ActuationModeKind::Diagonal;
  std::array<double, 4> coil_scale{};  // entries in {-1, 0, +1}

  bool valid() const;
  std::string name() const;
};

ActuationMode diagonal_mode();
ActuationMode vertical_mode();

/// Parse "diagonal" / "vertical" (case-insensitive). Throws std::invalid_argument.
ActuationMode mode_from_name(const std::string& name);

/// The full magnetostatic scene: four coils around the workspace plus the two
/// capsule magnets.
struct Scene {
  std::array<CoilGeometry, 4> coils;
  std::array<MagnetSpec, 2> magnets;
};

/// Default desk-scale scene. Coils live in the x-z pitch plane at the corners
/// of the 75.2 mm square, axes pointing at the workspace center; magnets use
/// the N52 cylinder moment with the capsule-frame offsets of the two-magnet
/// layout.
Scene default_scene(double core_gain);
Scene default_scene();

/// Default core gain used throughout the toolkit (configurable per scenario).
double default_core_gain();

}  // namespace capsim
