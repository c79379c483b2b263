#include "capsim/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace capsim {
namespace {

constexpr double kMu0 = 4.0e-7 * M_PI;

// Capsule shell and magnet dimensions (N52 cylinders, 3/8" x 3/16").
constexpr double kCapsuleLength = 26.0e-3;
constexpr double kCapsuleRadius = 6.0e-3;
constexpr double kMagnetRadius = 0.375 * 25.4e-3 / 2.0;
constexpr double kMagnetLength = 0.1875 * 25.4e-3;
constexpr double kMagnetClearance = 0.5e-3;
constexpr double kRemanence = 1.45;  // [T]

// Coil array: pole tips at the corners of the 75.2 mm square, axes inward.
constexpr double kCoilSpacing = 75.2e-3;
constexpr double kCoilAxialLength = 0.100;

}  // namespace

bool ActuationMode::valid() const {
  int nonzero = 0;
  for (double s : coil_scale) {
    if (s != -1.0 && s != 0.0 && s != 1.0) return false;
    if (s != 0.0) ++nonzero;
  }
  return kind == ActuationModeKind::Diagonal ? nonzero == 2 : nonzero == 4;
}

std::string ActuationMode::name() const {
  return kind == ActuationModeKind::Diagonal ? "diagonal" : "vertical";
}

ActuationMode diagonal_mode() {
  // Coils 0 (upper +x) and 2 (lower -x) share the 45-degree diagonal; the
  // polarity pair points the combined field along (+x, +z)/sqrt(2).
  return ActuationMode{ActuationModeKind::Diagonal, {-1.0, 0.0, 1.0, 0.0}};
}

ActuationMode vertical_mode() {
  // All four coils polarized so the horizontal components cancel and the
  // vertical components add at the workspace center.
  return ActuationMode{ActuationModeKind::Vertical, {-1.0, -1.0, 1.0, 1.0}};
}

ActuationMode mode_from_name(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "diagonal") return diagonal_mode();
  if (lower == "vertical") return vertical_mode();
  throw std::invalid_argument("unknown actuation mode '" + name +
                              "' (valid: diagonal, vertical)");
}

double default_core_gain() { return 3.0; }

Scene default_scene(double core_gain) {
  Scene scene;

  const double tip_distance = kCoilSpacing * M_SQRT1_2;
  const double center_distance = tip_distance + 0.5 * kCoilAxialLength;
  const double c45 = M_SQRT1_2;

  // Coils 0..3 at 45, 135, 225, 315 degrees in the x-z plane.
  const Vec3 directions[4] = {
      Vec3(c45, 0.0, c45),
      Vec3(-c45, 0.0, c45),
      Vec3(-c45, 0.0, -c45),
      Vec3(c45, 0.0, -c45),
  };
  for (int k = 0; k < 4; ++k) {
    CoilGeometry coil;
    coil.center_position = center_distance * directions[k];
    coil.axis_direction = -directions[k];
    coil.core_gain = core_gain;
    scene.coils[k] = coil;
  }

  const double magnet_volume =
      M_PI * kMagnetRadius * kMagnetRadius * kMagnetLength;
  const double moment = kRemanence * magnet_volume / kMu0;

  // Magnet centers measured from the contact end of the shell; the capsule
  // axis sits one shell radius above the rolling contact.
  const double m1_axial = kMagnetClearance + 0.5 * kMagnetLength;
  const double m2_axial = kCapsuleLength - kMagnetClearance - 0.5 * kMagnetLength;
  for (int k = 0; k < 2; ++k) {
    MagnetSpec magnet;
    magnet.body_frame_offset =
        Vec3(k == 0 ? m1_axial : m2_axial, 0.0, kCapsuleRadius);
    magnet.dipole_moment_magnitude = moment;
    magnet.moment_axis = Vec3::UnitX();
    scene.magnets[k] = magnet;
  }
  return scene;
}

Scene default_scene() { return default_scene(default_core_gain()); }

}  // namespace capsim
