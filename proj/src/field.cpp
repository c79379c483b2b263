#include "capsim/field.hpp"

#include <cmath>

namespace capsim {
namespace {

constexpr double kMu0 = 4.0e-7 * M_PI;
constexpr double kFilamentClearance = 1e-6;  // [m]

// Distance from a point to the circular filament (not the disc).
double distance_to_filament(const Vec3& p, const Vec3& center, const Vec3& axis,
                            double radius) {
  const Vec3 rel = p - center;
  const double z = rel.dot(axis);
  const Vec3 radial = rel - z * axis;
  const double rho = radial.norm();
  return std::hypot(rho - radius, z);
}

}  // namespace

Vec3 loop_field(const Vec3& eval_point, const Vec3& loop_center,
                const Vec3& loop_axis, double loop_radius, double current) {
  if (distance_to_filament(eval_point, loop_center, loop_axis, loop_radius) <
      kFilamentClearance) {
    throw SingularEvaluationError(
        "loop_field: evaluation point within 1e-6 m of the filament");
  }
  if (current == 0.0) {
    return Vec3::Zero();
  }

  // Orthonormal frame spanning the loop plane. e1 is chosen deterministically
  // and, for axes lying in the x-z plane, along +y so the quadrature nodes pair
  // symmetrically about that plane.
  Vec3 e1 = loop_axis.cross(Vec3::UnitY());
  if (e1.squaredNorm() < 1e-12) {
    e1 = loop_axis.cross(Vec3::UnitX());
  }
  e1.normalize();
  const Vec3 e2 = loop_axis.cross(e1);

  // Midpoint rule over the loop parameter; dl = R dphi * tangent.
  Vec3 b = Vec3::Zero();
  const double dphi = 2.0 * M_PI / kLoopQuadraturePoints;
  for (int k = 0; k < kLoopQuadraturePoints; ++k) {
    const double phi = (k + 0.5) * dphi;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const Vec3 pos = loop_center + loop_radius * (c * e1 + s * e2);
    const Vec3 tangent = -s * e1 + c * e2;
    const Vec3 r = eval_point - pos;
    const double r2 = r.squaredNorm();
    b += tangent.cross(r) / (r2 * std::sqrt(r2));
  }
  return (kMu0 * current * loop_radius * dphi / (4.0 * M_PI)) * b;
}

Vec3 coil_field(const Vec3& eval_point, const CoilGeometry& coil, double current) {
  if (!coil.valid()) {
    throw std::invalid_argument("coil_field: invalid coil geometry");
  }
  if (current == 0.0) {
    return Vec3::Zero();
  }

  const double turns_per_filament =
      static_cast<double>(coil.turns) / (kRadialFilaments * kAxialFilaments);
  const double dr =
      (coil.bobbin_outer_radius - coil.bobbin_inner_radius) / kRadialFilaments;
  const double dz = coil.axial_length / kAxialFilaments;

  Vec3 b = Vec3::Zero();
  for (int i = 0; i < kRadialFilaments; ++i) {
    const double radius = coil.bobbin_inner_radius + (i + 0.5) * dr;
    for (int j = 0; j < kAxialFilaments; ++j) {
      const double z = -0.5 * coil.axial_length + (j + 0.5) * dz;
      const Vec3 center = coil.center_position + z * coil.axis_direction;
      b += loop_field(eval_point, center, coil.axis_direction, radius,
                      turns_per_filament * current);
    }
  }
  return coil.core_gain * b;
}

Vec3 scene_field(const Vec3& eval_point, const ActuationMode& mode,
                 const std::array<CoilGeometry, 4>& coils) {
  Vec3 b = Vec3::Zero();
  for (int k = 0; k < 4; ++k) {
    if (mode.coil_scale[k] != 0.0) {
      b += coil_field(eval_point, coils[k], mode.coil_scale[k]);
    }
  }
  return b;
}

}  // namespace capsim
