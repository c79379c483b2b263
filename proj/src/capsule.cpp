#include "capsim/capsule.hpp"

#include <cmath>

namespace capsim {

CapsuleParams default_capsule_params() {
  CapsuleParams p;
  const double radius = 6.0e-3;
  const double length = 26.0e-3;
  const double transverse_cm =
      p.mass * (3.0 * radius * radius + length * length) / 12.0;
  p.inertia_contact = transverse_cm + p.mass * p.lever_arm * p.lever_arm;

  const Scene scene = default_scene();
  p.magnet_offsets = {scene.magnets[0].body_frame_offset,
                      scene.magnets[1].body_frame_offset};
  return p;
}

}  // namespace capsim
