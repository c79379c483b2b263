#pragma once

#include <array>

#include "capsim/geometry.hpp"

namespace capsim {

/// Rigid-body and actuator parameters of the capsule pitching about its
/// rolling contact.
struct CapsuleParams {
  double mass = 7.42e-3;            // [kg]
  double inertia_contact = 0.0;     // I_p [kg·m²], about the contact point
  double lever_arm = 13.0e-3;       // L [m], contact to center of mass
  std::array<Vec3, 2> magnet_offsets{};  // r̄_k [m], body frame
  double driver_time_constant = 20.0e-3;  // τ_c [s]
  double viscous_damping = 4.0e-7;  // c [N·m·s/rad], simulation-only
  double gravity = 9.81;            // [m/s²]

  bool valid() const {
    return mass > 0.0 && inertia_contact > 0.0 && lever_arm > 0.0 &&
           driver_time_constant > 0.0 && viscous_damping >= 0.0 &&
           gravity > 0.0 &&
           inertia_contact >= mass * lever_arm * lever_arm - 1e-12;
  }
};

/// Defaults from the 26 mm x 12 mm shell: transverse inertia of a uniform
/// solid cylinder plus the parallel-axis term, magnet offsets matching
/// default_scene().
CapsuleParams default_capsule_params();

}  // namespace capsim
