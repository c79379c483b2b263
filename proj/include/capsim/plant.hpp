#pragma once

#include <stdexcept>

#include "capsim/actuation_map.hpp"
#include "capsim/capsule.hpp"

namespace capsim {

/// True simulation state of the pitching capsule. gyro_bias rides along for
/// the sensor models; it does not feed back into the mechanics.
struct PlantState {
  double theta = 0.0;      // [rad], in [0, pi/2]
  double omega = 0.0;      // [rad/s]
  double current = 0.0;    // [A], actual coil current
  double gyro_bias = 0.0;  // [rad/s]
  double time = 0.0;       // [s]
};

struct PlantDerivatives {
  double dtheta = 0.0;   // [rad/s]
  double domega = 0.0;   // [rad/s²]
  double dcurrent = 0.0; // [A/s]
};

class IntegrationBlowupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gravity moment about the rolling contact: -m g L cos(theta).
double gravity_torque(const CapsuleParams& params, double theta);

/// Continuous-time dynamics. Magnetic torque is current * tau_FE(theta); a
/// null torque map means the coils are deenergized (free pendulum). Throws
/// std::domain_error if theta leaves the table grid.
PlantDerivatives dynamics_rhs(const PlantState& state, double u_cmd,
                              const CapsuleParams& params,
                              const TorqueMap* torque_map);

/// One classical RK4 step of the three continuous states, no contact
/// handling. Table queries at internal stage points are clamped to the grid.
PlantState rk4_advance(const PlantState& state, double u_cmd, double dt,
                       const CapsuleParams& params, const TorqueMap* torque_map);

/// Inelastic projection onto the [0, pi/2] contact range.
PlantState apply_contact_limits(const PlantState& state);

/// Full plant step: RK4 advance followed by contact projection. dt must lie
/// in (0, 5e-3] s. Raises IntegrationBlowupError naming the field that went
/// non-finite.
PlantState step(const PlantState& state, double u_cmd, double dt,
                const CapsuleParams& params, const TorqueMap* torque_map);

/// Current that balances gravity at the given angle:
/// i_eq = m g L cos(theta) / tau_FE(theta).
double equilibrium_current(const TorqueMap& torque_map,
                           const CapsuleParams& params, double theta);

}  // namespace capsim
