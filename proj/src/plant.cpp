#include "capsim/plant.hpp"

#include <cmath>

namespace capsim {
namespace {

PlantDerivatives rhs_impl(const PlantState& state, double u_cmd,
                          const CapsuleParams& params,
                          const TorqueMap* torque_map, bool clamp_table) {
  double tau_mag = 0.0;
  if (torque_map != nullptr) {
    const double tau_per_amp = clamp_table
                                   ? torque_map->tau_fe_clamped(state.theta)
                                   : torque_map->tau_fe(state.theta);
    tau_mag = state.current * tau_per_amp;
  }
  PlantDerivatives d;
  d.dtheta = state.omega;
  d.domega = (tau_mag + gravity_torque(params, state.theta) -
              params.viscous_damping * state.omega) /
             params.inertia_contact;
  d.dcurrent = (u_cmd - state.current) / params.driver_time_constant;
  return d;
}

}  // namespace

double gravity_torque(const CapsuleParams& params, double theta) {
  return -params.mass * params.gravity * params.lever_arm * std::cos(theta);
}

PlantDerivatives dynamics_rhs(const PlantState& state, double u_cmd,
                              const CapsuleParams& params,
                              const TorqueMap* torque_map) {
  return rhs_impl(state, u_cmd, params, torque_map, /*clamp_table=*/false);
}

PlantState rk4_advance(const PlantState& state, double u_cmd, double dt,
                       const CapsuleParams& params,
                       const TorqueMap* torque_map) {
  const auto eval = [&](double theta, double omega, double current) {
    PlantState s = state;
    s.theta = theta;
    s.omega = omega;
    s.current = current;
    return rhs_impl(s, u_cmd, params, torque_map, /*clamp_table=*/true);
  };

  const PlantDerivatives k1 = eval(state.theta, state.omega, state.current);
  const PlantDerivatives k2 =
      eval(state.theta + 0.5 * dt * k1.dtheta, state.omega + 0.5 * dt * k1.domega,
           state.current + 0.5 * dt * k1.dcurrent);
  const PlantDerivatives k3 =
      eval(state.theta + 0.5 * dt * k2.dtheta, state.omega + 0.5 * dt * k2.domega,
           state.current + 0.5 * dt * k2.dcurrent);
  const PlantDerivatives k4 =
      eval(state.theta + dt * k3.dtheta, state.omega + dt * k3.domega,
           state.current + dt * k3.dcurrent);

  PlantState next = state;
  next.theta += dt / 6.0 *
                (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta);
  next.omega += dt / 6.0 *
                (k1.domega + 2.0 * k2.domega + 2.0 * k3.domega + k4.domega);
  next.current += dt / 6.0 * (k1.dcurrent + 2.0 * k2.dcurrent +
                              2.0 * k3.dcurrent + k4.dcurrent);
  next.time += dt;
  return next;
}

PlantState apply_contact_limits(const PlantState& state) {
  PlantState s = state;
  if (s.theta < 0.0) {
    s.theta = 0.0;
    s.omega = std::max(s.omega, 0.0);
  } else if (s.theta > M_PI_2) {
    s.theta = M_PI_2;
    s.omega = std::min(s.omega, 0.0);
  }
  return s;
}

PlantState step(const PlantState& state, double u_cmd, double dt,
                const CapsuleParams& params, const TorqueMap* torque_map) {
  if (!(dt > 0.0 && dt <= 5e-3)) {
    throw std::invalid_argument("step: dt must lie in (0, 5e-3] s");
  }
  PlantState next = apply_contact_limits(
      rk4_advance(state, u_cmd, dt, params, torque_map));

  if (!std::isfinite(next.theta)) {
    throw IntegrationBlowupError("step: theta became non-finite at t=" +
                                 std::to_string(next.time));
  }
  if (!std::isfinite(next.omega)) {
    throw IntegrationBlowupError("step: omega became non-finite at t=" +
                                 std::to_string(next.time));
  }
  if (!std::isfinite(next.current)) {
    throw IntegrationBlowupError("step: current became non-finite at t=" +
                                 std::to_string(next.time));
  }
  return next;
}

double equilibrium_current(const TorqueMap& torque_map,
                           const CapsuleParams& params, double theta) {
  return params.mass * params.gravity * params.lever_arm * std::cos(theta) /
         torque_map.tau_fe(theta);
}

}  // namespace capsim
