#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "capsim/capsule.hpp"
#include "capsim/geometry.hpp"

namespace capsim {

/// Per-ampere planar wrench on one magnet at one pitch angle.
struct WrenchRow {
  double fx = 0.0;   // [N/A]
  double fz = 0.0;   // [N/A]
  double tau = 0.0;  // [N·m/A], direct dipole torque about the pitch axis
};

/// Angle-indexed per-ampere force/torque map for one actuation mode. Rows are
/// stored per magnet over a strictly increasing grid spanning [0, pi/2].
struct ActuationTable {
  ActuationMode mode;
  std::vector<double> angles;  // [rad]
  std::array<std::vector<WrenchRow>, 2> rows;
  double alpha = 1.0;  // calibration scalar applied by tau_fe

  bool valid() const;
};

class TableParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-ampere wrench on both magnets at pitch angle theta for the given mode,
/// with the magnets placed by rotating their body offsets about the contact.
/// Forces are the gradient of m·B by central differences (step h_fd); the
/// out-of-plane force is checked against the planar tolerance and dropped.
std::array<WrenchRow, 2> magnet_wrench(double theta, const ActuationMode& mode,
                                       const std::array<CoilGeometry, 4>& coils,
                                       const std::array<MagnetSpec, 2>& magnets,
                                       const CapsuleParams& capsule);

/// Sweep magnet_wrench over a uniform grid of the given step (must divide
/// pi/2 evenly; default 5 degrees gives 19 samples). alpha starts at 1.
ActuationTable build_table(const ActuationMode& mode, double grid_step_rad,
                           const Scene& scene, const CapsuleParams& capsule);

/// Default-step (5 degree) table for the default scene.
ActuationTable build_default_table(const ActuationMode& mode, double core_gain);

/// Precomputed torque-per-ampere interpolant: combines direct torques with
/// the r x F moments of both magnets at each grid node and interpolates
/// piecewise-linearly. Combination happens once so queries are cheap inside
/// the integrator and controller.
class TorqueMap {
 public:
  TorqueMap(const ActuationTable& table, const CapsuleParams& capsule);

  /// tau_FE(theta) [N·m/A]. Throws std::domain_error outside the grid.
  double tau_fe(double theta) const;

  /// Same, with theta clamped into the grid (for integrator stage points that
  /// transiently poke past the contact limits).
  double tau_fe_clamped(double theta) const;

  /// Symmetric-difference slope of the interpolant, step 0.5 degrees.
  double derivative(double theta) const;

  double theta_min() const { return angles_.front(); }
  double theta_max() const { return angles_.back(); }

 private:
  std::vector<double> angles_;
  std::vector<double> combined_;  // alpha * (tau_1 + tau_2 + tau_F1 + tau_F2)
};

/// One-off query convenience; builds the interpolant internally.
double tau_fe(const ActuationTable& table, double theta,
              const CapsuleParams& capsule);

/// CSV round-trip of the table (degrees on disk, radians in memory; 9
/// significant digits). load_table raises TableParseError with the offending
/// line number on malformed input.
void save_table(const ActuationTable& table, const std::string& path);
ActuationTable load_table(const std::string& path);

inline constexpr double kForceDifferenceStep = 1.0e-4;  // h_fd [m]
inline constexpr double kPlanarTolerance = 1.0e-3;      // relative |F_y| bound

}  // namespace capsim
