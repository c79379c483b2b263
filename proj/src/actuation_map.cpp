#include "capsim/actuation_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "capsim/field.hpp"

namespace capsim {
namespace {

// Planar rotation of a body-frame offset about the contact point.
Vec3 rotate_offset(const Vec3& offset, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Vec3(c * offset.x() - s * offset.z(), offset.y(),
              s * offset.x() + c * offset.z());
}

// Pitch torque of a x b in the x-z plane (positive raises the pitch angle).
double planar_cross(const Vec3& a, const Vec3& b) {
  return a.x() * b.z() - a.z() * b.x();
}

int find_interval(const std::vector<double>& angles, double theta) {
  if (!(theta >= angles.front() && theta <= angles.back())) {
    throw std::domain_error("tau_fe: pitch angle " + std::to_string(theta) +
                            " rad outside the table grid");
  }
  const auto it = std::upper_bound(angles.begin(), angles.end(), theta);
  const int hi = static_cast<int>(it - angles.begin());
  return std::clamp(hi, 1, static_cast<int>(angles.size()) - 1);
}

}  // namespace

bool ActuationTable::valid() const {
  if (!mode.valid() || alpha <= 0.0 || angles.size() < 2) return false;
  if (angles.front() != 0.0 || angles.back() != M_PI_2) return false;
  for (size_t j = 1; j < angles.size(); ++j) {
    if (!(angles[j] > angles[j - 1])) return false;
  }
  for (const auto& magnet_rows : rows) {
    if (magnet_rows.size() != angles.size()) return false;
    for (const auto& row : magnet_rows) {
      if (!std::isfinite(row.fx) || !std::isfinite(row.fz) ||
          !std::isfinite(row.tau)) {
        return false;
      }
    }
  }
  return true;
}

std::array<WrenchRow, 2> magnet_wrench(double theta, const ActuationMode& mode,
                                       const std::array<CoilGeometry, 4>& coils,
                                       const std::array<MagnetSpec, 2>& magnets,
                                       const CapsuleParams& capsule) {
  if (!(theta >= 0.0 && theta <= M_PI_2)) {
    throw std::domain_error("magnet_wrench: theta outside [0, pi/2]");
  }
  (void)capsule;

  std::array<WrenchRow, 2> result;
  for (int k = 0; k < 2; ++k) {
    const MagnetSpec& magnet = magnets[k];
    const Vec3 position = rotate_offset(magnet.body_frame_offset, theta);
    const Vec3 moment =
        magnet.dipole_moment_magnitude * rotate_offset(magnet.moment_axis, theta);

    const Vec3 field = scene_field(position, mode, coils);

    // F = grad(m·B), central differences per axis.
    Vec3 force;
    for (int axis = 0; axis < 3; ++axis) {
      Vec3 dp = Vec3::Zero();
      dp[axis] = kForceDifferenceStep;
      const double plus = moment.dot(scene_field(position + dp, mode, coils));
      const double minus = moment.dot(scene_field(position - dp, mode, coils));
      force[axis] = (plus - minus) / (2.0 * kForceDifferenceStep);
    }

    const double planar_scale =
        std::max({std::abs(force.x()), std::abs(force.z()), 1e-15});
    if (std::abs(force.y()) > kPlanarTolerance * planar_scale) {
      throw std::logic_error(
          "magnet_wrench: out-of-plane force exceeds the planar tolerance; "
          "coil geometry has lost its symmetry about the pitch plane");
    }

    result[k].fx = force.x();
    result[k].fz = force.z();
    result[k].tau = planar_cross(moment, field);
  }
  return result;
}

ActuationTable build_table(const ActuationMode& mode, double grid_step_rad,
                           const Scene& scene, const CapsuleParams& capsule) {
  if (!(grid_step_rad > 0.0)) {
    throw std::invalid_argument("build_table: grid step must be positive");
  }
  const double intervals = M_PI_2 / grid_step_rad;
  const int n = static_cast<int>(std::lround(intervals));
  if (n < 1 || std::abs(intervals - n) > 1e-9) {
    throw std::invalid_argument("build_table: grid step must divide pi/2 evenly");
  }

  ActuationTable table;
  table.mode = mode;
  table.alpha = 1.0;
  table.angles.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    table.angles[j] = j * grid_step_rad;
  }
  table.angles[0] = 0.0;
  table.angles[n] = M_PI_2;

  table.rows[0].resize(n + 1);
  table.rows[1].resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    const auto wrench =
        magnet_wrench(table.angles[j], mode, scene.coils, scene.magnets, capsule);
    table.rows[0][j] = wrench[0];
    table.rows[1][j] = wrench[1];
  }
  return table;
}

ActuationTable build_default_table(const ActuationMode& mode, double core_gain) {
  const Scene scene = default_scene(core_gain);
  return build_table(mode, 5.0 * M_PI / 180.0, scene, default_capsule_params());
}

TorqueMap::TorqueMap(const ActuationTable& table, const CapsuleParams& capsule)
    : angles_(table.angles) {
  if (!table.valid()) {
    throw std::invalid_argument("TorqueMap: invalid actuation table");
  }
  combined_.resize(angles_.size());
  for (size_t j = 0; j < angles_.size(); ++j) {
    double total = 0.0;
    for (int k = 0; k < 2; ++k) {
      const WrenchRow& row = table.rows[k][j];
      const Vec3 r = rotate_offset(capsule.magnet_offsets[k], angles_[j]);
      total += row.tau + r.x() * row.fz - r.z() * row.fx;
    }
    combined_[j] = table.alpha * total;
  }
}

double TorqueMap::tau_fe(double theta) const {
  const int hi = find_interval(angles_, theta);
  const double t =
      (theta - angles_[hi - 1]) / (angles_[hi] - angles_[hi - 1]);
  return combined_[hi - 1] + t * (combined_[hi] - combined_[hi - 1]);
}

double TorqueMap::tau_fe_clamped(double theta) const {
  return tau_fe(std::clamp(theta, angles_.front(), angles_.back()));
}

double TorqueMap::derivative(double theta) const {
  const double h = 0.5 * M_PI / 180.0;
  const double lo = std::clamp(theta - h, theta_min(), theta_max());
  const double hi = std::clamp(theta + h, theta_min(), theta_max());
  return (tau_fe(hi) - tau_fe(lo)) / (hi - lo);
}

double tau_fe(const ActuationTable& table, double theta,
              const CapsuleParams& capsule) {
  return TorqueMap(table, capsule).tau_fe(theta);
}

void save_table(const ActuationTable& table, const std::string& path) {
  if (!table.valid()) {
    throw std::invalid_argument("save_table: invalid actuation table");
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_table: cannot open '" + path + "' for writing");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", table.alpha);
  out << "# actuation_table v1, mode=" << table.mode.name() << ", alpha=" << buf
      << "\n";
  out << "theta_deg,m1_Fx,m1_Fz,m1_tau,m2_Fx,m2_Fz,m2_tau\n";
  for (size_t j = 0; j < table.angles.size(); ++j) {
    const double deg = table.angles[j] * 180.0 / M_PI;
    std::snprintf(buf, sizeof(buf), "%.9g", deg);
    out << buf;
    for (int k = 0; k < 2; ++k) {
      const WrenchRow& row = table.rows[k][j];
      for (double v : {row.fx, row.fz, row.tau}) {
        std::snprintf(buf, sizeof(buf), "%.9g", v);
        out << ',' << buf;
      }
    }
    out << '\n';
  }
  if (!out.good()) {
    throw std::runtime_error("save_table: write to '" + path + "' failed");
  }
}

namespace {

double parse_field(const std::string& text, int line_no) {
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw TableParseError("line " + std::to_string(line_no) +
                          ": not a number: '" + text + "'");
  }
  if (consumed != text.size() || !std::isfinite(value)) {
    throw TableParseError("line " + std::to_string(line_no) +
                          ": non-finite or trailing garbage: '" + text + "'");
  }
  return value;
}

}  // namespace

ActuationTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw TableParseError("cannot open '" + path + "'");
  }

  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) {
    throw TableParseError("line 1: empty file");
  }

  ActuationTable table;
  {
    std::string mode_name;
    char alpha_buf[64];
    char mode_buf[32];
    if (std::sscanf(line.c_str(), "# actuation_table v1, mode=%31[a-z], alpha=%63s",
                    mode_buf, alpha_buf) != 2) {
      throw TableParseError("line 1: malformed header: '" + line + "'");
    }
    mode_name = mode_buf;
    try {
      table.mode = mode_from_name(mode_name);
    } catch (const std::invalid_argument& e) {
      throw TableParseError(std::string("line 1: ") + e.what());
    }
    table.alpha = parse_field(alpha_buf, 1);
    if (!(table.alpha > 0.0)) {
      throw TableParseError("line 1: alpha must be positive");
    }
  }

  ++line_no;
  if (!std::getline(in, line) ||
      line != "theta_deg,m1_Fx,m1_Fz,m1_tau,m2_Fx,m2_Fz,m2_tau") {
    throw TableParseError("line 2: malformed column header");
  }

  std::vector<double> degrees;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<double> values;
    while (std::getline(ss, field, ',')) {
      values.push_back(parse_field(field, line_no));
    }
    if (values.size() != 7) {
      throw TableParseError("line " + std::to_string(line_no) + ": expected 7 "
                            "comma-separated values, got " +
                            std::to_string(values.size()));
    }
    if (!degrees.empty() && !(values[0] > degrees.back())) {
      throw TableParseError("line " + std::to_string(line_no) +
                            ": angle grid not strictly increasing");
    }
    degrees.push_back(values[0]);
    table.rows[0].push_back({values[1], values[2], values[3]});
    table.rows[1].push_back({values[4], values[5], values[6]});
  }

  if (degrees.size() < 2) {
    throw TableParseError("line " + std::to_string(line_no) +
                          ": table needs at least 2 rows");
  }
  if (degrees.front() != 0.0 || degrees.back() != 90.0) {
    throw TableParseError("table grid must span [0, 90] degrees exactly");
  }
  table.angles.resize(degrees.size());
  for (size_t j = 0; j < degrees.size(); ++j) {
    // Snap the endpoints so the in-memory grid hits 0 and pi/2 bit-exactly.
    table.angles[j] = degrees[j] == 90.0 ? M_PI_2 : degrees[j] * M_PI / 180.0;
  }
  return table;
}

}  // namespace capsim
