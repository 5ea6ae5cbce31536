#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace drip {

enum class Constellation { QPSK, PSK16, PSK64, QAM16, QAM64 };

std::string to_string(Constellation c);
Constellation constellation_from_string(const std::string& name);

/// Full physical and solver parameterization of one experiment.
///
/// Immutable after construction/loading; safe to share across worker threads.
/// Angles are stored in degrees (as written in config files) and converted to
/// radians at the consuming module boundary via the *_rad accessors. PAPR cap
/// and SINR floors are stored in dB and converted once through the *_linear
/// accessors.
struct ScenarioConfig {
  int n_tx = 0;        // transmit antennas
  int n_rx = 0;        // receive antennas
  int n_samples = 0;   // time samples per waveform
  int n_users = 0;     // downlink communication users

  std::vector<double> target_angles_deg;
  std::vector<double> interferer_angles_deg;
  std::vector<double> target_powers;      // E|gamma_q|^2
  std::vector<double> interferer_powers;  // E|gamma_bar_i|^2

  double radar_noise_power = 0.01;
  double comm_noise_power = 0.01;

  double epsilon = 0.5;  // similarity-ball radius around the reference chirp
  double eta_db = 3.0;   // PAPR cap
  std::vector<double> sinr_floors_db;

  double rho = 10.0;  // augmented-Lagrangian penalty factor
  int outer_iters = 8;
  int inner_iters = 30;
  int bfgs_iters = 50;

  Constellation constellation = Constellation::QPSK;

  double tx_spacing_wavelengths = 0.5;
  double rx_spacing_wavelengths = 0.5;

  std::uint64_t rng_seed = 1;

  int num_targets() const { return static_cast<int>(target_angles_deg.size()); }
  int num_interferers() const { return static_cast<int>(interferer_angles_deg.size()); }
  /// Number of complex space-time samples, n_tx * n_samples.
  int dim() const { return n_tx * n_samples; }

  double eta_linear() const;
  std::vector<double> sinr_floors_linear() const;
  double target_angle_rad(int q) const;
  double interferer_angle_rad(int i) const;
};

/// 10^(v/10).
double db_to_linear(double v_db);
double linear_to_db(double v);

/// Throws std::invalid_argument naming the violated field.
void validate(const ScenarioConfig& cfg);

/// Parses the flat key=value config format ('#' starts a comment, list values
/// comma-separated). Unknown keys are rejected. The returned config has been
/// validated.
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario(const std::string& text, const std::string& origin = "<string>");

/// Writes a config in the same key=value format load_scenario accepts.
void save_scenario(const ScenarioConfig& cfg, const std::string& path);
std::string format_scenario(const ScenarioConfig& cfg);

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

}  // namespace drip
