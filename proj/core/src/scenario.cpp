#include "drip/scenario.hpp"

#include "drip/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace drip {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw ConfigError("scenario: key '" + key + "': cannot parse '" + v + "' as a number");
  }
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return i;
  } catch (const std::exception&) {
    throw ConfigError("scenario: key '" + key + "': cannot parse '" + v + "' as an integer");
  }
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("scenario: key '" + key + "': empty list element");
    out.push_back(parse_double(key, item));
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError("scenario: " + message);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out;
}

}  // namespace

std::string to_string(Constellation c) {
  switch (c) {
    case Constellation::QPSK: return "qpsk";
    case Constellation::PSK16: return "psk16";
    case Constellation::PSK64: return "psk64";
    case Constellation::QAM16: return "qam16";
    case Constellation::QAM64: return "qam64";
  }
  throw std::logic_error("unreachable constellation value");
}

Constellation constellation_from_string(const std::string& name) {
  const std::string n = lower(trim(name));
  if (n == "qpsk" || n == "psk4") return Constellation::QPSK;
  if (n == "psk16" || n == "16psk" || n == "16-psk") return Constellation::PSK16;
  if (n == "psk64" || n == "64psk" || n == "64-psk") return Constellation::PSK64;
  if (n == "qam16" || n == "16qam" || n == "16-qam") return Constellation::QAM16;
  if (n == "qam64" || n == "64qam" || n == "64-qam") return Constellation::QAM64;
  throw ConfigError("scenario: unsupported constellation '" + name + "'");
}

double db_to_linear(double v_db) { return std::pow(10.0, v_db / 10.0); }

double linear_to_db(double v) { return 10.0 * std::log10(v); }

double ScenarioConfig::eta_linear() const { return db_to_linear(eta_db); }

std::vector<double> ScenarioConfig::sinr_floors_linear() const {
  std::vector<double> out(sinr_floors_db.size());
  std::transform(sinr_floors_db.begin(), sinr_floors_db.end(), out.begin(), db_to_linear);
  return out;
}

double ScenarioConfig::target_angle_rad(int q) const {
  return target_angles_deg.at(q) * kPi / 180.0;
}

double ScenarioConfig::interferer_angle_rad(int i) const {
  return interferer_angles_deg.at(i) * kPi / 180.0;
}

void validate(const ScenarioConfig& cfg) {
  require(cfg.n_tx >= 1, "n_tx must be a positive integer");
  require(cfg.n_rx >= 1, "n_rx must be a positive integer");
  require(cfg.n_samples >= 1, "n_samples must be a positive integer");
  require(cfg.n_users >= 1, "n_users must be a positive integer");
  require(cfg.n_users <= cfg.n_tx, "n_users exceeds n_tx");

  const std::size_t q = cfg.target_angles_deg.size();
  require(q >= 1, "target_angles must list at least one target");
  require(cfg.target_powers.size() == q, "target_powers length differs from target_angles");
  require(cfg.sinr_floors_db.size() == q, "sinr_floors_db length differs from target_angles");
  require(cfg.interferer_powers.size() == cfg.interferer_angles_deg.size(),
          "interferer_powers length differs from interferer_angles");

  for (double a : cfg.target_angles_deg)
    require(a > -90.0 && a < 90.0, "target_angles entries must lie in (-90, 90) degrees");
  for (double a : cfg.interferer_angles_deg)
    require(a > -90.0 && a < 90.0, "interferer_angles entries must lie in (-90, 90) degrees");
  for (double p : cfg.target_powers) require(p >= 0.0, "target_powers entries must be nonnegative");
  for (double p : cfg.interferer_powers)
    require(p >= 0.0, "interferer_powers entries must be nonnegative");

  require(cfg.radar_noise_power > 0.0, "radar_noise_power must be positive");
  require(cfg.comm_noise_power > 0.0, "comm_noise_power must be positive");
  require(cfg.epsilon >= 0.0, "epsilon must be nonnegative");
  require(cfg.eta_db >= 0.0, "eta below unit PAPR");
  require(cfg.rho > 0.0, "rho must be positive");
  require(cfg.outer_iters >= 1, "outer_iters must be at least 1");
  require(cfg.inner_iters >= 1, "inner_iters must be at least 1");
  require(cfg.bfgs_iters >= 1, "bfgs_iters must be at least 1");
  require(cfg.tx_spacing_wavelengths > 0.0, "tx_spacing_wavelengths must be positive");
  require(cfg.rx_spacing_wavelengths > 0.0, "rx_spacing_wavelengths must be positive");
}

ScenarioConfig parse_scenario(const std::string& text, const std::string& origin) {
  ScenarioConfig cfg;
  bool have_target_powers = false;
  bool have_floors = false;
  bool have_interferer_powers = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("scenario: " + origin + ":" + std::to_string(lineno) +
                                  ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "n_tx") cfg.n_tx = static_cast<int>(parse_int(key, value));
    else if (key == "n_rx") cfg.n_rx = static_cast<int>(parse_int(key, value));
    else if (key == "n_samples") cfg.n_samples = static_cast<int>(parse_int(key, value));
    else if (key == "n_users") cfg.n_users = static_cast<int>(parse_int(key, value));
    else if (key == "target_angles") cfg.target_angles_deg = parse_list(key, value);
    else if (key == "interferer_angles") cfg.interferer_angles_deg = parse_list(key, value);
    else if (key == "target_powers") { cfg.target_powers = parse_list(key, value); have_target_powers = true; }
    else if (key == "interferer_powers") { cfg.interferer_powers = parse_list(key, value); have_interferer_powers = true; }
    else if (key == "radar_noise_power") cfg.radar_noise_power = parse_double(key, value);
    else if (key == "comm_noise_power") cfg.comm_noise_power = parse_double(key, value);
    else if (key == "epsilon") cfg.epsilon = parse_double(key, value);
    else if (key == "eta_db") cfg.eta_db = parse_double(key, value);
    else if (key == "sinr_floors_db") { cfg.sinr_floors_db = parse_list(key, value); have_floors = true; }
    else if (key == "rho") cfg.rho = parse_double(key, value);
    else if (key == "outer_iters") cfg.outer_iters = static_cast<int>(parse_int(key, value));
    else if (key == "inner_iters") cfg.inner_iters = static_cast<int>(parse_int(key, value));
    else if (key == "bfgs_iters") cfg.bfgs_iters = static_cast<int>(parse_int(key, value));
    else if (key == "constellation") cfg.constellation = constellation_from_string(value);
    else if (key == "tx_spacing_wavelengths") cfg.tx_spacing_wavelengths = parse_double(key, value);
    else if (key == "rx_spacing_wavelengths") cfg.rx_spacing_wavelengths = parse_double(key, value);
    else if (key == "rng_seed") cfg.rng_seed = static_cast<std::uint64_t>(parse_int(key, value));
    else
      throw ConfigError("scenario: " + origin + ":" + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
  }

  // Per-source defaults that depend on list lengths.
  if (!have_target_powers) cfg.target_powers.assign(cfg.target_angles_deg.size(), 1.0);
  if (!have_floors) cfg.sinr_floors_db.assign(cfg.target_angles_deg.size(), 10.0);
  if (!have_interferer_powers) cfg.interferer_powers.assign(cfg.interferer_angles_deg.size(), 1.0);

  validate(cfg);
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("scenario: cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_scenario(buf.str(), path);
}

std::string format_scenario(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "n_tx = " << cfg.n_tx << "\n";
  out << "n_rx = " << cfg.n_rx << "\n";
  out << "n_samples = " << cfg.n_samples << "\n";
  out << "n_users = " << cfg.n_users << "\n";
  out << "target_angles = " << format_list(cfg.target_angles_deg) << "\n";
  if (!cfg.interferer_angles_deg.empty())
    out << "interferer_angles = " << format_list(cfg.interferer_angles_deg) << "\n";
  out << "target_powers = " << format_list(cfg.target_powers) << "\n";
  if (!cfg.interferer_powers.empty())
    out << "interferer_powers = " << format_list(cfg.interferer_powers) << "\n";
  out << "radar_noise_power = " << format_double(cfg.radar_noise_power) << "\n";
  out << "comm_noise_power = " << format_double(cfg.comm_noise_power) << "\n";
  out << "epsilon = " << format_double(cfg.epsilon) << "\n";
  out << "eta_db = " << format_double(cfg.eta_db) << "\n";
  out << "sinr_floors_db = " << format_list(cfg.sinr_floors_db) << "\n";
  out << "rho = " << format_double(cfg.rho) << "\n";
  out << "outer_iters = " << cfg.outer_iters << "\n";
  out << "inner_iters = " << cfg.inner_iters << "\n";
  out << "bfgs_iters = " << cfg.bfgs_iters << "\n";
  out << "constellation = " << to_string(cfg.constellation) << "\n";
  out << "tx_spacing_wavelengths = " << format_double(cfg.tx_spacing_wavelengths) << "\n";
  out << "rx_spacing_wavelengths = " << format_double(cfg.rx_spacing_wavelengths) << "\n";
  out << "rng_seed = " << cfg.rng_seed << "\n";
  return out.str();
}

void save_scenario(const ScenarioConfig& cfg, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("scenario: cannot write '" + path + "'");
  f << format_scenario(cfg);
  if (!f) throw IoError("scenario: write to '" + path + "' failed");
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
  return a.n_tx == b.n_tx && a.n_rx == b.n_rx && a.n_samples == b.n_samples &&
         a.n_users == b.n_users && a.target_angles_deg == b.target_angles_deg &&
         a.interferer_angles_deg == b.interferer_angles_deg &&
         a.target_powers == b.target_powers && a.interferer_powers == b.interferer_powers &&
         a.radar_noise_power == b.radar_noise_power && a.comm_noise_power == b.comm_noise_power &&
         a.epsilon == b.epsilon && a.eta_db == b.eta_db && a.sinr_floors_db == b.sinr_floors_db &&
         a.rho == b.rho && a.outer_iters == b.outer_iters && a.inner_iters == b.inner_iters &&
         a.bfgs_iters == b.bfgs_iters && a.constellation == b.constellation &&
         a.tx_spacing_wavelengths == b.tx_spacing_wavelengths &&
         a.rx_spacing_wavelengths == b.rx_spacing_wavelengths && a.rng_seed == b.rng_seed;
}

}  // namespace drip
