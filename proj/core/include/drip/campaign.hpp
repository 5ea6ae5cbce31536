#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "drip/bccd.hpp"
#include "drip/metrics.hpp"
#include "drip/scenario.hpp"

namespace drip {

/// Named experiment families; each one reproduces a figure-style dataset as
/// CSV.
enum class CampaignKind {
  sinr_vs_iter,
  mui_vs_iter,
  rate_vs_epsilon,
  constellation_scatter,
  sinr_vs_epsilon,
  beampattern,
  papr_ccdf,
  mui_vs_epsilon_box,
  mui_vs_eta,
  similarity_regions,
};

std::string to_string(CampaignKind k);
CampaignKind campaign_kind_from_string(const std::string& name);

struct Campaign {
  CampaignKind kind = CampaignKind::sinr_vs_iter;
  ScenarioConfig base;
  std::string sweep_param;           // ScenarioConfig field name, may be empty
  std::vector<double> sweep_values;  // empty means "base value only"
  int trials = 100;
  std::string out_dir = "out";
  std::uint64_t base_seed = 1;  // trial t runs on seed base_seed + t
  int threads = 1;

  // papr_ccdf
  std::vector<double> ccdf_thresholds_db;
  // beampattern scan grid
  double grid_start_deg = -90.0;
  double grid_stop_deg = 90.0;
  double grid_step_deg = 0.5;
  // similarity_regions cycles trials through the cross product of these
  std::vector<double> eta_list_db;
  std::vector<double> floor_list_db;
  std::vector<Constellation> constellation_list;
};

/// Same key=value format as scenarios; the `scenario` key points at the base
/// scenario file, resolved relative to the campaign file's directory.
Campaign load_campaign(const std::string& path);

/// Returns a copy of cfg with one sweepable numeric parameter replaced.
/// Throws ConfigError for parameters that do not exist or cannot be swept.
ScenarioConfig apply_sweep(const ScenarioConfig& cfg, const std::string& param, double value);

struct CampaignOutcome {
  int failed_trials = 0;  // trials that threw or hit a hard solver failure
  std::vector<std::string> files_written;
};

/// Runs trials x sweep values on a worker pool and writes the campaign's CSV
/// bundle under out_dir. Output is deterministic for a fixed campaign file
/// and seed, independent of the thread count. Solver failures are counted
/// per trial and reported in the CSV, never fatal.
CampaignOutcome run_campaign(const Campaign& campaign);

/// Received-constellation scatter rows (user, sample, re, im) of H * X.
void emit_constellation(const SolveResult& result, const Eigen::MatrixXcd& channel,
                        std::ostream& out);

}  // namespace drip
