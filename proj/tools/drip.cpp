// Command line front end: validate scenarios, run single solves, and drive
// experiment campaigns.
//
// Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 when at least
// one campaign trial failed.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "drip/bccd.hpp"
#include "drip/campaign.hpp"
#include "drip/csv.hpp"
#include "drip/errors.hpp"
#include "drip/metrics.hpp"
#include "drip/qcqp.hpp"
#include "drip/scenario.hpp"
#include "drip/signals.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitTrialFailure = 3;

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw drip::IoError("cannot write '" + path.string() + "'");
  return f;
}

int cmd_validate(const std::string& scenario_path) {
  const drip::ScenarioConfig cfg = drip::load_scenario(scenario_path);
  std::cout << "ok: " << scenario_path << "\n"
            << "  " << cfg.n_tx << " tx / " << cfg.n_rx << " rx antennas, " << cfg.n_samples
            << " samples, " << cfg.n_users << " users\n"
            << "  " << cfg.num_targets() << " target(s), " << cfg.num_interferers()
            << " interferer(s)\n"
            << "  epsilon = " << cfg.epsilon << ", eta = " << cfg.eta_db
            << " dB, seed = " << cfg.rng_seed << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& scenario_path, const std::string& out_dir,
              std::optional<std::uint64_t> seed, const std::string& dump_qcqp) {
  drip::ScenarioConfig cfg = drip::load_scenario(scenario_path);
  if (seed) cfg.rng_seed = *seed;

  drip::Rng rng(cfg.rng_seed);
  const drip::CommBlock comm = drip::draw_comm_block(cfg, rng);
  const drip::ComplexWaveform x0 = drip::lfm_chirp(cfg);
  const drip::SolveResult result = drip::drip_solve(cfg, comm, x0);
  const drip::MetricReport report =
      drip::evaluate_metrics(cfg, comm, x0, result.waveform, result.beamformers);

  std::cout << "status: " << drip::to_string(result.status) << "\n"
            << "outer iterations: " << result.outer_iterations << "\n"
            << "objective ||x - x_comm||^2: " << result.objective_trace.back() << "\n"
            << "mui energy: " << report.mui_energy << "\n"
            << "sum rate: " << report.sum_rate_bps_hz << " bps/Hz\n"
            << "papr: " << report.papr_db << " dB (cap " << cfg.eta_db << " dB)\n"
            << "similarity ||x - x0||: " << report.similarity << " (radius " << cfg.epsilon
            << ")\n";
  for (int q = 0; q < cfg.num_targets(); ++q)
    std::cout << "sinr target " << (q + 1) << ": " << report.sinr_per_target_db[q] << " dB (floor "
              << cfg.sinr_floors_db[q] << " dB)\n";
  std::cout << "max constraint violation: " << result.max_violation << "\n";

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw drip::IoError("cannot create output directory '" + out_dir + "'");
  const fs::path dir(out_dir);

  {
    auto f = open_out(dir / "waveform.csv");
    drip::write_waveform_csv(result.waveform.vec(), f);
  }
  {
    auto f = open_out(dir / "traces.csv");
    f << "outer_iter,objective,mui";
    for (int q = 0; q < cfg.num_targets(); ++q) f << ",sinr_db_" << (q + 1);
    f << "\n";
    for (std::size_t k = 0; k < result.objective_trace.size(); ++k) {
      f << (k + 1) << ',' << drip::csv_num(result.objective_trace[k]) << ','
        << drip::csv_num(result.mui_trace[k]);
      for (int q = 0; q < cfg.num_targets(); ++q)
        f << ',' << drip::csv_num(result.sinr_trace_db[k][q]);
      f << "\n";
    }
  }
  {
    auto f = open_out(dir / "residuals.csv");
    f << "constraint_index,residual\n";
    for (Eigen::Index i = 0; i < result.feasibility.size(); ++i)
      f << (i + 1) << ',' << drip::csv_num(result.feasibility(i)) << "\n";
  }
  {
    auto f = open_out(dir / "beamformers.csv");
    f << "target,index,re,im\n";
    for (int q = 0; q < result.beamformers.num_targets(); ++q) {
      const Eigen::VectorXcd& u = result.beamformers[q];
      for (Eigen::Index i = 0; i < u.size(); ++i)
        f << (q + 1) << ',' << i << ',' << drip::csv_num(u(i).real()) << ','
          << drip::csv_num(u(i).imag()) << "\n";
    }
  }
  {
    auto f = open_out(dir / "constellation.csv");
    f << "user,sample,re,im\n";
    drip::emit_constellation(result, comm.channel, f);
  }

  if (!dump_qcqp.empty()) {
    const drip::QcqpProblem prob =
        drip::assemble(comm.zf_reference.vec(), x0.vec(), result.beamformers, cfg);
    auto f = open_out(dump_qcqp);
    drip::write_qcqp_dump(prob, f);
  }

  std::cout << "wrote " << out_dir << "/{waveform,traces,residuals,beamformers,constellation}.csv"
            << "\n";
  return kExitOk;
}

int cmd_run(const std::string& campaign_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed, std::optional<int> trials,
            std::optional<int> threads) {
  drip::Campaign campaign = drip::load_campaign(campaign_path);
  if (!out_dir.empty()) campaign.out_dir = out_dir;
  if (seed) campaign.base_seed = *seed;
  if (trials) campaign.trials = *trials;
  if (threads) campaign.threads = *threads;

  const drip::CampaignOutcome outcome = drip::run_campaign(campaign);
  for (const std::string& f : outcome.files_written) std::cout << "wrote " << f << "\n";
  if (outcome.failed_trials > 0) {
    std::cerr << outcome.failed_trials << " trial(s) failed; see the error column\n";
    return kExitTrialFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DRIP space-time waveform designer and experiment harness"};
  app.require_subcommand(1);

  std::string scenario_path, campaign_path, out_dir, dump_qcqp;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials, threads;

  auto* validate = app.add_subcommand("validate", "Parse and validate a scenario file");
  validate->add_option("scenario", scenario_path, "scenario config file")->required();

  auto* solve = app.add_subcommand("solve", "Run one solve and dump the result bundle");
  solve->add_option("scenario", scenario_path, "scenario config file")->required();
  solve->add_option("--out", out_dir, "output directory")->default_val("out");
  solve->add_option("--seed", seed, "override the scenario rng seed");
  solve->add_option("--dump-qcqp", dump_qcqp, "also dump the assembled program to this file");

  auto* run = app.add_subcommand("run", "Run an experiment campaign");
  run->add_option("campaign", campaign_path, "campaign config file")->required();
  run->add_option("--out", out_dir, "override the campaign output directory");
  run->add_option("--seed", seed, "override the campaign base seed");
  run->add_option("--trials", trials, "override the campaign trial count");
  run->add_option("--threads", threads, "worker threads for trials");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(scenario_path);
    if (solve->parsed()) return cmd_solve(scenario_path, out_dir, seed, dump_qcqp);
    if (run->parsed()) return cmd_run(campaign_path, out_dir, seed, trials, threads);
  } catch (const drip::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const drip::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
