#include "drip/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "drip/csv.hpp"
#include "drip/errors.hpp"

namespace fs = std::filesystem;

namespace drip {

std::string to_string(CampaignKind k) {
  switch (k) {
    case CampaignKind::sinr_vs_iter: return "sinr_vs_iter";
    case CampaignKind::mui_vs_iter: return "mui_vs_iter";
    case CampaignKind::rate_vs_epsilon: return "rate_vs_epsilon";
    case CampaignKind::constellation_scatter: return "constellation_scatter";
    case CampaignKind::sinr_vs_epsilon: return "sinr_vs_epsilon";
    case CampaignKind::beampattern: return "beampattern";
    case CampaignKind::papr_ccdf: return "papr_ccdf";
    case CampaignKind::mui_vs_epsilon_box: return "mui_vs_epsilon_box";
    case CampaignKind::mui_vs_eta: return "mui_vs_eta";
    case CampaignKind::similarity_regions: return "similarity_regions";
  }
  throw std::logic_error("unreachable campaign kind");
}

CampaignKind campaign_kind_from_string(const std::string& name) {
  static const std::vector<CampaignKind> kinds = {
      CampaignKind::sinr_vs_iter,        CampaignKind::mui_vs_iter,
      CampaignKind::rate_vs_epsilon,     CampaignKind::constellation_scatter,
      CampaignKind::sinr_vs_epsilon,     CampaignKind::beampattern,
      CampaignKind::papr_ccdf,           CampaignKind::mui_vs_epsilon_box,
      CampaignKind::mui_vs_eta,          CampaignKind::similarity_regions,
  };
  for (CampaignKind k : kinds)
    if (to_string(k) == name) return k;
  throw ConfigError("campaign: unknown campaign '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("campaign: key '" + key + "': empty list element");
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ConfigError("campaign: key '" + key + "': cannot parse '" + item + "'");
    }
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return i;
  } catch (const std::exception&) {
    throw ConfigError("campaign: key '" + key + "': cannot parse '" + v + "' as an integer");
  }
}

}  // namespace

Campaign load_campaign(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("campaign: cannot open '" + path + "'");

  Campaign c;
  std::string scenario_path;
  bool have_seed = false;

  std::string raw;
  int lineno = 0;
  while (std::getline(f, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("campaign: " + path + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "campaign") c.kind = campaign_kind_from_string(value);
    else if (key == "scenario") scenario_path = value;
    else if (key == "sweep_param") c.sweep_param = value;
    else if (key == "sweep_values") c.sweep_values = parse_double_list(key, value);
    else if (key == "trials") c.trials = static_cast<int>(parse_int(key, value));
    else if (key == "out_dir") c.out_dir = value;
    else if (key == "seed") { c.base_seed = static_cast<std::uint64_t>(parse_int(key, value)); have_seed = true; }
    else if (key == "threads") c.threads = static_cast<int>(parse_int(key, value));
    else if (key == "ccdf_thresholds_db") c.ccdf_thresholds_db = parse_double_list(key, value);
    else if (key == "grid_start_deg") c.grid_start_deg = parse_double_list(key, value).at(0);
    else if (key == "grid_stop_deg") c.grid_stop_deg = parse_double_list(key, value).at(0);
    else if (key == "grid_step_deg") c.grid_step_deg = parse_double_list(key, value).at(0);
    else if (key == "eta_list_db") c.eta_list_db = parse_double_list(key, value);
    else if (key == "floor_list_db") c.floor_list_db = parse_double_list(key, value);
    else if (key == "constellation_list") {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ','))
        c.constellation_list.push_back(constellation_from_string(trim(item)));
    } else
      throw ConfigError("campaign: " + path + ":" + std::to_string(lineno) + ": unknown key '" +
                        key + "'");
  }

  if (scenario_path.empty()) throw ConfigError("campaign: missing 'scenario' key");
  fs::path sp(scenario_path);
  if (sp.is_relative()) sp = fs::path(path).parent_path() / sp;
  c.base = load_scenario(sp.string());

  if (!have_seed) c.base_seed = c.base.rng_seed;
  if (c.trials < 1) throw ConfigError("campaign: trials must be at least 1");
  if (!c.sweep_param.empty() && c.sweep_values.empty())
    throw ConfigError("campaign: sweep_param set but sweep_values empty");
  if (c.threads < 1) c.threads = 1;

  // Fail early if the sweep parameter cannot be applied.
  for (double v : c.sweep_values) apply_sweep(c.base, c.sweep_param, v);
  return c;
}

ScenarioConfig apply_sweep(const ScenarioConfig& cfg, const std::string& param, double value) {
  ScenarioConfig out = cfg;
  if (param == "epsilon") out.epsilon = value;
  else if (param == "eta_db") out.eta_db = value;
  else if (param == "rho") out.rho = value;
  else if (param == "radar_noise_power") out.radar_noise_power = value;
  else if (param == "comm_noise_power") out.comm_noise_power = value;
  else if (param == "outer_iters") out.outer_iters = static_cast<int>(value);
  else if (param == "inner_iters") out.inner_iters = static_cast<int>(value);
  else if (param == "bfgs_iters") out.bfgs_iters = static_cast<int>(value);
  else if (param == "sinr_floors_db")
    out.sinr_floors_db.assign(cfg.sinr_floors_db.size(), value);
  else
    throw ConfigError("campaign: parameter '" + param + "' does not exist or cannot be swept");
  validate(out);
  return out;
}

namespace {

struct TrialRun {
  int sweep_index = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  ScenarioConfig cfg;
  bool failed = false;
  std::string error;
  SolveResult result;
  MetricReport metrics;
  double objective = 0.0;  // ||x - x_comm||^2 at the returned waveform
  Eigen::MatrixXcd channel;
  std::vector<std::pair<double, double>> pattern;  // beampattern campaigns only
};

void parallel_for(int n_tasks, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || n_tasks <= 1) {
    for (int i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int n_workers = std::min(threads, n_tasks);
  pool.reserve(n_workers);
  for (int w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n_tasks; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

ScenarioConfig effective_config(const Campaign& c, int sweep_index, int trial) {
  ScenarioConfig cfg = c.base;
  if (!c.sweep_param.empty()) cfg = apply_sweep(cfg, c.sweep_param, c.sweep_values[sweep_index]);
  if (c.kind == CampaignKind::similarity_regions) {
    // Cycle trials through the requested cap/floor/constellation mix.
    const auto& etas = c.eta_list_db;
    const auto& floors = c.floor_list_db;
    const auto& consts = c.constellation_list;
    const int ne = std::max<int>(1, etas.size());
    const int nf = std::max<int>(1, floors.size());
    const int nc = std::max<int>(1, consts.size());
    const int combo = trial % (ne * nf * nc);
    if (!etas.empty()) cfg.eta_db = etas[combo % ne];
    if (!floors.empty())
      cfg.sinr_floors_db.assign(cfg.sinr_floors_db.size(), floors[(combo / ne) % nf]);
    if (!consts.empty()) cfg.constellation = consts[(combo / (ne * nf)) % nc];
    validate(cfg);
  }
  cfg.rng_seed = c.base_seed + static_cast<std::uint64_t>(trial);
  return cfg;
}

std::vector<double> beampattern_grid(const Campaign& c) {
  std::vector<double> grid;
  if (c.grid_step_deg <= 0.0) throw ConfigError("campaign: grid_step_deg must be positive");
  for (double a = c.grid_start_deg; a <= c.grid_stop_deg + 1e-9; a += c.grid_step_deg)
    grid.push_back(a);
  return grid;
}

void run_trial(const Campaign& c, TrialRun& r) {
  try {
    Rng rng(r.cfg.rng_seed);
    const CommBlock comm = draw_comm_block(r.cfg, rng);
    const ComplexWaveform x0 = lfm_chirp(r.cfg);
    r.channel = comm.channel;
    r.result = drip_solve(r.cfg, comm, x0);
    r.metrics = evaluate_metrics(r.cfg, comm, x0, r.result.waveform, r.result.beamformers);
    r.objective = (r.result.waveform.vec() - comm.zf_reference.vec()).squaredNorm();
    if (c.kind == CampaignKind::beampattern)
      r.pattern = beampattern(r.result.waveform.vec(), r.cfg, beampattern_grid(c));
    r.failed = r.result.status == SolveStatus::inner_failure;
    if (r.failed) r.error = "solver reported inner failure";
  } catch (const std::exception& e) {
    r.failed = true;
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ';');
    r.error = msg;
  }
}

class CsvFile {
 public:
  CsvFile(const fs::path& dir, const std::string& name, const Campaign& c,
          std::vector<std::string>& files_written)
      : path_(dir / name), out_(path_) {
    if (!out_) throw IoError("campaign: cannot write '" + path_.string() + "'");
    out_ << "# drip campaign output: " << name << "\n";
    out_ << "# campaign = " << to_string(c.kind) << "\n";
    if (!c.sweep_param.empty()) {
      out_ << "# sweep_param = " << c.sweep_param << "\n# sweep_values =";
      for (std::size_t i = 0; i < c.sweep_values.size(); ++i)
        out_ << (i ? "," : " ") << csv_num(c.sweep_values[i]);
      out_ << "\n";
    }
    out_ << "# trials = " << c.trials << "\n";
    out_ << "# base_seed = " << c.base_seed << " (trial t uses seed base_seed + t)\n";
    out_ << "# scenario:\n";
    std::istringstream scen(format_scenario(c.base));
    std::string line;
    while (std::getline(scen, line)) out_ << "#   " << line << "\n";
    files_written.push_back(path_.string());
  }

  ~CsvFile() { out_.flush(); }

  std::ostream& stream() { return out_; }

  void check() const {
    if (!out_) throw IoError("campaign: write to '" + path_.string() + "' failed");
  }

 private:
  fs::path path_;
  std::ofstream out_;
};

struct BoxStats {
  double median = 0.0, q1 = 0.0, q3 = 0.0, lo = 0.0, hi = 0.0;
  int n = 0;
};

double quantile_sorted(const std::vector<double>& v, double p) {
  const double h = (static_cast<double>(v.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

BoxStats box_stats(std::vector<double> v) {
  BoxStats b;
  if (v.empty()) return b;
  std::sort(v.begin(), v.end());
  b.n = static_cast<int>(v.size());
  b.median = quantile_sorted(v, 0.5);
  b.q1 = quantile_sorted(v, 0.25);
  b.q3 = quantile_sorted(v, 0.75);
  const double iqr = b.q3 - b.q1;
  const double lo_fence = b.q1 - 1.5 * iqr;
  const double hi_fence = b.q3 + 1.5 * iqr;
  b.lo = v.back();
  b.hi = v.front();
  for (double x : v) {
    if (x >= lo_fence) { b.lo = x; break; }
  }
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it <= hi_fence) { b.hi = *it; break; }
  }
  return b;
}

double safe_db(double v) { return linear_to_db(std::max(v, 1e-30)); }

}  // namespace

void emit_constellation(const SolveResult& result, const Eigen::MatrixXcd& channel,
                        std::ostream& out) {
  const Eigen::MatrixXcd received = channel * result.waveform.mat;
  for (Eigen::Index p = 0; p < received.rows(); ++p)
    for (Eigen::Index l = 0; l < received.cols(); ++l)
      out << p << ',' << l << ',' << csv_num(received(p, l).real()) << ','
          << csv_num(received(p, l).imag()) << '\n';
}

CampaignOutcome run_campaign(const Campaign& c) {
  if (c.trials < 1) throw ConfigError("campaign: trials must be at least 1");

  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  if (ec) throw IoError("campaign: cannot create output directory '" + c.out_dir + "'");

  const int n_sweeps = c.sweep_values.empty() ? 1 : static_cast<int>(c.sweep_values.size());
  const int n_tasks = n_sweeps * c.trials;

  std::vector<TrialRun> runs(n_tasks);
  for (int si = 0; si < n_sweeps; ++si) {
    for (int t = 0; t < c.trials; ++t) {
      TrialRun& r = runs[si * c.trials + t];
      r.sweep_index = si;
      r.trial = t;
      r.cfg = effective_config(c, si, t);
      r.seed = r.cfg.rng_seed;
    }
  }

  parallel_for(n_tasks, c.threads, [&](int i) { run_trial(c, runs[i]); });

  CampaignOutcome outcome;
  for (const TrialRun& r : runs)
    if (r.failed) ++outcome.failed_trials;

  auto sweep_value = [&](int si) { return c.sweep_values.empty() ? 0.0 : c.sweep_values[si]; };
  const int n_targets = c.base.num_targets();
  const std::string kind = to_string(c.kind);

  // Per-trial rows, emitted for every campaign.
  {
    CsvFile f(c.out_dir, kind + "_trials.csv", c, outcome.files_written);
    auto& out = f.stream();
    out << "sweep_value,trial,seed,status,objective,mui,mui_db,sum_rate_bps_hz,papr_db,"
           "similarity,similarity_sq,max_violation";
    for (int q = 0; q < n_targets; ++q) out << ",sinr_db_" << (q + 1);
    if (c.kind == CampaignKind::similarity_regions) out << ",eta_db,sinr_floor_db,constellation";
    out << ",error\n";
    for (const TrialRun& r : runs) {
      out << csv_num(sweep_value(r.sweep_index)) << ',' << r.trial << ',' << r.seed << ',';
      if (r.failed && r.metrics.sinr_per_target_db.empty()) {
        out << "failed";
        for (int j = 0; j < 8 + n_targets; ++j) out << ',';
        if (c.kind == CampaignKind::similarity_regions) out << ",,,";
        out << ',' << r.error << '\n';
        continue;
      }
      out << to_string(r.result.status) << ',' << csv_num(r.objective) << ','
          << csv_num(r.metrics.mui_energy) << ',' << csv_num(safe_db(r.metrics.mui_energy)) << ','
          << csv_num(r.metrics.sum_rate_bps_hz) << ',' << csv_num(r.metrics.papr_db) << ','
          << csv_num(r.metrics.similarity) << ','
          << csv_num(r.metrics.similarity * r.metrics.similarity) << ','
          << csv_num(r.result.max_violation);
      for (int q = 0; q < n_targets; ++q) out << ',' << csv_num(r.metrics.sinr_per_target_db[q]);
      if (c.kind == CampaignKind::similarity_regions)
        out << ',' << csv_num(r.cfg.eta_db) << ',' << csv_num(r.cfg.sinr_floors_db.at(0)) << ','
            << to_string(r.cfg.constellation);
      out << ',' << r.error << '\n';
    }
    f.check();
  }

  auto successful = [&](int si) {
    std::vector<const TrialRun*> out;
    for (const TrialRun& r : runs)
      if (r.sweep_index == si && !r.failed) out.push_back(&r);
    return out;
  };

  switch (c.kind) {
    case CampaignKind::sinr_vs_iter:
    case CampaignKind::mui_vs_iter: {
      CsvFile traces(c.out_dir, kind + "_traces.csv", c, outcome.files_written);
      auto& tout = traces.stream();
      const bool sinr = c.kind == CampaignKind::sinr_vs_iter;
      if (sinr) tout << "sweep_value,trial,outer_iter,target,sinr_db\n";
      else tout << "sweep_value,trial,outer_iter,mui,mui_db\n";
      for (const TrialRun& r : runs) {
        if (r.failed) continue;
        if (sinr) {
          for (std::size_t k = 0; k < r.result.sinr_trace_db.size(); ++k)
            for (int q = 0; q < n_targets; ++q)
              tout << csv_num(sweep_value(r.sweep_index)) << ',' << r.trial << ',' << (k + 1)
                   << ',' << (q + 1) << ',' << csv_num(r.result.sinr_trace_db[k][q]) << '\n';
        } else {
          for (std::size_t k = 0; k < r.result.mui_trace.size(); ++k)
            tout << csv_num(sweep_value(r.sweep_index)) << ',' << r.trial << ',' << (k + 1) << ','
                 << csv_num(r.result.mui_trace[k]) << ',' << csv_num(safe_db(r.result.mui_trace[k]))
                 << '\n';
        }
      }
      traces.check();

      // Average curve per sweep value; traces that early-stopped are held at
      // their final value so every iteration averages over all trials.
      CsvFile summary(c.out_dir, kind + "_summary.csv", c, outcome.files_written);
      auto& sout = summary.stream();
      if (sinr) sout << "sweep_value,outer_iter,target,mean_sinr_db,n_trials\n";
      else sout << "sweep_value,outer_iter,mean_mui,mean_mui_db,n_trials\n";
      for (int si = 0; si < n_sweeps; ++si) {
        const auto ok = successful(si);
        if (ok.empty()) continue;
        std::size_t max_len = 0;
        for (const TrialRun* r : ok)
          max_len = std::max(max_len, sinr ? r->result.sinr_trace_db.size()
                                           : r->result.mui_trace.size());
        for (std::size_t k = 0; k < max_len; ++k) {
          if (sinr) {
            for (int q = 0; q < n_targets; ++q) {
              double acc = 0.0;
              for (const TrialRun* r : ok) {
                const auto& tr = r->result.sinr_trace_db;
                acc += tr[std::min(k, tr.size() - 1)][q];
              }
              sout << csv_num(sweep_value(si)) << ',' << (k + 1) << ',' << (q + 1) << ','
                   << csv_num(acc / ok.size()) << ',' << ok.size() << '\n';
            }
          } else {
            double acc = 0.0;
            for (const TrialRun* r : ok) {
              const auto& tr = r->result.mui_trace;
              acc += tr[std::min(k, tr.size() - 1)];
            }
            const double mean = acc / ok.size();
            sout << csv_num(sweep_value(si)) << ',' << (k + 1) << ',' << csv_num(mean) << ','
                 << csv_num(safe_db(mean)) << ',' << ok.size() << '\n';
          }
        }
      }
      summary.check();
      break;
    }

    case CampaignKind::rate_vs_epsilon:
    case CampaignKind::mui_vs_eta:
    case CampaignKind::sinr_vs_epsilon:
    case CampaignKind::similarity_regions: {
      CsvFile summary(c.out_dir, kind + "_summary.csv", c, outcome.files_written);
      auto& sout = summary.stream();
      if (c.kind == CampaignKind::rate_vs_epsilon)
        sout << "sweep_value,mean_sum_rate_bps_hz,n_trials\n";
      else if (c.kind == CampaignKind::mui_vs_eta)
        sout << "sweep_value,mean_mui,mean_mui_db,n_trials\n";
      else if (c.kind == CampaignKind::sinr_vs_epsilon)
        sout << "sweep_value,target,mean_sinr_db,n_trials\n";
      else
        sout << "sweep_value,mean_similarity,mean_similarity_sq,n_trials\n";
      for (int si = 0; si < n_sweeps; ++si) {
        const auto ok = successful(si);
        if (ok.empty()) continue;
        if (c.kind == CampaignKind::sinr_vs_epsilon) {
          for (int q = 0; q < n_targets; ++q) {
            double acc = 0.0;
            for (const TrialRun* r : ok) acc += r->metrics.sinr_per_target_db[q];
            sout << csv_num(sweep_value(si)) << ',' << (q + 1) << ',' << csv_num(acc / ok.size())
                 << ',' << ok.size() << '\n';
          }
          continue;
        }
        double acc = 0.0, acc2 = 0.0;
        for (const TrialRun* r : ok) {
          if (c.kind == CampaignKind::rate_vs_epsilon) acc += r->metrics.sum_rate_bps_hz;
          else if (c.kind == CampaignKind::mui_vs_eta) acc += r->metrics.mui_energy;
          else {
            acc += r->metrics.similarity;
            acc2 += r->metrics.similarity * r->metrics.similarity;
          }
        }
        const double mean = acc / ok.size();
        if (c.kind == CampaignKind::rate_vs_epsilon)
          sout << csv_num(sweep_value(si)) << ',' << csv_num(mean) << ',' << ok.size() << '\n';
        else if (c.kind == CampaignKind::mui_vs_eta)
          sout << csv_num(sweep_value(si)) << ',' << csv_num(mean) << ',' << csv_num(safe_db(mean))
               << ',' << ok.size() << '\n';
        else
          sout << csv_num(sweep_value(si)) << ',' << csv_num(mean) << ','
               << csv_num(acc2 / ok.size()) << ',' << ok.size() << '\n';
      }
      summary.check();
      break;
    }

    case CampaignKind::constellation_scatter: {
      CsvFile points(c.out_dir, kind + "_points.csv", c, outcome.files_written);
      auto& pout = points.stream();
      pout << "sweep_value,trial,user,sample,re,im\n";
      for (const TrialRun& r : runs) {
        if (r.failed) continue;
        const Eigen::MatrixXcd received = r.channel * r.result.waveform.mat;
        for (Eigen::Index p = 0; p < received.rows(); ++p)
          for (Eigen::Index l = 0; l < received.cols(); ++l)
            pout << csv_num(sweep_value(r.sweep_index)) << ',' << r.trial << ',' << p << ',' << l
                 << ',' << csv_num(received(p, l).real()) << ',' << csv_num(received(p, l).imag())
                 << '\n';
      }
      points.check();
      break;
    }

    case CampaignKind::beampattern: {
      CsvFile pat(c.out_dir, kind + "_pattern.csv", c, outcome.files_written);
      auto& pout = pat.stream();
      pout << "sweep_value,trial,angle_deg,gain_db\n";
      for (const TrialRun& r : runs) {
        if (r.failed) continue;
        for (const auto& [angle, gain] : r.pattern)
          pout << csv_num(sweep_value(r.sweep_index)) << ',' << r.trial << ',' << csv_num(angle)
               << ',' << csv_num(gain) << '\n';
      }
      pat.check();

      CsvFile summary(c.out_dir, kind + "_summary.csv", c, outcome.files_written);
      auto& sout = summary.stream();
      sout << "sweep_value,angle_deg,mean_gain_db,n_trials\n";
      for (int si = 0; si < n_sweeps; ++si) {
        const auto ok = successful(si);
        if (ok.empty()) continue;
        const std::size_t n_angles = ok.front()->pattern.size();
        for (std::size_t a = 0; a < n_angles; ++a) {
          double acc = 0.0;
          for (const TrialRun* r : ok) acc += r->pattern[a].second;
          sout << csv_num(sweep_value(si)) << ',' << csv_num(ok.front()->pattern[a].first) << ','
               << csv_num(acc / ok.size()) << ',' << ok.size() << '\n';
        }
      }
      summary.check();
      break;
    }

    case CampaignKind::papr_ccdf: {
      std::vector<double> thresholds = c.ccdf_thresholds_db;
      if (thresholds.empty())
        for (double t = 0.0; t <= 6.0 + 1e-9; t += 0.05) thresholds.push_back(t);
      CsvFile f(c.out_dir, kind + "_ccdf.csv", c, outcome.files_written);
      auto& out = f.stream();
      out << "sweep_value,threshold_db,prob,n_trials\n";
      for (int si = 0; si < n_sweeps; ++si) {
        const auto ok = successful(si);
        if (ok.empty()) continue;
        std::vector<double> samples;
        samples.reserve(ok.size());
        for (const TrialRun* r : ok) samples.push_back(r->metrics.papr_db);
        for (const auto& [t, p] : papr_ccdf(samples, thresholds))
          out << csv_num(sweep_value(si)) << ',' << csv_num(t) << ',' << csv_num(p) << ','
              << ok.size() << '\n';
      }
      f.check();
      break;
    }

    case CampaignKind::mui_vs_epsilon_box: {
      CsvFile f(c.out_dir, kind + "_box.csv", c, outcome.files_written);
      auto& out = f.stream();
      out << "sweep_value,median_mui_db,q1_mui_db,q3_mui_db,lo_whisker_mui_db,hi_whisker_mui_db,"
             "n_trials\n";
      for (int si = 0; si < n_sweeps; ++si) {
        const auto ok = successful(si);
        if (ok.empty()) continue;
        std::vector<double> mui_db;
        mui_db.reserve(ok.size());
        for (const TrialRun* r : ok) mui_db.push_back(safe_db(r->metrics.mui_energy));
        const BoxStats b = box_stats(std::move(mui_db));
        out << csv_num(sweep_value(si)) << ',' << csv_num(b.median) << ',' << csv_num(b.q1) << ','
            << csv_num(b.q3) << ',' << csv_num(b.lo) << ',' << csv_num(b.hi) << ',' << b.n << '\n';
      }
      f.check();
      break;
    }
  }

  return outcome;
}

}  // namespace drip
