#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "drip/metrics.hpp"
#include "drip/qcqp.hpp"
#include "drip/realify.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace drip;

TEST_CASE("papr basics") {
  Eigen::VectorXcd flat = Eigen::VectorXcd::Constant(6, std::complex<double>(0.3, -0.4));
  CHECK(papr(flat) == doctest::Approx(1.0));
  CHECK(papr_db(flat) == doctest::Approx(0.0));

  Eigen::VectorXcd spike = Eigen::VectorXcd::Zero(4);
  spike(0) = 1.0;
  CHECK(papr(spike) == doctest::Approx(4.0));

  CHECK_THROWS(papr(Eigen::VectorXcd::Zero(3)));
}

TEST_CASE("papr equals the per-sample cap form on the unit sphere") {
  Rng rng(17);
  const int n = 84;
  const Eigen::VectorXcd x = testing::random_unit_vector(n, rng);
  double max_cap_form = 0.0;
  for (int p = 0; p < n; ++p) max_cap_form = std::max(max_cap_form, n * std::norm(x(p)));
  CHECK(papr(x) == doctest::Approx(max_cap_form).epsilon(1e-12));
}

TEST_CASE("papr is scale invariant and at least one") {
  Rng rng(19);
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::VectorXcd x = testing::random_complex_vector(16, rng);
    const double base = papr(x);
    CHECK(base >= 1.0 - 1e-14);
    const std::complex<double> c(rng.gaussian(), rng.gaussian());
    if (std::abs(c) > 1e-6) CHECK(papr(c * x) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("mui energy matches brute force and closed forms") {
  ScenarioConfig cfg = testing::paper_scenario();
  Rng rng(23);
  const Eigen::MatrixXcd h = draw_channel(cfg, rng);
  const Eigen::MatrixXcd s = draw_symbols(cfg, rng);

  SUBCASE("zero waveform leaves the symbol energy") {
    const Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(cfg.n_tx, cfg.n_samples);
    CHECK(mui_energy(h, x, s) == doctest::Approx(s.squaredNorm()));
  }

  SUBCASE("unscaled zero-forcing solution nulls the residual") {
    const CommBlock block = zf_reference(h, s);
    const Eigen::MatrixXcd unscaled = block.zf_reference.mat / block.symbol_scale;
    CHECK(mui_energy(h, unscaled, s) < 1e-16);
  }

  SUBCASE("chirp waveform matches elementwise summation") {
    const Eigen::MatrixXcd x = lfm_chirp(cfg).mat;
    double brute = 0.0;
    const Eigen::MatrixXcd residual = h * x - s;
    for (Eigen::Index i = 0; i < residual.rows(); ++i)
      for (Eigen::Index j = 0; j < residual.cols(); ++j) brute += std::norm(residual(i, j));
    CHECK(mui_energy(h, x, s) == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("radar sinr") {
  ScenarioConfig cfg = testing::small_scenario();
  Rng rng(29);
  const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);

  SUBCASE("single target, no interferers: noise-only denominator") {
    ScenarioConfig solo = cfg;
    solo.target_angles_deg = {10.0};
    solo.target_powers = {1.0};
    solo.sinr_floors_db = {6.0};
    solo.interferer_angles_deg.clear();
    solo.interferer_powers.clear();

    BeamformerBank bank;
    bank.vectors.push_back(testing::random_complex_vector(solo.n_rx * solo.n_samples, rng));
    const LiftedEchoes e = lifted_echoes(x, solo);
    const double expected = std::norm(bank[0].dot(e.targets[0])) /
                            (solo.radar_noise_power * bank[0].squaredNorm());
    CHECK(radar_sinr(x, bank, 0, solo) == doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("invariant to beamformer scaling") {
    BeamformerBank bank;
    bank.vectors.push_back(testing::random_complex_vector(cfg.n_rx * cfg.n_samples, rng));
    bank.vectors.push_back(testing::random_complex_vector(cfg.n_rx * cfg.n_samples, rng));
    const double base = radar_sinr(x, bank, 0, cfg);
    bank.vectors[0] *= std::complex<double>(-2.5, 1.75);
    CHECK(radar_sinr(x, bank, 0, cfg) == doctest::Approx(base).epsilon(1e-12));
  }

  SUBCASE("equals the quotient of independently built stacked-lift matrices") {
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::VectorXcd xr = testing::random_unit_vector(cfg.dim(), rng);
      BeamformerBank bank;
      bank.vectors.push_back(testing::random_complex_vector(cfg.n_rx * cfg.n_samples, rng));
      bank.vectors.push_back(testing::random_complex_vector(cfg.n_rx * cfg.n_samples, rng));
      for (int q = 0; q < 2; ++q) {
        const QuotientMatrices qm = build_quotient_matrices(xr, q, cfg);
        const double quotient = rayleigh_quotient(qm, bank[q]);
        CHECK(radar_sinr(xr, bank, q, cfg) == doctest::Approx(quotient).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("sum rate closed forms") {
  SUBCASE("zero interference") {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(4, 4);
    Rng rng(31);
    Eigen::MatrixXcd s(4, 7);
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = std::polar(1.0, 2.0 * M_PI * rng.uniform());
    const Eigen::MatrixXcd x = s;  // h x == s exactly, unit symbol energy per user
    CHECK(sum_rate(h, x, s, 0.01) == doctest::Approx(4.0 * std::log2(1.0 + 100.0)));
  }

  SUBCASE("zero waveform stays below user count for unit-energy symbols") {
    ScenarioConfig cfg = testing::paper_scenario();
    Rng rng(37);
    const Eigen::MatrixXcd h = draw_channel(cfg, rng);
    const Eigen::MatrixXcd s = draw_symbols(cfg, rng);
    const Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(cfg.n_tx, cfg.n_samples);
    const double rate = sum_rate(h, x, s, cfg.comm_noise_power);
    CHECK(rate < cfg.n_users);
    CHECK(rate > 0.0);
  }

  SUBCASE("matches per-user brute force") {
    ScenarioConfig cfg = testing::paper_scenario();
    Rng rng(41);
    const Eigen::MatrixXcd h = draw_channel(cfg, rng);
    const Eigen::MatrixXcd s = draw_symbols(cfg, rng);
    const Eigen::MatrixXcd x = lfm_chirp(cfg).mat;
    double expected = 0.0;
    for (int p = 0; p < cfg.n_users; ++p) {
      double sig = 0.0, itf = 0.0;
      for (int l = 0; l < cfg.n_samples; ++l) {
        sig += std::norm(s(p, l));
        std::complex<double> res = -s(p, l);
        for (int t = 0; t < cfg.n_tx; ++t) res += h(p, t) * x(t, l);
        itf += std::norm(res);
      }
      sig /= cfg.n_samples;
      itf /= cfg.n_samples;
      expected += std::log2(1.0 + sig / (itf + cfg.comm_noise_power));
    }
    CHECK(sum_rate(h, x, s, cfg.comm_noise_power) == doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("monotone non-increasing in added interference") {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Ones(2, 3);
    double prev = std::numeric_limits<double>::infinity();
    for (double gap : {0.0, 0.1, 0.3, 0.8, 2.0}) {
      const Eigen::MatrixXcd x = (1.0 + gap) * s;
      const double rate = sum_rate(h, x, s, 0.01);
      CHECK(rate <= prev + 1e-12);
      prev = rate;
    }
  }
}

TEST_CASE("papr ccdf") {
  std::vector<double> samples(100, 2.0);
  const auto ccdf = papr_ccdf(samples, {1.0, 2.0, 3.0});
  CHECK(ccdf[0].second == doctest::Approx(1.0));
  CHECK(ccdf[1].second == doctest::Approx(0.0));  // strictly greater
  CHECK(ccdf[2].second == doctest::Approx(0.0));

  Rng rng(43);
  std::vector<double> uniform(1000);
  for (double& v : uniform) v = rng.uniform();
  const auto u = papr_ccdf(uniform, {0.5});
  CHECK(u[0].second == doctest::Approx(0.5).epsilon(0.1));

  // Non-increasing and within [0, 1] on a fine grid.
  std::vector<double> grid;
  for (double t = 0.0; t <= 1.0; t += 0.01) grid.push_back(t);
  double prev = 1.0;
  for (const auto& [t, p] : papr_ccdf(uniform, grid)) {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    CHECK(p <= prev + 1e-15);
    prev = p;
  }
}

TEST_CASE("empirical similarity") {
  Rng rng(47);
  const Eigen::VectorXcd x0 = testing::random_unit_vector(10, rng);
  CHECK(empirical_similarity(x0, x0) == 0.0);
  CHECK(empirical_similarity(-x0, x0) == doctest::Approx(2.0));
  CHECK_THROWS(empirical_similarity(x0, testing::random_unit_vector(9, rng)));
}

TEST_CASE("beampattern grid output is finite everywhere") {
  ScenarioConfig cfg = testing::small_scenario();
  Rng rng(53);
  const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);
  std::vector<double> grid;
  for (double a = -90.0; a <= 90.0 + 1e-9; a += 0.5) grid.push_back(a);
  const auto pattern = beampattern(x, cfg, grid);
  REQUIRE(pattern.size() == 361);
  for (const auto& [angle, gain] : pattern) CHECK(std::isfinite(gain));
}

TEST_CASE("beampattern at a target angle bounds that target's best sinr") {
  ScenarioConfig cfg = testing::small_scenario();
  cfg.target_powers = {1.0, 1.0};
  Rng rng(59);
  const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);
  const auto pattern = beampattern(x, cfg, {10.0, 42.0});
  // Without the other target's echo in the interference matrix the scan can
  // only do better than the constrained combiner.
  CHECK(pattern[0].second >= linear_to_db(oracle::optimal_sinr(cfg, x, 0)) - 1e-9);
  CHECK(pattern[1].second >= linear_to_db(oracle::optimal_sinr(cfg, x, 1)) - 1e-9);

  // With a single target the two notions coincide exactly.
  ScenarioConfig solo = cfg;
  solo.target_angles_deg = {10.0};
  solo.target_powers = {1.0};
  solo.sinr_floors_db = {6.0};
  const auto solo_pattern = beampattern(x, solo, {10.0});
  CHECK(solo_pattern[0].second ==
        doctest::Approx(linear_to_db(oracle::optimal_sinr(solo, x, 0))).epsilon(1e-8));
}
