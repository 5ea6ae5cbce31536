#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "drip/errors.hpp"
#include "drip/scenario.hpp"
#include "support.hpp"

using namespace drip;

namespace {

std::string write_temp(const std::string& text) {
  static int counter = 0;
  const auto path =
      std::filesystem::temp_directory_path() / ("drip_scenario_" + std::to_string(counter++) + ".cfg");
  std::ofstream f(path);
  f << text;
  return path.string();
}

}  // namespace

TEST_CASE("db_to_linear") {
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
  CHECK(db_to_linear(2.5) == doctest::Approx(1.7782794100389228).epsilon(1e-12));

  // Strictly increasing and multiplicative over addition.
  Rng rng(7);
  double prev = db_to_linear(-30.0);
  for (double v = -29.5; v <= 30.0; v += 0.5) {
    const double cur = db_to_linear(v);
    CHECK(cur > prev);
    prev = cur;
  }
  for (int k = 0; k < 200; ++k) {
    const double a = 40.0 * (rng.uniform() - 0.5);
    const double b = 40.0 * (rng.uniform() - 0.5);
    const double lhs = db_to_linear(a + b);
    const double rhs = db_to_linear(a) * db_to_linear(b);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  }
}

TEST_CASE("parse minimal file with defaults") {
  const std::string path = write_temp(
      "# minimal scenario\n"
      "n_tx = 12\n"
      "n_rx = 7\n"
      "n_samples = 7\n"
      "n_users = 4\n"
      "target_angles = 10, 30\n"
      "interferer_angles = -50\n");
  const ScenarioConfig cfg = load_scenario(path);
  CHECK(cfg.n_tx == 12);
  CHECK(cfg.n_rx == 7);
  CHECK(cfg.num_targets() == 2);
  CHECK(cfg.num_interferers() == 1);
  CHECK(cfg.target_powers == std::vector<double>{1.0, 1.0});
  CHECK(cfg.sinr_floors_db.size() == 2);
  CHECK(cfg.tx_spacing_wavelengths == doctest::Approx(0.5));
}

TEST_CASE("rank condition rejected") {
  const std::string path = write_temp(
      "n_tx = 4\nn_rx = 2\nn_samples = 2\nn_users = 5\ntarget_angles = 10\n");
  CHECK_THROWS_WITH_AS(load_scenario(path), doctest::Contains("n_users exceeds n_tx"),
                       ConfigError);
}

TEST_CASE("eta below unit PAPR rejected") {
  const std::string path = write_temp(
      "n_tx = 4\nn_rx = 2\nn_samples = 2\nn_users = 2\ntarget_angles = 10\neta_db = -1\n");
  CHECK_THROWS_WITH_AS(load_scenario(path), doctest::Contains("eta below unit PAPR"),
                       ConfigError);
}

TEST_CASE("unknown key rejected") {
  const std::string path = write_temp("n_tx = 4\nbogus_key = 3\n");
  CHECK_THROWS_WITH_AS(load_scenario(path), doctest::Contains("unknown key"), ConfigError);
}

TEST_CASE("mismatched list lengths rejected") {
  CHECK_THROWS_AS(parse_scenario("n_tx = 4\nn_rx = 2\nn_samples = 2\nn_users = 2\n"
                                 "target_angles = 10, 30\ntarget_powers = 1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_scenario("n_tx = 4\nn_rx = 2\nn_samples = 2\nn_users = 2\n"
                                 "target_angles = 95\n"),
                  ConfigError);
}

TEST_CASE("save/load round trip is field-equal") {
  ScenarioConfig cfg = testing::paper_scenario();
  cfg.epsilon = 1.2345678901234567;
  cfg.eta_db = 2.5;
  cfg.rng_seed = 987654321;
  cfg.constellation = Constellation::PSK64;

  const auto path = std::filesystem::temp_directory_path() / "drip_roundtrip.cfg";
  save_scenario(cfg, path.string());
  const ScenarioConfig back = load_scenario(path.string());
  CHECK(back == cfg);

  // And a second hop reproduces the identical file.
  const auto path2 = std::filesystem::temp_directory_path() / "drip_roundtrip2.cfg";
  save_scenario(back, path2.string());
  std::ifstream a(path), b(path2);
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
}

TEST_CASE("angle accessors convert to radians") {
  const ScenarioConfig cfg = testing::paper_scenario();
  CHECK(cfg.target_angle_rad(0) == doctest::Approx(10.0 * M_PI / 180.0));
  CHECK(cfg.interferer_angle_rad(0) == doctest::Approx(-50.0 * M_PI / 180.0));
  CHECK(cfg.eta_linear() == doctest::Approx(db_to_linear(2.5)));
}

TEST_CASE("missing file is an io error") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.cfg"), IoError);
}
