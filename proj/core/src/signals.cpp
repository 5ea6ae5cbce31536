#include "drip/signals.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "drip/csv.hpp"

namespace drip {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ComplexWaveform ComplexWaveform::from_vec(const Eigen::VectorXcd& x, int n_tx, int n_samples) {
  if (x.size() != static_cast<Eigen::Index>(n_tx) * n_samples)
    throw std::invalid_argument("ComplexWaveform: vector length does not match n_tx * n_samples");
  ComplexWaveform w;
  w.mat = Eigen::Map<const Eigen::MatrixXcd>(x.data(), n_tx, n_samples);
  return w;
}

ComplexWaveform lfm_chirp(const ScenarioConfig& cfg) {
  const int n = cfg.dim();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXcd x(n);
  for (int k = 0; k < n; ++k) {
    const double phase = kPi * static_cast<double>(k) * static_cast<double>(k) / n;
    x(k) = std::polar(amp, phase);
  }
  return ComplexWaveform::from_vec(x, cfg.n_tx, cfg.n_samples);
}

Eigen::MatrixXcd draw_channel(const ScenarioConfig& cfg, Rng& rng) {
  Eigen::MatrixXcd h(cfg.n_users, cfg.n_tx);
  // Row-major fill order so the draw sequence is part of the file contract.
  for (int p = 0; p < cfg.n_users; ++p)
    for (int t = 0; t < cfg.n_tx; ++t) h(p, t) = rng.cgaussian();
  return h;
}

std::vector<std::complex<double>> constellation_points(Constellation c) {
  std::vector<std::complex<double>> pts;
  switch (c) {
    case Constellation::QPSK: {
      const double a = 1.0 / std::sqrt(2.0);
      pts = {{a, a}, {a, -a}, {-a, a}, {-a, -a}};
      break;
    }
    case Constellation::PSK16:
    case Constellation::PSK64: {
      const int m = (c == Constellation::PSK16) ? 16 : 64;
      pts.reserve(m);
      for (int k = 0; k < m; ++k) pts.push_back(std::polar(1.0, 2.0 * kPi * k / m));
      break;
    }
    case Constellation::QAM16:
    case Constellation::QAM64: {
      const int side = (c == Constellation::QAM16) ? 4 : 8;
      // Average energy of the +/-1, +/-3, ... grid: 10 for 16-QAM, 42 for 64-QAM.
      double energy = 0.0;
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
          const double re = 2.0 * i - (side - 1);
          const double im = 2.0 * j - (side - 1);
          energy += re * re + im * im;
        }
      const double scale = 1.0 / std::sqrt(energy / (side * side));
      pts.reserve(side * side);
      for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
          pts.emplace_back(scale * (2.0 * i - (side - 1)), scale * (2.0 * j - (side - 1)));
      break;
    }
  }
  if (pts.empty()) throw std::invalid_argument("constellation_points: unsupported constellation");
  return pts;
}

Eigen::MatrixXcd draw_symbols(const ScenarioConfig& cfg, Rng& rng) {
  const auto pts = constellation_points(cfg.constellation);
  const int m = static_cast<int>(pts.size());
  Eigen::MatrixXcd s(cfg.n_users, cfg.n_samples);
  for (int p = 0; p < cfg.n_users; ++p)
    for (int l = 0; l < cfg.n_samples; ++l) s(p, l) = pts[rng.uniform_int(m)];
  return s;
}

CommBlock zf_reference(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& symbols) {
  if (channel.rows() != symbols.rows())
    throw std::invalid_argument("zf_reference: channel and symbol row counts differ");
  const Eigen::MatrixXcd gram = channel * channel.adjoint();  // P x P Hermitian PD a.s.

  // Rank check via the Gram spectrum; cond(H)^2 = cond(gram).
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("zf_reference: Gram eigendecomposition failed");
  const double ev_min = es.eigenvalues().minCoeff();
  const double ev_max = es.eigenvalues().maxCoeff();
  if (!(ev_min > 0.0) || std::sqrt(ev_max / ev_min) > 1e12)
    throw std::runtime_error("zf_reference: channel is numerically rank-deficient");

  const Eigen::MatrixXcd unscaled = channel.adjoint() * gram.ldlt().solve(symbols);
  const double norm = unscaled.norm();
  if (!(norm > 0.0)) throw std::runtime_error("zf_reference: zero zero-forcing solution");

  CommBlock block;
  block.channel = channel;
  block.symbol_scale = 1.0 / norm;
  block.symbols = symbols * block.symbol_scale;
  block.zf_reference.mat = unscaled * block.symbol_scale;
  return block;
}

CommBlock draw_comm_block(const ScenarioConfig& cfg, Rng& rng) {
  const Eigen::MatrixXcd h = draw_channel(cfg, rng);
  const Eigen::MatrixXcd s = draw_symbols(cfg, rng);
  return zf_reference(h, s);
}

void write_waveform_csv(const Eigen::VectorXcd& x, std::ostream& out) {
  out << "sample_index,re,im\n";
  for (Eigen::Index k = 0; k < x.size(); ++k)
    out << k << ',' << csv_num(x(k).real()) << ',' << csv_num(x(k).imag()) << '\n';
}

}  // namespace drip
