#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <vector>

#include "drip/rng.hpp"
#include "drip/scenario.hpp"

namespace drip {

/// A space-time transmit signal, n_tx x n_samples. The vectorized view is the
/// column-major stacking, matching the I_L (x) Pi lift ordering used
/// throughout.
struct ComplexWaveform {
  Eigen::MatrixXcd mat;

  Eigen::VectorXcd vec() const {
    return Eigen::Map<const Eigen::VectorXcd>(mat.data(), mat.size());
  }

  static ComplexWaveform from_vec(const Eigen::VectorXcd& x, int n_tx, int n_samples);
};

/// One communication draw: channel, scaled symbol block and the unit-norm
/// zero-forcing reference the waveform objective is pulled towards.
///
/// The raw constellation block is rescaled by symbol_scale so that the
/// vectorized zero-forcing solution has unit norm; `symbols` already carries
/// that scale and is the block every interference/rate metric is evaluated
/// against.
struct CommBlock {
  Eigen::MatrixXcd channel;  // H, n_users x n_tx
  Eigen::MatrixXcd symbols;  // scaled symbols, n_users x n_samples
  double symbol_scale = 1.0;
  ComplexWaveform zf_reference;  // unit-norm x_comm
};

/// Unit-norm linear-FM reference chirp: sample n of the vectorized waveform is
/// exp(j*pi*n^2/N)/sqrt(N) with N = n_tx*n_samples, unvectorized column-major.
/// Constant modulus, so its PAPR is exactly 1.
ComplexWaveform lfm_chirp(const ScenarioConfig& cfg);

/// i.i.d. CN(0,1) Rayleigh channel, n_users x n_tx.
Eigen::MatrixXcd draw_channel(const ScenarioConfig& cfg, Rng& rng);

/// Uniform i.i.d. symbols from the unit-average-energy constellation,
/// n_users x n_samples.
Eigen::MatrixXcd draw_symbols(const ScenarioConfig& cfg, Rng& rng);

/// Unit-average-energy constellation point set.
std::vector<std::complex<double>> constellation_points(Constellation c);

/// Builds the zero-forcing reference H^H (H H^H)^{-1} S, rescaled to unit
/// vectorized norm. Throws if H is numerically rank-deficient.
CommBlock zf_reference(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& symbols);

/// Convenience: channel + symbols + ZF reference for one seeded trial.
CommBlock draw_comm_block(const ScenarioConfig& cfg, Rng& rng);

/// CSV export, columns: sample_index, re, im.
void write_waveform_csv(const Eigen::VectorXcd& x, std::ostream& out);

}  // namespace drip
