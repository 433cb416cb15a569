// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 sigenv Project Contributors

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sigenv {

/// Uniformly sampled real signal on the unit interval.
///
/// Sample n sits at t = n/N for n = 0..N-1; the grid is periodic, so the
/// point t = 1 is identified with t = 0. Instances are immutable after
/// construction and safe to share across threads.
class TimeSeries {
 public:
  /// `periodic` asserts that the samples come from a signal with
  /// f(0) == f(1) (either by nature or after ramp periodization).
  explicit TimeSeries(std::vector<double> samples, bool periodic = true);

  std::size_t size() const { return samples_.size(); }
  double operator[](std::size_t n) const { return samples_[n]; }
  std::span<const double> samples() const { return samples_; }
  double time_at(std::size_t n) const {
    return static_cast<double>(n) / static_cast<double>(samples_.size());
  }
  bool periodic() const { return periodic_; }

 private:
  std::vector<double> samples_;
  bool periodic_;
};

/// Degree-L trigonometric representation of a real signal.
///
/// Canonical storage is the real basis (a0, alpha_k, beta_k):
///
///   f(t) = a0 + sum_{k=1..L} alpha_k cos(2 pi k t) + beta_k sin(2 pi k t)
///
/// The complex view c(k), |k| <= L, satisfies c(k) = (alpha_k - i beta_k)/2
/// and c(-k) = conj(c(k)), so Hermitian symmetry holds by construction for
/// every instance built from real data.
class FourierCoeffs {
 public:
  FourierCoeffs(double a0, std::vector<double> alpha, std::vector<double> beta);

  static FourierCoeffs zero(int bandwidth);

  /// Builds from complex coefficients indexed k = -L..L (array index k+L).
  /// Throws NonHermitianCoefficients if |c[-k] - conj(c[k])| exceeds `tol`
  /// anywhere; the residual imaginary part below `tol` is discarded.
  static FourierCoeffs from_complex(std::span<const std::complex<double>> c,
                                    double tol = 1e-10);

  /// Builds from the packed solver layout (a0, alpha_1..L, beta_1..L).
  static FourierCoeffs from_packed(std::span<const double> x);

  int bandwidth() const { return static_cast<int>(alpha_.size()); }
  double a0() const { return a0_; }
  std::span<const double> alpha() const { return alpha_; }
  std::span<const double> beta() const { return beta_; }

  /// Complex coefficient c(k) for |k| <= bandwidth().
  std::complex<double> c(int k) const;

  /// Complex array indexed k = -L..L.
  std::vector<std::complex<double>> to_complex() const;

  /// Packed solver layout (a0, alpha_1..L, beta_1..L), length 2L+1.
  std::vector<double> packed() const;

  /// Evaluates the trigonometric polynomial at time t.
  double eval(double t) const;

  FourierCoeffs operator+(const FourierCoeffs& other) const;
  FourierCoeffs operator-() const;

  /// Returns a copy with the constant term shifted by `delta`.
  FourierCoeffs with_a0_shift(double delta) const;

 private:
  double a0_;
  std::vector<double> alpha_;
  std::vector<double> beta_;
};

/// Synthetic p-smooth signal description: harmonic k has modulus exactly
/// C / k^r for 1 <= k <= Kmax with a seeded random phase, zero mean.
struct SmoothSignalSpec {
  double C = 1.0;
  double r = 2.0;
  int Kmax = 1;
  std::uint64_t seed = 0;
};

struct Norms {
  double l1 = 0.0;
  double l2sq = 0.0;
  double linf = 0.0;
};

/// Fourier coefficients up to harmonic L by DFT-style quadrature on the
/// sample grid: c[k] = (1/N) sum_n samples[n] exp(-j 2 pi k n / N).
/// Throws BandwidthExceedsSamples if 2L+1 > N.
FourierCoeffs analyze(const TimeSeries& ts, int L);

/// Evaluates the trigonometric polynomial on a uniform grid of `grid_size`
/// points. Requires grid_size >= 2L+1.
TimeSeries synthesize(const FourierCoeffs& fc, int grid_size);

/// Orthogonal projection onto the span of harmonics |k| <= L, i.e.
/// synthesize(analyze(ts, L), N).
TimeSeries project(const TimeSeries& ts, int L);

/// Bandlimited resampling onto a grid of `grid_size` points via the
/// largest representable bandwidth of `ts` (drops the Nyquist bin for
/// even N). Exact for signals whose content fits below that bandwidth.
TimeSeries resample(const TimeSeries& ts, int grid_size);

/// Largest L with 2L+1 <= N.
int max_bandwidth(std::size_t n_samples);

/// Coefficients of a generated smooth signal (bandwidth Kmax).
FourierCoeffs generate_smooth_coeffs(const SmoothSignalSpec& spec);

/// Samples a generated smooth signal. grid_size == 0 picks
/// max(1024, 8 * Kmax). Deterministic in the seed.
TimeSeries generate_smooth(const SmoothSignalSpec& spec, int grid_size = 0);

/// L1, squared-L2 and sup norms by periodic-rectangle quadrature and the
/// grid maximum.
Norms norms(const TimeSeries& ts);

TimeSeries add(const TimeSeries& a, const TimeSeries& b);
TimeSeries subtract(const TimeSeries& a, const TimeSeries& b);
TimeSeries negate(const TimeSeries& a);

}  // namespace sigenv
