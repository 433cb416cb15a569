// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 sigenv Project Contributors

#include "sigenv/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sigenv/errors.hpp"

namespace sigenv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform double in [0,1) from the top 53 bits of the generator output.
// std::uniform_real_distribution is implementation-defined, so roll our own
// to keep generated corpora byte-identical across toolchains.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(std::string(what) + ": non-finite value");
  }
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> samples, bool periodic)
    : samples_(std::move(samples)), periodic_(periodic) {
  if (samples_.size() < 2) throw Error("TimeSeries: need at least 2 samples");
  require_finite(samples_, "TimeSeries");
}

FourierCoeffs::FourierCoeffs(double a0, std::vector<double> alpha,
                             std::vector<double> beta)
    : a0_(a0), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.size() != beta_.size())
    throw Error("FourierCoeffs: alpha/beta size mismatch");
  if (!std::isfinite(a0_)) throw Error("FourierCoeffs: non-finite a0");
  require_finite(alpha_, "FourierCoeffs");
  require_finite(beta_, "FourierCoeffs");
}

FourierCoeffs FourierCoeffs::zero(int bandwidth) {
  if (bandwidth < 0) throw Error("FourierCoeffs: negative bandwidth");
  return FourierCoeffs(0.0, std::vector<double>(bandwidth, 0.0),
                       std::vector<double>(bandwidth, 0.0));
}

FourierCoeffs FourierCoeffs::from_complex(std::span<const std::complex<double>> c,
                                          double tol) {
  if (c.empty() || c.size() % 2 == 0)
    throw Error("from_complex: need an odd-length array indexed -L..L");
  const int L = static_cast<int>(c.size() / 2);
  for (int k = 0; k <= L; ++k) {
    const std::complex<double> mismatch = c[L - k] - std::conj(c[L + k]);
    if (std::abs(mismatch) > tol)
      throw NonHermitianCoefficients(
          "from_complex: c[-k] != conj(c[k]) at k=" + std::to_string(k));
  }
  std::vector<double> alpha(L), beta(L);
  for (int k = 1; k <= L; ++k) {
    alpha[k - 1] = 2.0 * c[L + k].real();
    beta[k - 1] = -2.0 * c[L + k].imag();
  }
  return FourierCoeffs(c[L].real(), std::move(alpha), std::move(beta));
}

FourierCoeffs FourierCoeffs::from_packed(std::span<const double> x) {
  if (x.empty() || x.size() % 2 == 0)
    throw Error("from_packed: need odd length 2L+1");
  const std::size_t L = x.size() / 2;
  std::vector<double> alpha(x.begin() + 1, x.begin() + 1 + L);
  std::vector<double> beta(x.begin() + 1 + L, x.end());
  return FourierCoeffs(x[0], std::move(alpha), std::move(beta));
}

std::complex<double> FourierCoeffs::c(int k) const {
  const int L = bandwidth();
  if (k < -L || k > L) return {0.0, 0.0};
  if (k == 0) return {a0_, 0.0};
  const int a = std::abs(k);
  const std::complex<double> pos(0.5 * alpha_[a - 1], -0.5 * beta_[a - 1]);
  return k > 0 ? pos : std::conj(pos);
}

std::vector<std::complex<double>> FourierCoeffs::to_complex() const {
  const int L = bandwidth();
  std::vector<std::complex<double>> out(2 * L + 1);
  for (int k = -L; k <= L; ++k) out[k + L] = c(k);
  return out;
}

std::vector<double> FourierCoeffs::packed() const {
  const int L = bandwidth();
  std::vector<double> x(2 * L + 1);
  x[0] = a0_;
  std::copy(alpha_.begin(), alpha_.end(), x.begin() + 1);
  std::copy(beta_.begin(), beta_.end(), x.begin() + 1 + L);
  return x;
}

double FourierCoeffs::eval(double t) const {
  double y = a0_;
  for (int k = 1; k <= bandwidth(); ++k) {
    const double w = kTwoPi * k * t;
    y += alpha_[k - 1] * std::cos(w) + beta_[k - 1] * std::sin(w);
  }
  return y;
}

FourierCoeffs FourierCoeffs::operator+(const FourierCoeffs& other) const {
  if (bandwidth() != other.bandwidth())
    throw MixedBandwidths("FourierCoeffs: bandwidth mismatch in sum");
  std::vector<double> alpha(alpha_.size()), beta(beta_.size());
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    alpha[i] = alpha_[i] + other.alpha_[i];
    beta[i] = beta_[i] + other.beta_[i];
  }
  return FourierCoeffs(a0_ + other.a0_, std::move(alpha), std::move(beta));
}

FourierCoeffs FourierCoeffs::operator-() const {
  std::vector<double> alpha(alpha_.size()), beta(beta_.size());
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    alpha[i] = -alpha_[i];
    beta[i] = -beta_[i];
  }
  return FourierCoeffs(-a0_, std::move(alpha), std::move(beta));
}

FourierCoeffs FourierCoeffs::with_a0_shift(double delta) const {
  return FourierCoeffs(a0_ + delta, alpha_, beta_);
}

FourierCoeffs analyze(const TimeSeries& ts, int L) {
  if (L < 0) throw Error("analyze: negative bandwidth");
  const std::size_t n = ts.size();
  if (static_cast<std::size_t>(2 * L + 1) > n)
    throw BandwidthExceedsSamples("analyze: 2L+1 = " +
                                  std::to_string(2 * L + 1) + " > N = " +
                                  std::to_string(n));
  if (!ts.periodic()) throw Error("analyze: series not periodized");

  double a0 = 0.0;
  for (std::size_t i = 0; i < n; ++i) a0 += ts[i];
  a0 /= static_cast<double>(n);

  std::vector<double> alpha(L, 0.0), beta(L, 0.0);
  for (int k = 1; k <= L; ++k) {
    double sc = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = kTwoPi * k * static_cast<double>(i) / static_cast<double>(n);
      sc += ts[i] * std::cos(w);
      ss += ts[i] * std::sin(w);
    }
    alpha[k - 1] = 2.0 * sc / static_cast<double>(n);
    beta[k - 1] = 2.0 * ss / static_cast<double>(n);
  }
  return FourierCoeffs(a0, std::move(alpha), std::move(beta));
}

TimeSeries synthesize(const FourierCoeffs& fc, int grid_size) {
  const int L = fc.bandwidth();
  if (grid_size < 2 * L + 1)
    throw BandwidthExceedsSamples("synthesize: grid_size " +
                                  std::to_string(grid_size) + " < 2L+1 = " +
                                  std::to_string(2 * L + 1));
  std::vector<double> y(grid_size);
  for (int i = 0; i < grid_size; ++i)
    y[i] = fc.eval(static_cast<double>(i) / static_cast<double>(grid_size));
  return TimeSeries(std::move(y), true);
}

TimeSeries project(const TimeSeries& ts, int L) {
  return synthesize(analyze(ts, L), static_cast<int>(ts.size()));
}

int max_bandwidth(std::size_t n_samples) {
  return static_cast<int>((n_samples - 1) / 2);
}

TimeSeries resample(const TimeSeries& ts, int grid_size) {
  if (grid_size == static_cast<int>(ts.size()))
    return TimeSeries(std::vector<double>(ts.samples().begin(), ts.samples().end()),
                      ts.periodic());
  return synthesize(analyze(ts, max_bandwidth(ts.size())), grid_size);
}

FourierCoeffs generate_smooth_coeffs(const SmoothSignalSpec& spec) {
  if (spec.r <= 1.0)
    throw InvalidDecay("generate_smooth: decay exponent r must exceed 1");
  if (spec.Kmax < 1) throw Error("generate_smooth: Kmax must be >= 1");
  if (spec.C <= 0.0) throw Error("generate_smooth: C must be positive");

  std::mt19937_64 rng(spec.seed);
  std::vector<double> alpha(spec.Kmax), beta(spec.Kmax);
  for (int k = 1; k <= spec.Kmax; ++k) {
    const double modulus = spec.C / std::pow(static_cast<double>(k), spec.r);
    const double theta = kTwoPi * uniform_unit(rng);
    // c_k = modulus * exp(i theta) -> alpha = 2 Re c_k, beta = -2 Im c_k.
    alpha[k - 1] = 2.0 * modulus * std::cos(theta);
    beta[k - 1] = -2.0 * modulus * std::sin(theta);
  }
  return FourierCoeffs(0.0, std::move(alpha), std::move(beta));
}

TimeSeries generate_smooth(const SmoothSignalSpec& spec, int grid_size) {
  if (grid_size == 0) grid_size = std::max(1024, 8 * spec.Kmax);
  return synthesize(generate_smooth_coeffs(spec), grid_size);
}

Norms norms(const TimeSeries& ts) {
  const std::size_t n = ts.size();
  Norms out;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = ts[i];
    out.l1 += std::abs(v);
    out.l2sq += v * v;
    out.linf = std::max(out.linf, std::abs(v));
  }
  out.l1 /= static_cast<double>(n);
  out.l2sq /= static_cast<double>(n);
  return out;
}

namespace {
TimeSeries zip(const TimeSeries& a, const TimeSeries& b, bool sub) {
  if (a.size() != b.size()) throw Error("TimeSeries: grid size mismatch");
  std::vector<double> y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    y[i] = sub ? a[i] - b[i] : a[i] + b[i];
  return TimeSeries(std::move(y), a.periodic() && b.periodic());
}
}  // namespace

TimeSeries add(const TimeSeries& a, const TimeSeries& b) { return zip(a, b, false); }

TimeSeries subtract(const TimeSeries& a, const TimeSeries& b) {
  return zip(a, b, true);
}

TimeSeries negate(const TimeSeries& a) {
  std::vector<double> y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = -a[i];
  return TimeSeries(std::move(y), a.periodic());
}

}  // namespace sigenv
