// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 sigenv Project Contributors

#include "sigenv/signal.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "sigenv/errors.hpp"

using namespace sigenv;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

TimeSeries sample(const std::function<double(double)>& f, int n) {
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) y[i] = f(static_cast<double>(i) / n);
  return TimeSeries(std::move(y));
}

double max_abs_diff(const TimeSeries& a, const TimeSeries& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_SUITE("signal") {

TEST_CASE("analyze: constant signal is DC only") {
  const TimeSeries ts(std::vector<double>(32, 3.0));
  const FourierCoeffs fc = analyze(ts, 2);
  CHECK(fc.a0() == doctest::Approx(3.0).epsilon(1e-14));
  for (int k = 1; k <= 2; ++k) {
    CHECK(std::abs(fc.c(k)) < 1e-13);
    CHECK(std::abs(fc.c(-k)) < 1e-13);
  }
}

TEST_CASE("analyze: cos(2 pi t) has c[1] = c[-1] = 0.5") {
  const auto ts = sample([](double t) { return std::cos(kTwoPi * t); }, 64);
  const FourierCoeffs fc = analyze(ts, 1);
  CHECK(fc.c(1).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(fc.c(1).imag()) < 1e-12);
  CHECK(std::abs(fc.c(-1) - std::conj(fc.c(1))) == 0.0);
  CHECK(std::abs(fc.c(0)) < 1e-12);
}

TEST_CASE("analyze: out-of-band harmonic vanishes, against quadrature oracle") {
  auto f = [](double t) { return std::cos(2.0 * kTwoPi * t); };
  const auto ts = sample(f, 64);
  const FourierCoeffs fc = analyze(ts, 1);
  for (int k = -1; k <= 1; ++k) {
    const auto expected = oracles::fourier_coeff(f, k);
    CHECK(std::abs(fc.c(k) - expected) < 1e-12);
    CHECK(std::abs(expected) < 1e-12);
  }
}

TEST_CASE("analyze: bandwidth precondition") {
  const TimeSeries ts(std::vector<double>(8, 1.0));
  CHECK_THROWS_AS(analyze(ts, 4), BandwidthExceedsSamples);
  CHECK_NOTHROW(analyze(ts, 3));
  CHECK_THROWS_AS(analyze(TimeSeries({1.0, 2.0}, /*periodic=*/false), 0), Error);
}

TEST_CASE("synthesize: DC-only coefficients give a flat signal") {
  const FourierCoeffs fc(1.0, {}, {});
  const TimeSeries ts = synthesize(fc, 8);
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(ts[i] == 1.0);
}

TEST_CASE("synthesize: c[+-1]=0.5 gives cos(2 pi t) at quarter points") {
  const std::vector<std::complex<double>> c = {{0.5, 0.0}, {0.0, 0.0}, {0.5, 0.0}};
  const TimeSeries ts = synthesize(FourierCoeffs::from_complex(c), 4);
  CHECK(ts[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(ts[1]) < 1e-14);
  CHECK(ts[2] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(ts[3]) < 1e-14);
}

TEST_CASE("synthesize: rejects non-Hermitian coefficients") {
  const std::vector<std::complex<double>> bad = {{0.5, 0.2}, {0.0, 0.0}, {0.5, 0.0}};
  CHECK_THROWS_AS(FourierCoeffs::from_complex(bad), NonHermitianCoefficients);
  // Residue below tolerance is discarded.
  const std::vector<std::complex<double>> ok = {
      {0.5, 1e-12}, {0.0, 0.0}, {0.5, 1e-12}};
  CHECK_NOTHROW(FourierCoeffs::from_complex(ok));
}

TEST_CASE("synthesize/analyze round trip equals projection") {
  auto f = [](double t) {
    return 0.3 + std::cos(kTwoPi * t) - 0.2 * std::sin(3.0 * kTwoPi * t) +
           0.05 * std::cos(7.0 * kTwoPi * t);
  };
  const auto ts = sample(f, 256);
  const TimeSeries via_synth = synthesize(analyze(ts, 3), 256);
  const TimeSeries proj = project(ts, 3);
  CHECK(max_abs_diff(via_synth, proj) < 1e-13);

  // Against the quadrature oracle: projection keeps exactly the in-band part.
  std::vector<double> expect(256);
  for (int i = 0; i < 256; ++i) {
    const double t = i / 256.0;
    double v = 0.0;
    for (int k = -3; k <= 3; ++k) {
      const auto ck = oracles::fourier_coeff(f, k);
      v += (ck * std::exp(std::complex<double>(0, kTwoPi * k * t))).real();
    }
    expect[i] = v;
  }
  CHECK(max_abs_diff(proj, TimeSeries(std::move(expect))) < 1e-8);
}

TEST_CASE("project: identity on bandlimited input") {
  auto f = [](double t) { return 1.0 + 0.5 * std::cos(kTwoPi * t); };
  const auto ts = sample(f, 128);
  CHECK(max_abs_diff(project(ts, 1), ts) < 1e-10);
  CHECK(max_abs_diff(project(ts, 5), ts) < 1e-10);
}

TEST_CASE("project: cos(4 pi t) at L=1 vanishes") {
  const auto ts = sample([](double t) { return std::cos(2.0 * kTwoPi * t); }, 128);
  const TimeSeries p = project(ts, 1);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p[i]) < 1e-12);
}

TEST_CASE("project: 0.5 + 0.5 cos(6 pi t) at L=2 is the constant 0.5") {
  const auto ts =
      sample([](double t) { return 0.5 + 0.5 * std::cos(3.0 * kTwoPi * t); }, 128);
  const TimeSeries p = project(ts, 2);
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(p[i] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("project: residual orthogonal to retained basis") {
  const TimeSeries ts = generate_smooth({.C = 1.0, .r = 2.0, .Kmax = 30, .seed = 5});
  const int L = 4;
  const TimeSeries resid = subtract(ts, project(ts, L));
  const std::size_t n = ts.size();
  for (int k = 0; k <= L; ++k) {
    double pc = 0.0, ps = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      pc += resid[i] * std::cos(kTwoPi * k * ts.time_at(i));
      ps += resid[i] * std::sin(kTwoPi * k * ts.time_at(i));
    }
    CHECK(std::abs(pc) / n < 1e-9);
    CHECK(std::abs(ps) / n < 1e-9);
  }
}

TEST_CASE("project idempotence and nesting of residual energy") {
  const TimeSeries ts = generate_smooth({.C = 1.0, .r = 2.0, .Kmax = 40, .seed = 9});
  const TimeSeries p3 = project(ts, 3);
  CHECK(max_abs_diff(project(p3, 3), p3) < 1e-10);

  double prev = std::numeric_limits<double>::infinity();
  for (int L = 0; L <= 12; L += 2) {
    const double e = norms(subtract(ts, project(ts, L))).l2sq;
    CHECK(e <= prev + 1e-12);
    prev = e;
  }
}

TEST_CASE("generate_smooth: modulus law and determinism") {
  const SmoothSignalSpec spec{.C = 1.0, .r = 3.0, .Kmax = 1, .seed = 17};
  const FourierCoeffs fc = generate_smooth_coeffs(spec);
  CHECK(std::abs(fc.c(1)) == doctest::Approx(1.0).epsilon(1e-12));

  const TimeSeries a = generate_smooth(spec);
  const TimeSeries b = generate_smooth(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  const SmoothSignalSpec wide{.C = 2.0, .r = 2.5, .Kmax = 20, .seed = 3};
  const FourierCoeffs w = generate_smooth_coeffs(wide);
  for (int k = 1; k <= 20; ++k)
    CHECK(std::abs(w.c(k)) ==
          doctest::Approx(2.0 / std::pow(k, 2.5)).epsilon(1e-12));
  // Periodic synthesis: f(0) == f(1) by construction.
  const TimeSeries ws = generate_smooth(wide, 1024);
  CHECK(ws[0] == doctest::Approx(w.eval(1.0)).epsilon(1e-9));
}

TEST_CASE("generate_smooth: r <= 1 rejected") {
  CHECK_THROWS_AS(generate_smooth({.C = 1.0, .r = 1.0, .Kmax = 5, .seed = 0}),
                  InvalidDecay);
  CHECK_THROWS_AS(generate_smooth({.C = 1.0, .r = 0.5, .Kmax = 5, .seed = 0}),
                  InvalidDecay);
}

TEST_CASE("generate_smooth: tail energy matches direct partial sums") {
  const SmoothSignalSpec spec{.C = 1.0, .r = 2.0, .Kmax = 50, .seed = 23};
  const TimeSeries ts = generate_smooth(spec, 1024);
  for (int L : {3, 10, 25}) {
    const double measured = norms(subtract(ts, project(ts, L))).l2sq;
    double expected = 0.0;  // sum_{L<|k|<=Kmax} |a_k|^2, both signs
    for (int k = L + 1; k <= spec.Kmax; ++k)
      expected += 2.0 * std::pow(spec.C / std::pow(k, spec.r), 2.0);
    CHECK(measured == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("norms: constant and zero signals") {
  const Norms n2 = norms(TimeSeries(std::vector<double>(64, 2.0)));
  CHECK(n2.l1 == doctest::Approx(2.0));
  CHECK(n2.l2sq == doctest::Approx(4.0));
  CHECK(n2.linf == 2.0);

  const Norms nz = norms(TimeSeries(std::vector<double>(64, 0.0)));
  CHECK(nz.l1 == 0.0);
  CHECK(nz.l2sq == 0.0);
  CHECK(nz.linf == 0.0);
}

TEST_CASE("norms: cos(2 pi t) against analytic integrals") {
  const auto ts = sample([](double t) { return std::cos(kTwoPi * t); }, 1024);
  const Norms n = norms(ts);
  CHECK(n.l1 == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-3));
  CHECK(n.l2sq == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(n.linf == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Parseval on the band") {
  const TimeSeries ts = generate_smooth({.C = 1.0, .r = 2.0, .Kmax = 8, .seed = 41});
  const FourierCoeffs fc = analyze(ts, 8);
  double coeff_energy = fc.a0() * fc.a0();
  for (int k = 1; k <= 8; ++k)
    coeff_energy += 0.5 * (fc.alpha()[k - 1] * fc.alpha()[k - 1] +
                           fc.beta()[k - 1] * fc.beta()[k - 1]);
  CHECK(norms(ts).l2sq == doctest::Approx(coeff_energy).epsilon(1e-8));
}

TEST_CASE("Hermitian symmetry from real input") {
  const TimeSeries ts = generate_smooth({.C = 1.0, .r = 2.2, .Kmax = 16, .seed = 2});
  const FourierCoeffs fc = analyze(ts, 10);
  for (int k = 0; k <= 10; ++k)
    CHECK(std::abs(fc.c(-k) - std::conj(fc.c(k))) == 0.0);
  // Real/complex views agree.
  for (int k = 1; k <= 10; ++k) {
    CHECK(fc.alpha()[k - 1] == doctest::Approx(2.0 * fc.c(k).real()));
    CHECK(fc.beta()[k - 1] == doctest::Approx(-2.0 * fc.c(k).imag()));
  }
}

TEST_CASE("resample: exact for bandlimited content") {
  const TimeSeries ts = generate_smooth({.C = 1.0, .r = 2.0, .Kmax = 12, .seed = 8},
                                        256);
  const TimeSeries up = resample(ts, 1024);
  const FourierCoeffs orig = analyze(ts, 12);
  const FourierCoeffs re = analyze(up, 12);
  CHECK(std::abs(orig.a0() - re.a0()) < 1e-12);
  for (int k = 1; k <= 12; ++k) {
    CHECK(orig.alpha()[k - 1] == doctest::Approx(re.alpha()[k - 1]).epsilon(1e-10));
    CHECK(orig.beta()[k - 1] == doctest::Approx(re.beta()[k - 1]).epsilon(1e-10));
  }
}

TEST_CASE("packed layout round trip") {
  const FourierCoeffs fc(1.5, {0.25, -0.5}, {0.0, 0.125});
  const auto x = fc.packed();
  REQUIRE(x.size() == 5);
  const FourierCoeffs back = FourierCoeffs::from_packed(x);
  CHECK(back.a0() == fc.a0());
  for (int k = 1; k <= 2; ++k) {
    CHECK(back.alpha()[k - 1] == fc.alpha()[k - 1]);
    CHECK(back.beta()[k - 1] == fc.beta()[k - 1]);
  }
}

}  // TEST_SUITE
