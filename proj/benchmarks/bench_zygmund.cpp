#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "zygmund/colombeau.hpp"
#include "zygmund/generators.hpp"
#include "zygmund/kernel.hpp"
#include "zygmund/multiplier.hpp"
#include "zygmund/regularity.hpp"
#include "zygmund/scaling.hpp"
#include "zygmund/spectral.hpp"
#include "zygmund/transform.hpp"

using namespace zygmund;

namespace {

Signal bandlimited(std::size_t n) {
  Signal s;
  s.x0 = 0.0;
  s.dx = 2.0 * std::numbers::pi / static_cast<double>(n - 1);
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 1; k <= 5; ++k)
      acc += std::cos(static_cast<double>(k) * s.x_at(i)) / static_cast<double>(k);
    s.samples[i] = acc;
  }
  s.extension = PeriodicExtension{};
  return s;
}

void bm_gen_cantor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto g = gen_cantor_staircase(2, 1.0 / 3.0, 20, n);
    benchmark::DoNotOptimize(g.signal.samples.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(bm_gen_cantor)->Arg(1 << 14)->Arg(1 << 16);

void bm_gen_brownian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto g = gen_brownian(n, std::numbers::pi, 42);
    benchmark::DoNotOptimize(g.signal.samples.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(bm_gen_brownian)->Arg(1 << 14)->Arg(1 << 16);

// one aligned transform row at a scale wide enough for the contiguous path
void bm_cwt_row_aligned(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Signal f = bandlimited(n);
  Kernel mu = wavelet_from_mollifier(bump_mollifier(1.0, 1, 4097));
  const double r = 512.0 * f.dx;
  const auto positions = grid_positions(f, 4);
  for (auto _ : state) {
    auto field = cwt(f, mu, {r}, positions);
    benchmark::DoNotOptimize(field.rows.front().data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(positions.size()));
}
BENCHMARK(bm_cwt_row_aligned)->Arg(1 << 14)->Arg(1 << 16);

// one refined-quadrature row below the subdivision threshold
void bm_cwt_row_refined(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Signal f = bandlimited(n);
  Kernel mu = wavelet_from_mollifier(bump_mollifier(1.0, 1, 4097));
  const double r = 24.0 * f.dx;
  const auto positions = grid_positions(f, 4);
  for (auto _ : state) {
    auto field = cwt(f, mu, {r}, positions);
    benchmark::DoNotOptimize(field.rows.front().data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(positions.size()));
}
BENCHMARK(bm_cwt_row_refined)->Arg(1 << 14);

void bm_smooth(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = gen_cantor_staircase(2, 1.0 / 3.0, 18, n);
  Kernel chi = bump_mollifier(1.0, 1, 4097);
  for (auto _ : state) {
    Signal s = smooth(g.signal, chi, 0.05);
    benchmark::DoNotOptimize(s.samples.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(bm_smooth)->Arg(1 << 14)->Arg(1 << 16);

void bm_fourier_multiplier(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Signal f = bandlimited(n);
  SpectralPair pair = spectral_pair(0.25, 4.0, 512);
  for (auto _ : state) {
    Signal band = fourier_multiplier(f, pair, 0.1, MultiplierKind::Psi);
    benchmark::DoNotOptimize(band.samples.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(bm_fourier_multiplier)->Arg(1 << 14)->Arg(1 << 18);

void bm_estimate_signal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = gen_cantor_staircase(2, 1.0 / 3.0, 18, n);
  Kernel mu = default_estimation_wavelet();
  for (auto _ : state) {
    auto rep = estimate_signal(g.signal, mu);
    benchmark::DoNotOptimize(rep.fitted_s);
  }
}
BENCHMARK(bm_estimate_signal)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void bm_embed_classify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = gen_cantor_staircase(2, 1.0 / 3.0, 16, n);
  Kernel chi = bump_mollifier(1.0, 1, 4097);
  ScalingFn gamma = make_scaling(ScalingFn::Kind::Power, 1.0);
  std::vector<double> eps;
  for (int j = 0; j <= 7; ++j) eps.push_back(0.3 * std::pow(3.0, -0.5 * j));
  for (auto _ : state) {
    Representative rep = embed(g.signal, chi, gamma, eps);
    auto report = classify_growth(rep, 1);
    benchmark::DoNotOptimize(report.fitted_exponent);
  }
}
BENCHMARK(bm_embed_classify)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
