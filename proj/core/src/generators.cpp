#include "zygmund/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zygmund/errors.hpp"

namespace zygmund {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Value of the staircase at normalized abscissa u in [0, 1]. Below the
// given depth the remaining measure is spread linearly, which keeps the
// function continuous and exact at every evaluation point.
double staircase_value(double u, int pieces, double ratio, int depth) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double gap =
      pieces > 1 ? (1.0 - pieces * ratio) / static_cast<double>(pieces - 1) : 0.0;
  const double pitch = ratio + gap;
  double base = 0.0;
  double scale = 1.0;
  for (int d = 0; d < depth; ++d) {
    auto i = static_cast<int>(u / pitch);
    i = std::clamp(i, 0, pieces - 1);
    const double off = static_cast<double>(i) * pitch;
    if (u >= off + ratio) {
      // inside the gap after piece i: measure accumulated so far
      return base + scale * static_cast<double>(i + 1) / static_cast<double>(pieces);
    }
    base += scale * static_cast<double>(i) / static_cast<double>(pieces);
    scale /= static_cast<double>(pieces);
    u = (u - off) / ratio;
    u = std::clamp(u, 0.0, 1.0);
  }
  return base + scale * u;
}

}  // namespace

GenResult gen_brownian(std::size_t n, double half_width, std::uint64_t seed) {
  if (n < 2) throw InvalidParameter("gen_brownian: need n >= 2");
  if (!(half_width > 0)) throw InvalidParameter("gen_brownian: need half_width > 0");
  GenResult out;
  Signal& s = out.signal;
  s.x0 = -half_width;
  s.dx = 2.0 * half_width / static_cast<double>(n - 1);
  s.samples.resize(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> step(0.0, std::sqrt(s.dx));
  double acc = 0.0;
  s.samples[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    acc += step(rng);
    s.samples[i] = acc;
  }
  s.extension = ConstantLeftRight{s.samples.front(), s.samples.back()};
  out.truth.exponent = 0.5;
  out.truth.description =
      "standard Brownian path; member of every Zygmund class of order s < 1/2";
  return out;
}

GenResult gen_cantor_staircase(int pieces, double ratio, int depth, std::size_t n) {
  if (pieces < 2) throw InvalidParameter("gen_cantor_staircase: need pieces >= 2");
  if (!(ratio > 0)) throw InvalidParameter("gen_cantor_staircase: need ratio > 0");
  if (static_cast<double>(pieces) * ratio > 1.0 + 1e-15)
    throw OverlappingPieces("gen_cantor_staircase: pieces*ratio exceeds 1, subintervals overlap");
  if (depth < 1) throw InvalidParameter("gen_cantor_staircase: need depth >= 1");
  if (n < 2) throw InvalidParameter("gen_cantor_staircase: need n >= 2");
  GenResult out;
  Signal& s = out.signal;
  s.x0 = 0.0;
  s.dx = kTwoPi / static_cast<double>(n - 1);
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(n - 1);
    s.samples[i] = staircase_value(u, pieces, std::min(ratio, 1.0 / pieces), depth);
  }
  s.samples.front() = 0.0;
  s.samples.back() = 1.0;
  s.extension = ConstantLeftRight{0.0, 1.0};
  out.grid_saturated = kTwoPi * std::pow(ratio, depth) < s.dx;
  out.truth.exponent = std::log(static_cast<double>(pieces)) / std::abs(std::log(ratio));
  out.truth.description = "self-similar singular-measure distribution function";
  return out;
}

GenResult gen_weierstrass(double amp, double freq, int terms, std::size_t n) {
  if (!(amp > 0.0) || !(amp < 1.0)) throw InvalidParameter("gen_weierstrass: need 0 < amp < 1");
  if (!(freq > 1.0)) throw InvalidParameter("gen_weierstrass: need freq > 1");
  if (amp * freq < 1.0) throw InvalidParameter("gen_weierstrass: need amp*freq >= 1");
  if (terms < 1) throw InvalidParameter("gen_weierstrass: need terms >= 1");
  if (n < 2) throw InvalidParameter("gen_weierstrass: need n >= 2");
  GenResult out;
  Signal& s = out.signal;
  s.x0 = -std::numbers::pi;
  s.dx = kTwoPi / static_cast<double>(n - 1);
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = s.x_at(i);
    double a = 1.0, b = 1.0, acc = 0.0;
    for (int j = 0; j < terms; ++j) {
      acc += a * std::cos(b * std::numbers::pi * x);
      a *= amp;
      b *= freq;
    }
    s.samples[i] = acc;
  }
  // even in x, so the two endpoint values agree and the periodic wrap is
  // continuous with matching one-sided regularity
  s.extension = PeriodicExtension{};
  out.truth.exponent = std::log(1.0 / amp) / std::log(freq);
  out.truth.description = "Weierstrass-type lacunary cosine sum";
  return out;
}

Signal gen_polynomial(const std::vector<double>& coeffs, std::size_t n, double x_lo, double x_hi) {
  if (coeffs.empty()) throw InvalidParameter("gen_polynomial: coeffs must be nonempty");
  if (n < 2) throw InvalidParameter("gen_polynomial: need n >= 2");
  if (!(x_hi > x_lo)) throw InvalidParameter("gen_polynomial: need x_hi > x_lo");
  Signal s;
  s.x0 = x_lo;
  s.dx = (x_hi - x_lo) / static_cast<double>(n - 1);
  s.extension = AnalyticExtension{coeffs};
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = s.x_at(i);
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    s.samples[i] = acc;
  }
  return s;
}

Signal gen_heaviside(std::size_t n, double x_lo, double x_hi) {
  if (n < 2) throw InvalidParameter("gen_heaviside: need n >= 2");
  if (!(x_lo < 0.0) || !(x_hi > 0.0))
    throw InvalidParameter("gen_heaviside: interval must straddle 0");
  Signal s;
  s.x0 = x_lo;
  s.dx = (x_hi - x_lo) / static_cast<double>(n - 1);
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.samples[i] = s.x_at(i) >= 0.0 ? 1.0 : 0.0;
  s.extension = ConstantLeftRight{0.0, 1.0};
  return s;
}

}  // namespace zygmund
