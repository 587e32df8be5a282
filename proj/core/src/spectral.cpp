#include "zygmund/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fftw_util.hpp"
#include "zygmund/errors.hpp"

namespace zygmund {

namespace {

double glue(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double glue_derivative(double t) { return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0; }

// Smooth step rising from 0 at u=0 to 1 at u=1.
double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double e1 = glue(u), e2 = glue(1.0 - u);
  return e1 / (e1 + e2);
}

double smooth_step_derivative(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  const double e1 = glue(u), e2 = glue(1.0 - u);
  const double den = e1 + e2;
  return (glue_derivative(u) * e2 + e1 * glue_derivative(1.0 - u)) / (den * den);
}

// Inverse transform of an even real profile m(xi) on a wraparound grid of
// size M with frequency step dxi. Output is spatial samples at step
// dX = 2*pi/(M*dxi) in wraparound order, real and even.
std::vector<double> inverse_transform(const SpectralPair& pair, bool use_psi, std::size_t M,
                                      double dxi) {
  std::vector<double> in(M, 0.0), out(M);
  const std::size_t half = M / 2;
  // Halfcomplex layout r0, r1, ..., r_{M/2}, i_..., ..., i_1: an even real
  // profile has zero imaginary parts, so only the leading slots are filled.
  for (std::size_t k = 0; k <= half; ++k) {
    const double xi = dxi * static_cast<double>(k);
    in[k] = use_psi ? pair.psi(xi) : pair.phi(xi);
  }
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
    plan = fftw_plan_r2r_1d(static_cast<int>(M), in.data(), out.data(), FFTW_HC2R, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
    fftw_destroy_plan(plan);
  }
  const double scale = dxi / (2.0 * std::numbers::pi);
  for (double& v : out) v *= scale;
  return out;
}

// Kernel extraction: center the wraparound samples and truncate symmetrically
// where the amplitude is negligible, without discarding enough mass to
// perturb the kernel integral.
Kernel extract_kernel(const std::vector<double>& wrap, double dX, KernelKind kind,
                      bool* headroom_ok) {
  const long M = static_cast<long>(wrap.size());
  const long half = M / 2;
  // centered[j] corresponds to x = (j - half) * dX; even symmetry holds
  // because the frequency profile is real and even
  std::vector<double> centered(static_cast<std::size_t>(M));
  for (long j = 0; j < M; ++j) {
    const long src = (j - half + M) % M;
    centered[static_cast<std::size_t>(j)] = wrap[static_cast<std::size_t>(src)];
  }
  double peak = 0;
  for (double v : centered) peak = std::max(peak, std::abs(v));
  const double amp_tol = 1e-12 * peak;
  double total_mass = 0;
  for (double v : centered) total_mass += std::abs(v) * dX;
  const double mass_tol = 1e-11 * total_mass;

  // keep indices [lo, M - lo] so the grid is symmetric about x = 0; grow the
  // discard region while every dropped sample stays below the amplitude floor
  long lo = 1;
  if (std::abs(centered[0]) <= amp_tol) {
    while (lo < half - 8) {
      const double vl = std::abs(centered[static_cast<std::size_t>(lo)]);
      const double vr = std::abs(centered[static_cast<std::size_t>(M - lo)]);
      if (vl > amp_tol || vr > amp_tol) break;
      ++lo;
    }
  }
  // shrink the discard region if the dropped mass would shift the integral;
  // the full-frame discrete sum reproduces the frequency profile at zero
  // exactly, so keeping extra floor-level samples only preserves that sum
  auto discarded_mass = [&](long cut) {
    double m = std::abs(centered[0]) * dX;
    for (long j = 1; j < cut; ++j)
      m += (std::abs(centered[static_cast<std::size_t>(j)]) +
            std::abs(centered[static_cast<std::size_t>(M - j)])) *
           dX;
    return m;
  };
  while (lo > 1 && discarded_mass(lo) > mass_tol) --lo;

  Kernel k;
  k.dx = dX;
  k.x0 = static_cast<double>(lo - half) * dX;
  k.kind = kind;
  k.support_radius = std::nullopt;
  k.samples.assign(centered.begin() + lo, centered.begin() + (M - lo) + 1);
  double tail = 0;
  for (long j = 0; j < lo; ++j) {
    tail = std::max(tail, std::abs(centered[static_cast<std::size_t>(j)]));
    if (j >= 1) tail = std::max(tail, std::abs(centered[static_cast<std::size_t>(M - j)]));
  }
  k.tail_bound = tail;
  // headroom: the kept window must sit well inside the periodic frame so
  // wraparound images cannot contaminate it
  *headroom_ok = lo > M / 20;
  return k;
}

// Largest consecutive run of quadrature-vanishing moments, capped. Each
// moment is judged against the size of its absolute integrand so the result
// is meaningful for kernels of any width.
int validated_moment_order(const Kernel& k, bool wavelet, int cap) {
  const auto moments = check_moments(k, cap);
  std::vector<double> normalizer(static_cast<std::size_t>(cap) + 1, 0.0);
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double x = k.x_at(i);
    double p = 1.0;
    const double v = std::abs(k.samples[i]) * k.dx;
    for (int j = 0; j <= cap; ++j) {
      normalizer[static_cast<std::size_t>(j)] += p * v;
      p *= std::abs(x);
    }
  }
  auto vanishes = [&](int j) {
    return std::abs(moments[static_cast<std::size_t>(j)]) <=
           1e-8 * std::max(1.0, normalizer[static_cast<std::size_t>(j)]);
  };
  if (wavelet && !vanishes(0)) return 0;
  int order = 0;
  for (int j = 1; j <= cap; ++j) {
    if (vanishes(j))
      order = j;
    else
      break;
  }
  return order;
}

}  // namespace

double SpectralPair::phi0(double t) const {
  if (t <= a) return 1.0;
  if (t >= b) return 0.0;
  return smooth_step((b - t) / (b - a));
}

double SpectralPair::phi0_derivative(double t) const {
  if (t <= a || t >= b) return 0.0;
  return -smooth_step_derivative((b - t) / (b - a)) / (b - a);
}

double SpectralPair::psi(double xi) const {
  const double t = xi < 0 ? -xi : xi;
  // -xi * phi'(xi) = -|xi| * phi0'(|xi|) by evenness of phi
  return -t * phi0_derivative(t);
}

SpectralPair spectral_pair(double a, double b, std::size_t n_freq) {
  if (!(a > 0.0) || !(a < b)) throw InvalidParameter("spectral_pair: need 0 < a < b");
  if (n_freq < 16) throw InvalidParameter("spectral_pair: need n_freq >= 16");

  SpectralPair pair;
  pair.a = a;
  pair.b = b;
  pair.theorem_grade = (a <= 0.25 && b >= 4.0);
  pair.phi0_profile =
      "1 on [0,a], exp(-1/t) smooth-step transition on (a,b), 0 on [b,inf)";

  // Spatial step oversamples the top frequency so later cubic interpolation
  // of the kernels stays far below comparison tolerances.
  const double dX = std::numbers::pi / (64.0 * b);
  // Frequency step must resolve the transition band and the inner plateau.
  const double dxi_target = std::min(a, b - a) / 64.0;
  std::size_t M = 1;
  while (static_cast<double>(M) < 2.0 * std::numbers::pi / (dX * dxi_target) ||
         M < n_freq)
    M <<= 1;

  for (int attempt = 0; attempt < 5; ++attempt) {
    const double dxi = 2.0 * std::numbers::pi / (dX * static_cast<double>(M));
    const auto chi_wrap = inverse_transform(pair, false, M, dxi);
    const auto mu_wrap = inverse_transform(pair, true, M, dxi);
    bool ok_chi = false, ok_mu = false;
    Kernel chi = extract_kernel(chi_wrap, dX, KernelKind::Mollifier, &ok_chi);
    Kernel mu = extract_kernel(mu_wrap, dX, KernelKind::Wavelet, &ok_mu);
    if ((ok_chi && ok_mu) || attempt == 4) {
      chi.moment_order = validated_moment_order(chi, false, 8);
      mu.moment_order = validated_moment_order(mu, true, 8);
      pair.chi_kernel = std::move(chi);
      pair.mu_kernel = std::move(mu);

      // stored frequency samples: symmetric window just past the support of psi
      const double xi_max = 1.25 * b;
      const auto count = static_cast<std::size_t>(2.0 * xi_max / dxi) + 1;
      pair.freqs.resize(count);
      pair.phi_samples.resize(count);
      pair.psi_samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        const double xi = -xi_max + dxi * static_cast<double>(i);
        pair.freqs[i] = xi;
        pair.phi_samples[i] = pair.phi(xi);
        pair.psi_samples[i] = pair.psi(xi);
      }
      return pair;
    }
    M <<= 1;  // widen the spatial frame and retry
  }
  throw ConstructionError("spectral_pair: kernel tails failed to decay inside the frame");
}

}  // namespace zygmund
