#include "zygmund/multiplier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <variant>
#include <vector>

#include "fftw_util.hpp"
#include "zygmund/errors.hpp"

namespace zygmund {

namespace {

// One r2c/c2r round trip applying m(xi) on the DFT bins of a frame of
// length len*dx starting at the first sample.
std::vector<double> dft_apply(const std::vector<double>& frame, double dx,
                              const std::function<double(double)>& m) {
  const std::size_t len = frame.size();
  const double L = static_cast<double>(len) * dx;
  std::vector<double> in(frame), out(len);
  std::vector<std::complex<double>> spec(len / 2 + 1);
  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(len), in.data(),
                               reinterpret_cast<fftw_complex*>(spec.data()), FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(static_cast<int>(len),
                               reinterpret_cast<fftw_complex*>(spec.data()), out.data(),
                               FFTW_ESTIMATE);
  }
  fftw_execute(fwd);
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const double xi = 2.0 * std::numbers::pi * static_cast<double>(k) / L;
    spec[k] *= m(xi);
  }
  fftw_execute(bwd);
  {
    std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  const double inv = 1.0 / static_cast<double>(len);
  for (double& v : out) v *= inv;
  return out;
}

Signal apply_spectral(const Signal& f, const std::function<double(double)>& m,
                      double taper_fraction) {
  f.validate();
  if (const auto* an = std::get_if<AnalyticExtension>(&f.extension)) {
    for (std::size_t i = 1; i < an->coeffs.size(); ++i)
      if (an->coeffs[i] != 0.0)
        throw ContractError(
            "fourier multiplier: analytic extensions are unbounded; only constants are "
            "transformable");
    Signal out = f;
    const double c = an->coeffs.empty() ? 0.0 : an->coeffs[0] * m(0.0);
    out.extension = AnalyticExtension{{c}};
    std::fill(out.samples.begin(), out.samples.end(), c);
    return out;
  }

  Signal out;
  out.x0 = f.x0;
  out.dx = f.dx;
  out.samples.resize(f.size());

  if (std::holds_alternative<PeriodicExtension>(f.extension)) {
    // the final sample duplicates the first; transform one full period
    std::vector<double> frame(f.samples.begin(), f.samples.end() - 1);
    const auto res = dft_apply(frame, f.dx, m);
    std::copy(res.begin(), res.end(), out.samples.begin());
    out.samples.back() = res.front();
    out.extension = PeriodicExtension{};
    return out;
  }

  if (taper_fraction < 0.0 || taper_fraction > 0.5)
    throw InvalidParameter("fourier multiplier: taper fraction must lie in [0, 1/2]");
  std::vector<double> frame(f.samples);
  const auto ramp = static_cast<std::size_t>(
      std::llround(taper_fraction * static_cast<double>(f.size())));
  for (std::size_t i = 0; i < ramp && i < frame.size(); ++i) {
    const double w =
        0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(i) /
                              static_cast<double>(ramp)));
    frame[i] *= w;
    frame[frame.size() - 1 - i] *= w;
  }
  const auto res = dft_apply(frame, f.dx, m);
  std::copy(res.begin(), res.end(), out.samples.begin());
  out.extension = ZeroExtension{};
  return out;
}

}  // namespace

Signal fourier_multiplier(const Signal& f, const SpectralPair& pair, double t,
                          MultiplierKind which, double taper_fraction) {
  if (!(t > 0.0)) throw InvalidParameter("fourier multiplier: scale must be positive");
  if (which == MultiplierKind::Phi)
    return apply_spectral(
        f, [&pair, t](double xi) { return pair.phi(t * xi); }, taper_fraction);
  return apply_spectral(
      f, [&pair, t](double xi) { return pair.psi(t * xi); }, taper_fraction);
}

CalderonResult calderon_reconstruct(const Signal& f, const SpectralPair& pair,
                                    std::span<const double> scales, double taper_fraction) {
  if (scales.size() < 2)
    throw InvalidParameter("calderon reconstruction: need at least two scale nodes");
  std::vector<double> s(scales.begin(), scales.end());
  std::sort(s.begin(), s.end());
  if (!(s.front() > 0.0))
    throw InvalidParameter("calderon reconstruction: scales must be positive");

  // log-trapezoid weights for int psi(s xi) ds/s = int psi(e^tau xi) dtau
  std::vector<double> tau(s.size()), w(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) tau[i] = std::log(s[i]);
  w.front() = 0.5 * (tau[1] - tau[0]);
  w.back() = 0.5 * (tau[s.size() - 1] - tau[s.size() - 2]);
  for (std::size_t i = 1; i + 1 < s.size(); ++i) w[i] = 0.5 * (tau[i + 1] - tau[i - 1]);

  const double s_max = s.back();
  auto m_total = [&](double xi) {
    double acc = pair.phi(s_max * xi);
    for (std::size_t i = 0; i < s.size(); ++i) acc += w[i] * pair.psi(s[i] * xi);
    return acc;
  };

  CalderonResult result;
  result.reconstruction = apply_spectral(f, m_total, taper_fraction);
  result.t_max = 1.0 / s.front();
  result.coverage_warning = pair.b * result.t_max < std::numbers::pi / f.dx;
  return result;
}

}  // namespace zygmund
