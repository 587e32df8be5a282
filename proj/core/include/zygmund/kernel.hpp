#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace zygmund {

enum class KernelKind { Mollifier, Wavelet };

// Sampled convolution kernel on a uniform grid.
// moment_order semantics: for a Mollifier, the largest N such that the
// moments 1..N vanish (and the integral is 1); for a Wavelet, the largest k
// such that the moments 0..k vanish. Both are verified by grid quadrature.
struct Kernel {
  std::vector<double> samples;
  double x0 = 0;
  double dx = 1;
  KernelKind kind = KernelKind::Mollifier;
  int moment_order = 0;
  // Compactly supported kernels store their support radius; rapidly decaying
  // ones store nothing and record the truncation level in tail_bound.
  std::optional<double> support_radius;
  double tail_bound = 0;  // sup |kernel| beyond the stored grid

  std::size_t size() const { return samples.size(); }
  double x_at(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
  double x_end() const { return x_at(samples.empty() ? 0 : samples.size() - 1); }

  // Radius beyond which the kernel is treated as zero: the support radius
  // when known, otherwise the stored grid half-extent.
  double reach() const;

  double sup_abs() const;

  // Cubic (4-point Lagrange) interpolation on the grid; 0 outside it.
  double eval(double x) const;
};

// Smooth compactly supported kernel: base bump exp(-1/(1-(x/radius)^2))
// times an even polynomial solved so that the grid quadrature gives
// integral 1 and vanishing moments 1..moment_order.
Kernel bump_mollifier(double radius, int moment_order, std::size_t n);

// Wavelet h(-x) with h = chi + x*chi' (the derivative of x*chi), computed
// with fourth-order centered differences. Order equals chi.moment_order.
Kernel wavelet_from_mollifier(const Kernel& chi);

// Wavelet (d/dx)^alpha chi evaluated at -x; order alpha-1.
Kernel derivative_wavelet(const Kernel& chi, int alpha);

// Grid-trapezoid moments: entry j is the quadrature of x^j * k(x), j = 0..up_to.
std::vector<double> check_moments(const Kernel& k, int up_to);

}  // namespace zygmund
