#include "zygmund/kernel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "zygmund/errors.hpp"
#include "zygmund/numerics.hpp"

namespace zygmund {

namespace {

// Fourth-order centered first derivative; out-of-range samples are treated
// as zero, which matches kernels that vanish at the grid edges.
std::vector<double> derivative4(const std::vector<double>& v, double dx) {
  const long n = static_cast<long>(v.size());
  auto at = [&](long i) -> double { return (i >= 0 && i < n) ? v[static_cast<std::size_t>(i)] : 0.0; };
  std::vector<double> d(v.size());
  for (long i = 0; i < n; ++i)
    d[static_cast<std::size_t>(i)] =
        (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * dx);
  return d;
}

// Mirror the grid: out(x) = in(-x). Grids here are symmetric (x0 = -x_end).
Kernel reflected(const Kernel& in, std::vector<double> new_samples) {
  Kernel out = in;
  std::reverse(new_samples.begin(), new_samples.end());
  out.samples = std::move(new_samples);
  out.x0 = -in.x_end();
  return out;
}

}  // namespace

double Kernel::reach() const {
  if (support_radius) return *support_radius;
  return std::max(std::abs(x0), std::abs(x_end()));
}

double Kernel::sup_abs() const {
  double m = 0;
  for (double v : samples) m = std::max(m, std::abs(v));
  return m;
}

double Kernel::eval(double x) const {
  const long n = static_cast<long>(samples.size());
  if (n == 0) return 0.0;
  const double u = (x - x0) / dx;
  if (u < 0.0 || u > static_cast<double>(n - 1)) return 0.0;
  if (n < 4) {
    // degenerate grid: linear interpolation
    const long i = std::min<long>(static_cast<long>(u), n - 2);
    const double f = u - static_cast<double>(i);
    return samples[static_cast<std::size_t>(i)] * (1.0 - f) +
           samples[static_cast<std::size_t>(i + 1)] * f;
  }
  // cubic stencil i-1..i+2 around the containing cell, clamped at the edges
  long i = static_cast<long>(std::floor(u));
  i = std::clamp(i, 1L, n - 3);
  const double t = u - static_cast<double>(i);  // in [-?, 2]; within [0,1] away from edges
  const double ym1 = samples[static_cast<std::size_t>(i - 1)];
  const double y0 = samples[static_cast<std::size_t>(i)];
  const double y1 = samples[static_cast<std::size_t>(i + 1)];
  const double y2 = samples[static_cast<std::size_t>(i + 2)];
  const double w0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
  const double w1 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
  const double w2 = -(t + 1.0) * t * (t - 2.0) / 2.0;
  const double w3 = (t + 1.0) * t * (t - 1.0) / 6.0;
  return w0 * ym1 + w1 * y0 + w2 * y1 + w3 * y2;
}

Kernel bump_mollifier(double radius, int moment_order, std::size_t n) {
  if (!(radius > 0)) throw InvalidParameter("bump_mollifier: need radius > 0");
  if (moment_order < 0) throw InvalidParameter("bump_mollifier: need moment_order >= 0");
  if (n < 64) throw InvalidParameter("bump_mollifier: need at least 64 samples across the support");

  Kernel k;
  k.x0 = -radius;
  k.dx = 2.0 * radius / static_cast<double>(n - 1);
  k.kind = KernelKind::Mollifier;
  k.moment_order = moment_order;
  k.support_radius = radius;
  k.tail_bound = 0.0;
  k.samples.resize(n);

  // Work in the normalized coordinate u = x/radius for conditioning.
  std::vector<double> u(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    const double q = 1.0 - u[i] * u[i];
    w[i] = q > 0.0 ? std::exp(-1.0 / q) : 0.0;
  }

  // Even polynomial sum_q c[q] u^(2q). Odd moments vanish by symmetry, so
  // only the even constraints are solved: integral of u^(2j) * w * p equals
  // delta_j0 / radius for 2j <= moment_order. Quadrature matches
  // check_moments so the constraints hold on the kernel's own grid.
  const int m = moment_order / 2;
  const double du = 2.0 / static_cast<double>(n - 1);
  std::vector<double> even_moments(2 * m + 1);
  {
    std::vector<double> integrand(n);
    for (int t = 0; t <= 2 * m; ++t) {
      for (std::size_t i = 0; i < n; ++i) integrand[i] = std::pow(u[i], 2 * t) * w[i];
      even_moments[static_cast<std::size_t>(t)] = trapezoid(integrand, du);
    }
  }
  Eigen::MatrixXd A(m + 1, m + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  for (int j = 0; j <= m; ++j)
    for (int q = 0; q <= m; ++q) A(j, q) = even_moments[static_cast<std::size_t>(j + q)];
  rhs(0) = 1.0 / radius;
  Eigen::VectorXd c = A.fullPivLu().solve(rhs);
  if (!(A * c - rhs).isZero(1e-12 / radius))
    throw ConstructionError("bump_mollifier: moment system could not be solved");

  for (std::size_t i = 0; i < n; ++i) {
    double p = 0;
    for (int q = m; q >= 0; --q) p = p * (u[i] * u[i]) + c(q);
    k.samples[i] = w[i] * p;
  }
  k.samples.front() = 0.0;
  k.samples.back() = 0.0;
  return k;
}

Kernel wavelet_from_mollifier(const Kernel& chi) {
  if (chi.kind != KernelKind::Mollifier)
    throw KindError("wavelet_from_mollifier: input kernel must be a mollifier");
  if (chi.samples.size() < 5)
    throw ResolutionError("wavelet_from_mollifier: grid too coarse for differencing");
  const auto d = derivative4(chi.samples, chi.dx);
  std::vector<double> h(chi.samples.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = chi.samples[i] + chi.x_at(i) * d[i];
  Kernel out = reflected(chi, std::move(h));
  out.kind = KernelKind::Wavelet;
  out.moment_order = chi.moment_order;
  return out;
}

Kernel derivative_wavelet(const Kernel& chi, int alpha) {
  if (chi.kind != KernelKind::Mollifier)
    throw KindError("derivative_wavelet: input kernel must be a mollifier");
  if (alpha < 1) throw InvalidParameter("derivative_wavelet: need alpha >= 1");
  if (chi.samples.size() < static_cast<std::size_t>(4 * alpha + 5))
    throw ResolutionError("derivative_wavelet: stencil wider than the sampled support");
  std::vector<double> d = chi.samples;
  for (int a = 0; a < alpha; ++a) d = derivative4(d, chi.dx);
  Kernel out = reflected(chi, std::move(d));
  out.kind = KernelKind::Wavelet;
  out.moment_order = alpha - 1;
  return out;
}

std::vector<double> check_moments(const Kernel& k, int up_to) {
  if (up_to < 0) throw InvalidParameter("check_moments: need up_to >= 0");
  std::vector<double> out(static_cast<std::size_t>(up_to) + 1);
  std::vector<double> integrand(k.samples.size());
  for (int j = 0; j <= up_to; ++j) {
    for (std::size_t i = 0; i < k.samples.size(); ++i)
      integrand[i] = std::pow(k.x_at(i), j) * k.samples[i];
    out[static_cast<std::size_t>(j)] = trapezoid(integrand, k.dx);
  }
  return out;
}

}  // namespace zygmund
