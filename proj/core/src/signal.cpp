#include "zygmund/signal.hpp"

#include <algorithm>
#include <cmath>

#include "zygmund/errors.hpp"

namespace zygmund {

namespace {

double horner(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

double Signal::sample_extended(long m) const {
  const long n = static_cast<long>(samples.size());
  if (m >= 0 && m < n) return samples[static_cast<std::size_t>(m)];
  if (const auto* c = std::get_if<ConstantLeftRight>(&extension))
    return m < 0 ? c->cl : c->cr;
  if (std::get_if<ZeroExtension>(&extension)) return 0.0;
  if (std::get_if<PeriodicExtension>(&extension)) {
    if (n < 2) return samples.empty() ? 0.0 : samples[0];
    // period is n-1 samples: the last node repeats the first
    return samples[static_cast<std::size_t>(floor_mod(m, n - 1))];
  }
  const auto& a = std::get<AnalyticExtension>(extension);
  return horner(a.coeffs, x0 + dx * static_cast<double>(m));
}

double Signal::eval(double x) const {
  if (const auto* a = std::get_if<AnalyticExtension>(&extension)) return horner(a->coeffs, x);
  const std::size_t n = samples.size();
  if (n == 0) return 0.0;
  if (n == 1) {
    if (x == x0) return samples[0];
  }
  const double xe = x_end();
  if (x < x0 || x > xe) {
    if (const auto* c = std::get_if<ConstantLeftRight>(&extension)) return x < x0 ? c->cl : c->cr;
    if (std::get_if<ZeroExtension>(&extension)) return 0.0;
    // periodic: reduce into [x0, xe)
    const double L = span();
    if (L <= 0) return samples[0];
    double u = std::fmod(x - x0, L);
    if (u < 0) u += L;
    x = x0 + u;
  }
  double u = (x - x0) / dx;
  if (u <= 0.0) return samples.front();
  if (u >= static_cast<double>(n - 1)) return samples.back();
  const double fl = std::floor(u);
  auto i = static_cast<std::size_t>(fl);
  const double frac = u - fl;
  // snap to nodes so grid queries stay exact despite roundoff
  if (frac < 1e-9) return samples[i];
  if (frac > 1.0 - 1e-9) return samples[i + 1];
  return samples[i] * (1.0 - frac) + samples[i + 1] * frac;
}

double Signal::sup_abs() const {
  double m = 0;
  for (double v : samples) m = std::max(m, std::abs(v));
  return m;
}

void Signal::validate() const {
  if (samples.empty()) throw InvalidParameter("signal: samples must be nonempty");
  if (!(dx > 0) || !std::isfinite(dx)) throw InvalidParameter("signal: dx must be positive and finite");
  if (!std::isfinite(x0)) throw InvalidParameter("signal: x0 must be finite");
  for (double v : samples)
    if (!std::isfinite(v)) throw InvalidParameter("signal: samples must be finite");
}

}  // namespace zygmund
