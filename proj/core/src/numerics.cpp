#include "zygmund/numerics.hpp"

#include <cmath>

#include "zygmund/errors.hpp"

namespace zygmund {

double trapezoid(std::span<const double> v, double h) {
  if (v.size() < 2) return 0.0;
  double acc = 0.5 * (v.front() + v.back());
  for (std::size_t i = 1; i + 1 < v.size(); ++i) acc += v[i];
  return acc * h;
}

std::vector<double> geometric_ladder(double hi, double lo, int per_octave) {
  if (!(hi > 0.0) || !(lo > 0.0) || hi < lo)
    throw InvalidParameter("geometric_ladder: need hi >= lo > 0");
  if (per_octave < 1) throw InvalidParameter("geometric_ladder: per_octave >= 1");
  const double step = std::pow(2.0, -1.0 / per_octave);
  std::vector<double> out;
  double r = hi;
  // tolerance keeps the nominal lo endpoint despite rounding
  while (r >= lo * (1.0 - 1e-12)) {
    out.push_back(r);
    r *= step;
  }
  return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw InvalidParameter("log_spaced: endpoints must be positive");
  if (count < 2) throw InvalidParameter("log_spaced: need at least two points");
  std::vector<double> out(count);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = std::exp(u);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidParameter("fit_line: need matching inputs with at least two points");
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidParameter("fit_line: abscissae are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
    fit.residual_max = std::max(fit.residual_max, std::abs(r));
  }
  if (x.size() > 2) fit.stderr_slope = std::sqrt(ss / (n - 2.0) / sxx);
  return fit;
}

}  // namespace zygmund
