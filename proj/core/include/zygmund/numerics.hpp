#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace zygmund {

// Trapezoidal rule over a uniform grid with step h.
double trapezoid(std::span<const double> v, double h);

// Strictly decreasing geometric ladder from hi down to (approximately) lo,
// with the given number of entries per octave.
std::vector<double> geometric_ladder(double hi, double lo, int per_octave);

// count points from lo to hi inclusive, equally spaced in log.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double stderr_slope = 0;
  double residual_max = 0;
};

// Ordinary least squares of y against x. Needs x.size() == y.size() >= 2.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace zygmund
