#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zygmund/kernel.hpp"
#include "zygmund/signal.hpp"

namespace zygmund {

// Wavelet coefficients W_g f(x, r) = (1/r) int f(y) g((y - x)/r) dy sampled
// on a position grid at a decreasing ladder of scales.
struct ScaleField {
  std::vector<double> positions;
  std::vector<double> scales;             // strictly decreasing
  std::vector<std::vector<double>> rows;  // rows[j][i] at scales[j], positions[i]
  std::vector<double> sup_per_scale;      // sup over interior positions
  double interior_margin = 0.0;           // positions within [lo+margin, hi-margin] count
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  double signal_sup = 0.0;

  std::size_t n_scales() const { return scales.size(); }
  std::size_t n_positions() const { return positions.size(); }
  double value(std::size_t position_index, std::size_t scale_index) const {
    return rows[scale_index][position_index];
  }
};

// Smallest scale the sampling grid can support.
double scale_floor(const Signal& f);

// Sample positions on the signal grid, optionally strided.
std::vector<double> grid_positions(const Signal& f, std::size_t stride = 1);

// Continuous wavelet transform with an integrable normalization. Scales are
// sorted to decreasing order and deduplicated; scales below the resolution
// floor raise ScaleFloorError carrying the admissible prefix. The default
// interior margin is zero for periodic signals and r_max * reach otherwise.
ScaleField cwt(const Signal& f, const Kernel& g, std::vector<double> scales,
               std::vector<double> positions,
               std::optional<double> margin = std::nullopt);

// Mollification S_eps f(x) = int f(y) (1/eps) chi((x - y)/eps) dy on the
// signal's own grid. Analytic extensions are smoothed exactly in closed form
// using the quadrature row's own moments, so polynomials stay polynomials.
Signal smooth(const Signal& f, const Kernel& chi, double eps);

// Residual of the identity -eps d/d(eps) S_eps f = W_mu f(., eps) with
// mu built from chi, measured with a centered difference in eps. Returns the
// worst over the ladder of max|LHS - RHS| / sup|RHS|.
double scale_derivative_bridge_residual(const Signal& f, const Kernel& chi,
                                        std::span<const double> eps_ladder,
                                        std::span<const double> positions,
                                        double fd_step_factor = 1.0 / 1024.0);

}  // namespace zygmund
