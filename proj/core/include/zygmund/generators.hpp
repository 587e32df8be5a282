#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zygmund/signal.hpp"

namespace zygmund {

struct GenResult {
  Signal signal;
  GroundTruth truth;
  // Set when the requested construction depth is finer than the grid step;
  // the returned samples are still exact at the nodes.
  bool grid_saturated = false;
};

// Standard Brownian path on [-half_width, half_width]: cumulative sum of
// independent Gaussian increments with variance dx, first sample 0, held
// constant outside the interval. Known regularity exponent 1/2 (the path
// lies in every class of order s < 1/2).
GenResult gen_brownian(std::size_t n, double half_width, std::uint64_t seed);

// Distribution function of the self-similar singular measure on [0, 2*pi]
// built from `pieces` retained subintervals of relative length `ratio`,
// each carrying measure 1/pieces, iterated `depth` times. 0 left of 0 and
// 1 right of 2*pi. Exponent log(pieces)/|log(ratio)|.
GenResult gen_cantor_staircase(int pieces, double ratio, int depth, std::size_t n);

// Partial sum of sum_j amp^j cos(freq^j * pi * x) on [-pi, pi], periodic.
// Requires 0 < amp < 1, freq > 1, amp*freq >= 1. Exponent log(1/amp)/log(freq).
GenResult gen_weierstrass(double amp, double freq, int terms, std::size_t n);

// Samples of sum_j coeffs[j] x^j on [x_lo, x_hi] with analytic extension.
Signal gen_polynomial(const std::vector<double>& coeffs, std::size_t n, double x_lo, double x_hi);

// 0 for x < 0, 1 for x >= 0; the interval must straddle 0.
Signal gen_heaviside(std::size_t n, double x_lo, double x_hi);

}  // namespace zygmund
