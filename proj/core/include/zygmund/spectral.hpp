#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zygmund/kernel.hpp"

namespace zygmund {

// Frequency-domain cutoff pair. phi(xi) = phi0(|xi|) is 1 on |xi| <= a,
// 0 on |xi| >= b, and strictly decreasing in between along a smooth-step
// profile; psi(xi) = -xi * phi'(xi) is even, nonnegative, and supported on
// a <= |xi| <= b. chi_kernel and mu_kernel are the inverse Fourier
// transforms of phi and psi (convention: forward transform integral of
// f(x) e^{-i x xi} dx), truncated in space with the truncation recorded.
struct SpectralPair {
  double a = 0.25;
  double b = 4.0;
  std::string phi0_profile;
  std::vector<double> freqs;
  std::vector<double> phi_samples;
  std::vector<double> psi_samples;
  Kernel chi_kernel;
  Kernel mu_kernel;
  // a <= 1/4 and b >= 4; norms built from pairs without this property are
  // not asserted equivalent to the theorem-grade ones.
  bool theorem_grade = false;

  double phi0(double t) const;             // scalar profile on t >= 0
  double phi0_derivative(double t) const;  // d/dt phi0
  double phi(double xi) const { return phi0(xi < 0 ? -xi : xi); }
  double psi(double xi) const;
};

SpectralPair spectral_pair(double a, double b, std::size_t n_freq);

}  // namespace zygmund
