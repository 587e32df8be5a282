#pragma once

#include <span>

#include "zygmund/signal.hpp"
#include "zygmund/spectral.hpp"

namespace zygmund {

enum class MultiplierKind { Phi, Psi };

// Applies the frequency multiplier phi(t*xi) (low-pass) or psi(t*xi)
// (band-pass at scale t) to the signal via the DFT. Periodic signals use
// their exact period; other extensions are cosine-tapered over the given
// fraction of the span on each side before transforming, so values within
// the tapered margins are not meaningful.
Signal fourier_multiplier(const Signal& f, const SpectralPair& pair, double t,
                          MultiplierKind which, double taper_fraction = 0.10);

struct CalderonResult {
  Signal reconstruction;
  bool coverage_warning = false;  // multiplier ladder cannot reach the grid Nyquist
  double t_max = 0.0;             // magnification 1 / min(scale)
};

// Discretizes u ~ phi(s_max D)u + int_{s_min}^{s_max} psi(sD)u ds/s with a
// log-trapezoid rule over the given scale ladder, accumulating the combined
// multiplier spectrally so one transform pair suffices. Content below
// frequency a/s_min is reconstructed; the warning flags ladders whose
// transition band ends below the Nyquist frequency.
CalderonResult calderon_reconstruct(const Signal& f, const SpectralPair& pair,
                                    std::span<const double> scales,
                                    double taper_fraction = 0.10);

}  // namespace zygmund
