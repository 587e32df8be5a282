#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zygmund/colombeau.hpp"
#include "zygmund/kernel.hpp"
#include "zygmund/multiplier.hpp"
#include "zygmund/scaling.hpp"
#include "zygmund/signal.hpp"
#include "zygmund/spectral.hpp"
#include "zygmund/transform.hpp"

namespace zygmund {

enum class FitMethod { WaveletSup, MultiplierSup, EmbeddedDerivative };

struct RegularityReport {
  enum class Outcome { Fit, InfinitelyRegular };
  Outcome outcome = Outcome::Fit;
  std::optional<double> fitted_s;               // slope of log sup vs log scale
  std::pair<double, double> fit_window{0, 0};   // scales actually fitted
  double slope_stderr = 0.0;
  double residual_max = 0.0;
  std::vector<std::pair<double, double>> per_scale;  // (scale, sup)
  std::optional<double> low_pass_norm;
  FitMethod method = FitMethod::WaveletSup;
  std::string notes;
};

// Fits the decay exponent of sup-per-scale against scale. The default window
// discards the largest octave, where coefficients still feel the overall
// signal envelope rather than its local oscillation. Signals the transform
// cannot see at all (every windowed sup at the relative floor) are reported
// as infinitely regular instead of fitted.
RegularityReport estimate_exponent(const ScaleField& field,
                                   std::optional<std::pair<double, double>> window = {});

struct EstimateOptions {
  double r_max = 0.0;           // 0: span / 16
  double r_min = 0.0;           // 0: resolution floor of the grid
  int scales_per_octave = 4;
  std::size_t position_stride = 1;
  std::optional<double> margin;
  std::optional<std::pair<double, double>> window;
};

// Compactly supported order-1 wavelet suited to exponents below 2.
Kernel default_estimation_wavelet();

// Wavelet-sup pipeline: geometric scale ladder, transform, exponent fit.
RegularityReport estimate_signal(const Signal& f, const Kernel& g,
                                 const EstimateOptions& opts = {});

// Band-pass multiplier pipeline over an explicit scale ladder.
RegularityReport estimate_multiplier(const Signal& f, const SpectralPair& pair,
                                     std::span<const double> t_ladder,
                                     double taper_fraction = 0.10,
                                     std::optional<std::pair<double, double>> window = {});

// Mollified-family pipeline: for each derivative order alpha the sup of the
// alpha-th derivative grows like gamma^(alpha - s); the estimate averages
// alpha - slope over the given orders.
RegularityReport estimate_embedded(const Signal& f, const Kernel& chi,
                                   const ScalingFn& gamma,
                                   std::span<const double> eps_ladder,
                                   std::span<const int> alphas);

// Discrete inhomogeneous norm: low-pass sup plus sup over the ladder of
// t^(-s) sup|psi(tD)u|. Requires a theorem-grade pair unless overridden.
std::pair<double, RegularityReport> zygmund_norm_inhom(
    const Signal& u, const SpectralPair& pair, double s,
    std::span<const double> t_ladder, bool allow_non_theorem_grade = false);

// Homogeneous counterpart: no low-pass term.
double zygmund_norm_hom(const Signal& u, const SpectralPair& pair, double s,
                        std::span<const double> t_ladder,
                        bool allow_non_theorem_grade = false);

struct MembershipVerdict {
  bool consistent = false;
  double margin = 0.0;     // tolerance minus the exponent discrepancy
  double fitted_s = 0.0;   // +infinity when the transform is blind to u
  double low_pass_norm = 0.0;
  RegularityReport report;
};

// Compares the fitted wavelet exponent against a claimed s.
MembershipVerdict check_membership(const Signal& u, const Kernel& chi, const Kernel& mu,
                                   double s, std::vector<double> scale_ladder,
                                   double tolerance = 0.05);

struct AlphaVerdict {
  int alpha = 0;
  double slope = 0.0;
  double bound = 0.0;  // alpha - s
  bool pass = false;
  GrowthReport growth;
};

struct ZygmundTestResult {
  bool pass = false;
  double s = 0.0;
  int alpha_attempted = 0;
  bool partial = false;  // ladder too coarse to reach every requested order
  std::vector<AlphaVerdict> per_alpha;
};

// Membership test on a mollified family: passes when every derivative order
// alpha > s grows no faster than gamma^(alpha - s), up to the slope tolerance.
ZygmundTestResult colombeau_zygmund_test(const Representative& rep, double s, int alpha_max,
                                         double slope_tolerance = 0.05);

}  // namespace zygmund
