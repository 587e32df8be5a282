#include "zygmund/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <variant>

#include "zygmund/errors.hpp"
#include "zygmund/numerics.hpp"

namespace zygmund {

namespace {

constexpr double kBlindnessRelativeFloor = 1e-9;

// Shared fit over (scale, sup) pairs. An explicit window must retain at
// least five scales; the default window drops the largest octave but falls
// back to the full ladder when that would leave too few points.
RegularityReport fit_sups(const std::vector<std::pair<double, double>>& per_scale,
                          double signal_sup,
                          std::optional<std::pair<double, double>> window,
                          FitMethod method) {
  if (per_scale.empty()) throw InvalidParameter("exponent fit: no scales");
  RegularityReport report;
  report.method = method;
  report.per_scale = per_scale;

  double top = 0.0;
  for (const auto& [r, s] : per_scale) top = std::max(top, r);
  std::pair<double, double> win;
  bool default_window = !window.has_value();
  win = window.value_or(std::pair<double, double>{0.0, top / 2.0});

  auto windowed = [&](const std::pair<double, double>& w) {
    std::vector<std::pair<double, double>> kept;
    for (const auto& p : per_scale)
      if (p.first >= w.first * (1.0 - 1e-12) && p.first <= w.second * (1.0 + 1e-12))
        kept.push_back(p);
    return kept;
  };
  auto kept = windowed(win);
  if (kept.size() < 5) {
    if (!default_window)
      throw InvalidParameter("exponent fit: window keeps fewer than five scales");
    kept = per_scale;
    report.notes += "window fallback: full ladder (largest-octave discard left too few "
                    "scales); ";
  } else if (default_window) {
    report.notes += "window: largest octave discarded; ";
  }

  bool all_tiny = true, any_zero = false;
  for (const auto& [r, s] : kept) {
    if (s == 0.0) any_zero = true;
    if (s > kBlindnessRelativeFloor * signal_sup) all_tiny = false;
  }
  double lo = kept.front().first, hi = kept.front().first;
  for (const auto& [r, s] : kept) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  report.fit_window = {lo, hi};
  if (any_zero || all_tiny) {
    report.outcome = RegularityReport::Outcome::InfinitelyRegular;
    std::ostringstream os;
    os << "all windowed sups at or below " << kBlindnessRelativeFloor
       << " of the signal sup: transform is blind to this signal";
    report.notes += os.str();
    return report;
  }

  std::vector<double> lr, ls;
  for (const auto& [r, s] : kept) {
    lr.push_back(std::log(r));
    ls.push_back(std::log(s));
  }
  const LineFit fit = fit_line(lr, ls);
  report.outcome = RegularityReport::Outcome::Fit;
  report.fitted_s = fit.slope;
  report.slope_stderr = fit.stderr_slope;
  report.residual_max = fit.residual_max;
  return report;
}

double interior_sup_samples(const Signal& f, double margin) {
  const double lo = f.x0 + margin - 1e-12 * f.span();
  const double hi = f.x_end() - margin + 1e-12 * f.span();
  double sup = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.x_at(i);
    if (x < lo || x > hi) continue;
    any = true;
    sup = std::max(sup, std::abs(f.samples[i]));
  }
  if (!any) throw InvalidParameter("norm: margin excludes every sample");
  return sup;
}

}  // namespace

RegularityReport estimate_exponent(const ScaleField& field,
                                   std::optional<std::pair<double, double>> window) {
  if (field.scales.size() < 5)
    throw InvalidParameter("exponent fit: need at least five scales");
  std::vector<std::pair<double, double>> per_scale;
  for (std::size_t j = 0; j < field.scales.size(); ++j)
    per_scale.emplace_back(field.scales[j], field.sup_per_scale[j]);
  return fit_sups(per_scale, field.signal_sup, window, FitMethod::WaveletSup);
}

Kernel default_estimation_wavelet() {
  return wavelet_from_mollifier(bump_mollifier(1.0, 1, 4097));
}

RegularityReport estimate_signal(const Signal& f, const Kernel& g,
                                 const EstimateOptions& opts) {
  f.validate();
  const double r_max = opts.r_max > 0.0 ? opts.r_max : f.span() / 16.0;
  const double r_min = opts.r_min > 0.0 ? opts.r_min : scale_floor(f);
  if (!(r_min < r_max))
    throw InvalidParameter("estimate: scale range is empty; signal too short?");
  if (opts.scales_per_octave < 1)
    throw InvalidParameter("estimate: scales per octave must be positive");
  std::vector<double> ladder = geometric_ladder(r_max, r_min, opts.scales_per_octave);
  if (ladder.size() < 6)
    throw InvalidParameter(
        "estimate: fewer than six scales between the range ends; widen the range or "
        "raise scales per octave");
  const ScaleField field =
      cwt(f, g, std::move(ladder), grid_positions(f, opts.position_stride), opts.margin);
  return estimate_exponent(field, opts.window);
}

RegularityReport estimate_multiplier(const Signal& f, const SpectralPair& pair,
                                     std::span<const double> t_ladder,
                                     double taper_fraction,
                                     std::optional<std::pair<double, double>> window) {
  f.validate();
  if (t_ladder.size() < 5)
    throw InvalidParameter("multiplier estimate: need at least five scales");
  const bool periodic = std::holds_alternative<PeriodicExtension>(f.extension);
  const double margin = periodic ? 0.0 : taper_fraction * f.span();
  std::vector<std::pair<double, double>> per_scale;
  for (double t : t_ladder) {
    const Signal band = fourier_multiplier(f, pair, t, MultiplierKind::Psi, taper_fraction);
    per_scale.emplace_back(t, interior_sup_samples(band, margin));
  }
  std::sort(per_scale.begin(), per_scale.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return fit_sups(per_scale, f.sup_abs(), window, FitMethod::MultiplierSup);
}

RegularityReport estimate_embedded(const Signal& f, const Kernel& chi,
                                   const ScalingFn& gamma,
                                   std::span<const double> eps_ladder,
                                   std::span<const int> alphas) {
  if (alphas.empty()) throw InvalidParameter("embedded estimate: no derivative orders");
  const Representative rep =
      embed(f, chi, gamma, std::vector<double>(eps_ladder.begin(), eps_ladder.end()));
  RegularityReport report;
  report.method = FitMethod::EmbeddedDerivative;
  double s_acc = 0.0, stderr_acc = 0.0;
  std::ostringstream notes;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const GrowthReport growth = classify_growth(rep, alphas[k]);
    s_acc += static_cast<double>(alphas[k]) - growth.fitted_exponent;
    stderr_acc += growth.slope_stderr;
    report.residual_max = std::max(report.residual_max, growth.residual_max);
    notes << "order " << alphas[k] << ": slope " << growth.fitted_exponent << "; ";
    if (k == 0)
      for (const auto& p : growth.per_eps)
        report.per_scale.emplace_back(1.0 / p.gamma, p.sup);
  }
  report.outcome = RegularityReport::Outcome::Fit;
  report.fitted_s = s_acc / static_cast<double>(alphas.size());
  report.slope_stderr = stderr_acc / static_cast<double>(alphas.size());
  double lo = report.per_scale.front().first, hi = lo;
  for (const auto& p : report.per_scale) {
    lo = std::min(lo, p.first);
    hi = std::max(hi, p.first);
  }
  report.fit_window = {lo, hi};
  report.notes = notes.str();
  return report;
}

std::pair<double, RegularityReport> zygmund_norm_inhom(
    const Signal& u, const SpectralPair& pair, double s,
    std::span<const double> t_ladder, bool allow_non_theorem_grade) {
  if (!pair.theorem_grade && !allow_non_theorem_grade)
    throw ContractError(
        "inhomogeneous norm: spectral pair profile is not theorem grade (needs "
        "plateau end <= 1/4 and support end >= 4); pass the override to proceed");
  if (t_ladder.size() < 2) throw InvalidParameter("inhomogeneous norm: ladder too short");
  RegularityReport report = estimate_multiplier(u, pair, t_ladder);
  const bool periodic = std::holds_alternative<PeriodicExtension>(u.extension);
  const double margin = periodic ? 0.0 : 0.10 * u.span();
  double t_max = 0.0;
  for (double t : t_ladder) t_max = std::max(t_max, t);
  const Signal low = fourier_multiplier(u, pair, t_max, MultiplierKind::Phi);
  const double low_norm = interior_sup_samples(low, margin);
  report.low_pass_norm = low_norm;
  double norm = low_norm;
  for (const auto& [t, sup] : report.per_scale)
    norm = std::max(norm, std::pow(t, -s) * sup);
  report.notes += "low-pass taken at the largest ladder scale; ";
  return {norm, std::move(report)};
}

double zygmund_norm_hom(const Signal& u, const SpectralPair& pair, double s,
                        std::span<const double> t_ladder, bool allow_non_theorem_grade) {
  if (!pair.theorem_grade && !allow_non_theorem_grade)
    throw ContractError(
        "homogeneous norm: spectral pair profile is not theorem grade (needs "
        "plateau end <= 1/4 and support end >= 4); pass the override to proceed");
  const RegularityReport report = estimate_multiplier(u, pair, t_ladder);
  double norm = 0.0;
  for (const auto& [t, sup] : report.per_scale)
    norm = std::max(norm, std::pow(t, -s) * sup);
  return norm;
}

MembershipVerdict check_membership(const Signal& u, const Kernel& chi, const Kernel& mu,
                                   double s, std::vector<double> scale_ladder,
                                   double tolerance) {
  if (scale_ladder.empty()) throw InvalidParameter("membership: empty scale ladder");
  MembershipVerdict verdict;
  double r_top = 0.0;
  for (double r : scale_ladder) r_top = std::max(r_top, r);
  const Signal low = smooth(u, chi, r_top);
  const bool periodic = std::holds_alternative<PeriodicExtension>(u.extension);
  verdict.low_pass_norm =
      interior_sup_samples(low, periodic ? 0.0 : r_top * chi.reach());

  const ScaleField field = cwt(u, mu, std::move(scale_ladder), grid_positions(u));
  verdict.report = estimate_exponent(field);
  if (verdict.report.outcome == RegularityReport::Outcome::InfinitelyRegular) {
    verdict.fitted_s = std::numeric_limits<double>::infinity();
    verdict.consistent = true;
    verdict.margin = tolerance;
    return verdict;
  }
  verdict.fitted_s = *verdict.report.fitted_s;
  verdict.margin = tolerance - std::abs(verdict.fitted_s - s);
  verdict.consistent = verdict.margin >= 0.0;
  return verdict;
}

ZygmundTestResult colombeau_zygmund_test(const Representative& rep, double s, int alpha_max,
                                         double slope_tolerance) {
  if (!(s > 0.0)) throw InvalidParameter("membership test: s must be positive");
  const int alpha_start = static_cast<int>(std::floor(s)) + 1;
  if (alpha_max < alpha_start)
    throw InvalidParameter(
        "membership test: highest derivative order must exceed the claimed exponent");
  ZygmundTestResult result;
  result.s = s;
  bool all_pass = true;
  for (int alpha = alpha_start; alpha <= alpha_max; ++alpha) {
    GrowthReport growth;
    try {
      growth = classify_growth(rep, alpha);
    } catch (const ResolutionError&) {
      result.partial = true;
      break;
    }
    AlphaVerdict verdict;
    verdict.alpha = alpha;
    verdict.slope = growth.fitted_exponent;
    verdict.bound = static_cast<double>(alpha) - s;
    verdict.pass = growth.classification.kind != GrowthClass::Kind::Unclassifiable &&
                   verdict.slope <= verdict.bound + slope_tolerance;
    all_pass = all_pass && verdict.pass;
    verdict.growth = std::move(growth);
    result.per_alpha.push_back(std::move(verdict));
    result.alpha_attempted = alpha;
  }
  result.pass = !result.per_alpha.empty() && all_pass;
  return result;
}

}  // namespace zygmund
