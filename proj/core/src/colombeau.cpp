#include "zygmund/colombeau.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "zygmund/errors.hpp"
#include "zygmund/numerics.hpp"
#include "zygmund/transform.hpp"

namespace zygmund {

namespace {

// alpha-fold centered fourth-order difference of the field at a step of
// m grid cells, returned on the field's own grid (extension-aware).
std::vector<double> fd4_derivative(const Signal& field, int alpha, long m) {
  const long n = static_cast<long>(field.size());
  const long pad = 2 * m * alpha;
  std::vector<double> buf(static_cast<std::size_t>(n + 2 * pad));
  for (long i = 0; i < n + 2 * pad; ++i)
    buf[static_cast<std::size_t>(i)] = field.sample_extended(i - pad);
  const double h = static_cast<double>(m) * field.dx;
  std::vector<double> next;
  long cur = n + 2 * pad;
  for (int a = 0; a < alpha; ++a) {
    next.resize(static_cast<std::size_t>(cur - 4 * m));
    for (long i = 0; i + 4 * m < cur; ++i)
      next[static_cast<std::size_t>(i)] =
          (buf[static_cast<std::size_t>(i)] - 8.0 * buf[static_cast<std::size_t>(i + m)] +
           8.0 * buf[static_cast<std::size_t>(i + 3 * m)] -
           buf[static_cast<std::size_t>(i + 4 * m)]) /
          (12.0 * h);
    buf.swap(next);
    cur -= 4 * m;
  }
  return buf;
}

double interior_sup(const Signal& field, const std::vector<double>& values, double margin) {
  const double lo = field.x0 + margin - 1e-12 * field.span();
  const double hi = field.x_end() - margin + 1e-12 * field.span();
  double sup = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = field.x_at(i);
    if (x < lo || x > hi) continue;
    any = true;
    sup = std::max(sup, std::abs(values[i]));
  }
  if (!any) throw InvalidParameter("growth classification: margin excludes every sample");
  return sup;
}

}  // namespace

Representative embed(const Signal& u, const Kernel& chi, const ScalingFn& gamma,
                     std::vector<double> eps_ladder) {
  u.validate();
  if (chi.kind != KernelKind::Mollifier)
    throw KindError("embed: kernel must be a mollifier");
  if (eps_ladder.empty()) throw InvalidParameter("embed: empty regularization ladder");
  std::sort(eps_ladder.begin(), eps_ladder.end(), std::greater<>());
  eps_ladder.erase(std::unique(eps_ladder.begin(), eps_ladder.end()), eps_ladder.end());

  Representative rep;
  rep.base = u;
  rep.chi = chi;
  rep.gamma = gamma;
  const double floor = scale_floor(u);
  std::vector<double> offending, admissible;
  for (double eps : eps_ladder)
    (1.0 / gamma(eps) < floor * (1.0 - 1e-12) ? offending : admissible).push_back(eps);
  if (!offending.empty())
    throw ScaleFloorError(
        "embed: mollification scales 1/gamma(eps) below the grid resolution floor",
        std::move(offending), std::move(admissible));
  for (double eps : eps_ladder) {
    rep.eps_ladder.push_back(eps);
    rep.gamma_values.push_back(gamma(eps));
    rep.fields.push_back(smooth(u, chi, 1.0 / rep.gamma_values.back()));
  }
  return rep;
}

GrowthReport classify_growth(const Representative& rep, int alpha) {
  if (alpha < 0) throw InvalidParameter("growth classification: alpha must be >= 0");
  if (rep.eps_ladder.size() < 6)
    throw InvalidParameter("growth classification: need a ladder of at least 6 parameters");

  const double dx = rep.base.dx;
  const double reach = rep.chi.reach();
  double r_max = 0.0;
  for (double g : rep.gamma_values) r_max = std::max(r_max, 1.0 / g);
  if (alpha >= 1) {
    for (double g : rep.gamma_values)
      if (1.0 / g < 16.0 * dx * (1.0 - 1e-12))
        throw ResolutionError(
            "growth classification: scale too close to the grid step for stable "
            "derivatives; drop the smallest scales or refine the signal");
  }

  const bool periodic = std::holds_alternative<PeriodicExtension>(rep.base.extension);
  GrowthReport report;
  report.alpha = alpha;
  report.method = "sup of order-" + std::to_string(alpha) +
                  " centered fourth-order differences of the mollified family";

  std::vector<double> logg, logsup;
  for (std::size_t i = 0; i < rep.eps_ladder.size(); ++i) {
    const double r = 1.0 / rep.gamma_values[i];
    const long m = std::max(1L, std::lround(r / (16.0 * dx)));
    double sup;
    const double margin =
        periodic ? 0.0
                 : r_max * reach + 2.0 * static_cast<double>(alpha * m) * dx;
    if (alpha == 0) {
      sup = interior_sup(rep.fields[i], rep.fields[i].samples, margin);
    } else {
      const auto deriv = fd4_derivative(rep.fields[i], alpha, m);
      sup = interior_sup(rep.fields[i], deriv, margin);
    }
    report.per_eps.push_back({rep.eps_ladder[i], rep.gamma_values[i], sup});
    if (sup > 0.0) {
      logg.push_back(std::log(rep.gamma_values[i]));
      logsup.push_back(std::log(sup));
    }
  }

  report.decision_rule =
      "unclassifiable if max log-fit residual > 0.75; bounded if slope < 0.1; "
      "gamma power k if |slope - k| <= 0.15 (log-type when the scaling is "
      "logarithmic and k = 1); unbounded otherwise";

  if (logg.size() < 4) {
    if (logg.empty()) {
      report.classification = {GrowthClass::Kind::Bounded, 0};
      report.fitted_exponent = 0.0;
      return report;
    }
    report.classification = {GrowthClass::Kind::Unclassifiable, 0};
    return report;
  }

  const LineFit fit = fit_line(logg, logsup);
  report.fitted_exponent = fit.slope;
  report.slope_stderr = fit.stderr_slope;
  report.residual_max = fit.residual_max;

  if (fit.residual_max > 0.75) {
    report.classification = {GrowthClass::Kind::Unclassifiable, 0};
  } else if (fit.slope < 0.1) {
    report.classification = {GrowthClass::Kind::Bounded, 0};
  } else {
    const int k = static_cast<int>(std::lround(fit.slope));
    if (k >= 1 && std::abs(fit.slope - k) <= 0.15) {
      if (rep.gamma.kind == ScalingFn::Kind::Log && k == 1)
        report.classification = {GrowthClass::Kind::LogType, 1};
      else
        report.classification = {GrowthClass::Kind::GammaType, k};
    } else {
      report.classification = {GrowthClass::Kind::Unbounded, 0};
    }
  }
  return report;
}

double verify_inhom_identity(const Signal& u, const Kernel& chi, double gamma,
                             std::size_t quad_nodes) {
  if (!(gamma > 1.0))
    throw InvalidParameter("inhomogeneous identity: gamma must exceed 1");
  if (quad_nodes < 8)
    throw InvalidParameter("inhomogeneous identity: too few quadrature nodes");
  const Kernel mu = wavelet_from_mollifier(chi);

  const std::size_t stride = std::max<std::size_t>(1, u.size() / 512);
  const std::vector<double> positions = grid_positions(u, stride);

  const double r_lo = 1.0 / gamma;
  std::vector<double> ladder = log_spaced(r_lo, 1.0, quad_nodes);
  std::vector<double> tau(ladder.size()), w(ladder.size());
  for (std::size_t i = 0; i < ladder.size(); ++i) tau[i] = std::log(ladder[i]);
  w.front() = 0.5 * (tau[1] - tau[0]);
  w.back() = 0.5 * (tau[tau.size() - 1] - tau[tau.size() - 2]);
  for (std::size_t i = 1; i + 1 < tau.size(); ++i) w[i] = 0.5 * (tau[i + 1] - tau[i - 1]);

  std::vector<double> descending(ladder.rbegin(), ladder.rend());
  const ScaleField field = cwt(u, mu, descending, positions);

  const Signal fine = smooth(u, chi, r_lo);
  const Signal base = smooth(u, chi, 1.0);

  double resid = 0.0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    double acc = base.eval(positions[i]);
    for (std::size_t jm = 0; jm < ladder.size(); ++jm) {
      // rows are stored at descending scales; ladder index jm ascends
      const std::size_t j = ladder.size() - 1 - jm;
      acc += w[jm] * field.rows[j][i];
    }
    resid = std::max(resid, std::abs(fine.eval(positions[i]) - acc));
  }
  const double sup = u.sup_abs();
  return sup > 0.0 ? resid / sup : resid;
}

double verify_hom_identity(const Signal& u, const Kernel& chi, int alpha, double gamma) {
  if (alpha < 1) throw InvalidParameter("homogeneous identity: alpha must be >= 1");
  if (!(gamma > 1.0))
    throw InvalidParameter("homogeneous identity: gamma must exceed 1");
  const double r = 1.0 / gamma;
  const Kernel chi_alpha = derivative_wavelet(chi, alpha);

  const Signal field = smooth(u, chi, r);
  const auto lhs = fd4_derivative(field, alpha, 1);

  const std::vector<double> positions = grid_positions(u);
  const ScaleField rhs = cwt(u, chi_alpha, {r}, positions);
  const double scale_pow = std::pow(gamma, alpha);

  const double lo = rhs.domain_lo + rhs.interior_margin;
  const double hi = rhs.domain_hi - rhs.interior_margin;
  double resid = 0.0, sup = 0.0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < lo || positions[i] > hi) continue;
    const double right = scale_pow * rhs.rows[0][i];
    sup = std::max(sup, std::abs(right));
    resid = std::max(resid, std::abs(lhs[i] - right));
  }
  if (sup == 0.0) return resid;
  return resid / sup;
}

}  // namespace zygmund
