#include "zygmund/transform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <variant>

#include "zygmund/errors.hpp"

namespace zygmund {

namespace {

// Quadrature row for int f(x + k*h) * weight_k: weight_k = g(s*k*h/r) * h/r.
// The node spacing is the signal grid step, refined when the rescaled kernel
// would otherwise be sampled by fewer than ~256 nodes. Coarser rows alias the
// kernel tails badly enough (~1e-5 in the zeroth row moment at 65 nodes) to
// break polynomial annihilation by vanishing-moment wavelets.
struct QuadRow {
  long half_width = 0;  // offsets -half_width .. half_width
  double h = 0.0;
  std::vector<double> weights;
};

QuadRow kernel_row(const Kernel& g, double r, double dx_f, double arg_sign) {
  QuadRow q;
  const double reach = g.reach();
  // Refine the node spacing by an integer (power-of-two) division of the
  // signal grid step whenever the rescaled kernel would otherwise carry fewer
  // than ~256 nodes. Integer subdivision keeps the sampling offsets fixed
  // while the scale varies infinitesimally, so interpolation error cancels in
  // scale derivatives instead of being amplified by the difference step.
  const double need = 256.0 * dx_f / (r * reach);
  const std::uint64_t m =
      need <= 1.0 ? 1
                  : std::bit_ceil(static_cast<std::uint64_t>(std::ceil(need - 1e-9)));
  q.h = dx_f / static_cast<double>(m);
  q.half_width = static_cast<long>(std::ceil(r * reach / q.h - 1e-9));
  q.weights.resize(static_cast<std::size_t>(2 * q.half_width + 1));
  for (long k = -q.half_width; k <= q.half_width; ++k) {
    const double u = arg_sign * static_cast<double>(k) * q.h / r;
    q.weights[static_cast<std::size_t>(k + q.half_width)] = g.eval(u) * (q.h / r);
  }
  return q;
}

bool grid_aligned(const Signal& f, std::span<const double> positions,
                  std::vector<long>& index_of) {
  index_of.resize(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const double t = (positions[i] - f.x0) / f.dx;
    const double m = std::round(t);
    if (std::abs(t - m) > 1e-9) return false;
    index_of[i] = static_cast<long>(m);
  }
  return !positions.empty();
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int j = 1; j <= k; ++j) v *= static_cast<double>(n - k + j) / static_cast<double>(j);
  return v;
}

}  // namespace

double scale_floor(const Signal& f) { return 4.0 * f.dx; }

std::vector<double> grid_positions(const Signal& f, std::size_t stride) {
  if (stride == 0) throw InvalidParameter("grid_positions: stride must be positive");
  std::vector<double> out;
  out.reserve(f.size() / stride + 1);
  for (std::size_t i = 0; i < f.size(); i += stride) out.push_back(f.x_at(i));
  return out;
}

ScaleField cwt(const Signal& f, const Kernel& g, std::vector<double> scales,
               std::vector<double> positions, std::optional<double> margin) {
  f.validate();
  if (g.samples.empty()) throw InvalidParameter("cwt: kernel has no samples");
  if (scales.empty()) throw InvalidParameter("cwt: no scales given");
  if (positions.empty()) throw InvalidParameter("cwt: no positions given");

  std::sort(scales.begin(), scales.end(), std::greater<>());
  scales.erase(std::unique(scales.begin(), scales.end(),
                           [](double a, double b) { return std::abs(a - b) <= 1e-12 * a; }),
               scales.end());
  const double floor = scale_floor(f);
  if (scales.back() < floor * (1.0 - 1e-12)) {
    std::vector<double> offending, admissible;
    for (double r : scales) (r < floor * (1.0 - 1e-12) ? offending : admissible).push_back(r);
    throw ScaleFloorError("cwt: scales below the resolution floor of the sampling grid",
                          std::move(offending), std::move(admissible));
  }

  ScaleField out;
  out.scales = scales;
  out.positions = positions;
  out.domain_lo = f.x0;
  out.domain_hi = f.x_end();
  out.signal_sup = f.sup_abs();
  const bool periodic = std::holds_alternative<PeriodicExtension>(f.extension);
  out.interior_margin = margin.value_or(periodic ? 0.0 : scales.front() * g.reach());

  std::vector<long> index_of;
  const bool aligned = grid_aligned(f, positions, index_of);

  // one padded copy of the extended signal serves every grid-step row
  std::vector<double> ext;
  long ext_lo = 0;
  if (aligned) {
    long pad = 0;
    for (double r : scales)
      pad = std::max(pad, static_cast<long>(std::ceil(r * g.reach() / f.dx - 1e-9)));
    const auto [mn, mx] = std::minmax_element(index_of.begin(), index_of.end());
    ext_lo = *mn - pad;
    const long ext_hi = *mx + pad;
    ext.resize(static_cast<std::size_t>(ext_hi - ext_lo + 1));
    for (long m = ext_lo; m <= ext_hi; ++m)
      ext[static_cast<std::size_t>(m - ext_lo)] = f.sample_extended(m);
  }

  out.rows.reserve(scales.size());
  for (double r : scales) {
    const QuadRow q = kernel_row(g, r, f.dx, +1.0);
    std::vector<double> row(positions.size());
    if (aligned && q.h == f.dx) {
      const std::size_t len = q.weights.size();
      for (std::size_t i = 0; i < positions.size(); ++i) {
        const double* base = ext.data() + (index_of[i] - q.half_width - ext_lo);
        double acc = 0.0;
        for (std::size_t k = 0; k < len; ++k) acc += base[k] * q.weights[k];
        row[i] = acc;
      }
    } else {
      for (std::size_t i = 0; i < positions.size(); ++i) {
        double acc = 0.0;
        for (long k = -q.half_width; k <= q.half_width; ++k)
          acc += f.eval(positions[i] + static_cast<double>(k) * q.h) *
                 q.weights[static_cast<std::size_t>(k + q.half_width)];
        row[i] = acc;
      }
    }
    out.rows.push_back(std::move(row));
  }

  const double lo = out.domain_lo + out.interior_margin - 1e-12 * f.span();
  const double hi = out.domain_hi - out.interior_margin + 1e-12 * f.span();
  bool any_interior = false;
  out.sup_per_scale.assign(scales.size(), 0.0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < lo || positions[i] > hi) continue;
    any_interior = true;
    for (std::size_t j = 0; j < scales.size(); ++j)
      out.sup_per_scale[j] = std::max(out.sup_per_scale[j], std::abs(out.rows[j][i]));
  }
  if (!any_interior)
    throw InvalidParameter("cwt: interior margin excludes every requested position");
  return out;
}

Signal smooth(const Signal& f, const Kernel& chi, double eps) {
  f.validate();
  if (chi.kind != KernelKind::Mollifier)
    throw KindError("smooth: kernel must be a mollifier");
  if (eps < scale_floor(f) * (1.0 - 1e-12))
    throw ScaleFloorError("smooth: scale below the resolution floor of the sampling grid",
                          {eps}, {});

  const QuadRow q = kernel_row(chi, eps, f.dx, -1.0);
  Signal out;
  out.x0 = f.x0;
  out.dx = f.dx;
  out.samples.resize(f.size());

  if (const auto* an = std::get_if<AnalyticExtension>(&f.extension)) {
    // closed form: the quadrature applied to a polynomial is again a
    // polynomial whose coefficients mix through the row's own moments, so
    // the output extension reproduces the quadrature exactly everywhere
    const int degree = static_cast<int>(an->coeffs.size()) - 1;
    std::vector<double> row_moment(an->coeffs.size(), 0.0);
    for (long k = -q.half_width; k <= q.half_width; ++k) {
      const double w = q.weights[static_cast<std::size_t>(k + q.half_width)];
      double p = 1.0;
      for (int s = 0; s <= degree; ++s) {
        row_moment[static_cast<std::size_t>(s)] += p * w;
        p *= static_cast<double>(k) * q.h;
      }
    }
    std::vector<double> coeffs(an->coeffs.size(), 0.0);
    for (int i = 0; i <= degree; ++i)
      for (int t = i; t <= degree; ++t)
        coeffs[static_cast<std::size_t>(i)] += an->coeffs[static_cast<std::size_t>(t)] *
                                               binomial(t, i) *
                                               row_moment[static_cast<std::size_t>(t - i)];
    out.extension = AnalyticExtension{std::move(coeffs)};
    for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] = out.eval(out.x_at(i));
    return out;
  }

  if (q.h == f.dx) {
    const long n = static_cast<long>(f.size());
    std::vector<double> ext(static_cast<std::size_t>(n + 2 * q.half_width));
    for (long m = -q.half_width; m < n + q.half_width; ++m)
      ext[static_cast<std::size_t>(m + q.half_width)] = f.sample_extended(m);
    const std::size_t len = q.weights.size();
    for (long i = 0; i < n; ++i) {
      const double* base = ext.data() + i;
      double acc = 0.0;
      for (std::size_t k = 0; k < len; ++k) acc += base[k] * q.weights[k];
      out.samples[static_cast<std::size_t>(i)] = acc;
    }
  } else {
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
      const double x = f.x_at(i);
      double acc = 0.0;
      for (long k = -q.half_width; k <= q.half_width; ++k)
        acc += f.eval(x + static_cast<double>(k) * q.h) *
               q.weights[static_cast<std::size_t>(k + q.half_width)];
      out.samples[i] = acc;
    }
  }

  double row_sum = 0.0;
  for (double w : q.weights) row_sum += w;
  if (const auto* clr = std::get_if<ConstantLeftRight>(&f.extension))
    out.extension = ConstantLeftRight{clr->cl * row_sum, clr->cr * row_sum};
  else if (std::holds_alternative<PeriodicExtension>(f.extension))
    out.extension = PeriodicExtension{};
  else
    out.extension = ZeroExtension{};
  return out;
}

double scale_derivative_bridge_residual(const Signal& f, const Kernel& chi,
                                        std::span<const double> eps_ladder,
                                        std::span<const double> positions,
                                        double fd_step_factor) {
  if (eps_ladder.empty() || positions.empty())
    throw InvalidParameter("bridge residual: empty ladder or positions");
  const Kernel mu = wavelet_from_mollifier(chi);
  const std::vector<double> pos(positions.begin(), positions.end());
  double worst = 0.0;
  for (double eps : eps_ladder) {
    const double delta = eps * fd_step_factor;
    const Signal above = smooth(f, chi, eps + delta);
    const Signal below = smooth(f, chi, eps - delta);
    const ScaleField w = cwt(f, mu, {eps}, pos);
    double sup = 0.0;
    for (double v : w.rows[0]) sup = std::max(sup, std::abs(v));
    double resid = 0.0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const double lhs = -eps * (above.eval(pos[i]) - below.eval(pos[i])) / (2.0 * delta);
      resid = std::max(resid, std::abs(lhs - w.rows[0][i]));
    }
    if (sup == 0.0) sup = std::max(w.signal_sup, 1.0) * 1e-300;
    worst = std::max(worst, resid / sup);
  }
  return worst;
}

}  // namespace zygmund
