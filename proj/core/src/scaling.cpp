#include "zygmund/scaling.hpp"

#include <cmath>

#include "zygmund/errors.hpp"
#include "zygmund/numerics.hpp"

namespace zygmund {

double ScalingFn::operator()(double eps) const {
  if (!(eps > 0.0) || !(eps < 1.0)) throw InvalidParameter("scaling: eps must lie in (0, 1)");
  switch (kind) {
    case Kind::Log:
      return std::log(1.0 / eps);
    case Kind::Power:
      return std::pow(eps, -param);
    case Kind::PowerOfLog:
      return std::pow(std::log(1.0 / eps), param);
  }
  throw InvalidParameter("scaling: unknown kind");
}

ScalingFn make_scaling(ScalingFn::Kind kind, double param) {
  if (kind == ScalingFn::Kind::Power) {
    if (!(param > 0.0)) throw ScalingError("make_scaling: power must be positive");
    if (param > 1.0)
      throw ScalingError("make_scaling: power above 1 grows faster than 1/eps, inadmissible");
  }
  if (kind == ScalingFn::Kind::PowerOfLog && !(param > 0.0))
    throw ScalingError("make_scaling: log power must be positive");
  return ScalingFn{kind, param};
}

AdmissibilityCertificate check_admissible(const ScalingFn& g) {
  AdmissibilityCertificate cert;
  cert.eps_grid = log_spaced(1e-6, 1e-1, 26);
  cert.gamma_values.reserve(cert.eps_grid.size());
  std::vector<double> log_inv_eps, log_eps_gamma;
  for (double eps : cert.eps_grid) {
    const double gamma = g(eps);
    cert.gamma_values.push_back(gamma);
    cert.max_eps_gamma = std::max(cert.max_eps_gamma, eps * gamma);
    cert.max_doubling_ratio = std::max(cert.max_doubling_ratio, g(eps / 2.0) / gamma);
    log_inv_eps.push_back(std::log(1.0 / eps));
    log_eps_gamma.push_back(std::log(eps * gamma));
  }
  cert.growth_trend = fit_line(log_inv_eps, log_eps_gamma).slope;
  cert.divergent = cert.gamma_values.front() > cert.gamma_values.back();
  cert.admissible =
      cert.growth_trend <= 0.01 && cert.divergent && cert.max_doubling_ratio <= 4.0;
  return cert;
}

}  // namespace zygmund
