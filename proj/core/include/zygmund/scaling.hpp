#pragma once

#include <vector>

namespace zygmund {

// Admissible scaling gamma: divergent as eps -> 0, gamma(eps) = O(1/eps),
// and stable under halving of eps. Kinds:
//   Log        gamma(eps) = log(1/eps)
//   Power      gamma(eps) = eps^(-param), 0 < param <= 1
//   PowerOfLog gamma(eps) = log(1/eps)^param, param > 0
struct ScalingFn {
  enum class Kind { Log, Power, PowerOfLog };
  Kind kind = Kind::Log;
  double param = 1.0;

  double operator()(double eps) const;
};

struct AdmissibilityCertificate {
  bool admissible = false;
  // max of eps*gamma(eps) over the certification grid
  double max_eps_gamma = 0;
  // slope of log(eps*gamma(eps)) against log(1/eps); positive slope means
  // eps*gamma is unbounded as eps -> 0
  double growth_trend = 0;
  // gamma at the smallest eps exceeds gamma at the largest
  bool divergent = false;
  // max of gamma(eps/2)/gamma(eps) over the grid
  double max_doubling_ratio = 0;
  std::vector<double> eps_grid;
  std::vector<double> gamma_values;
};

// Throws ScalingError for parameterizations that are never admissible
// (Power with param > 1, non-positive parameters).
ScalingFn make_scaling(ScalingFn::Kind kind, double param = 1.0);

// Certifies the three admissibility bounds on a log-spaced grid of eps
// values from 1e-1 down to 1e-6.
AdmissibilityCertificate check_admissible(const ScalingFn& g);

}  // namespace zygmund
