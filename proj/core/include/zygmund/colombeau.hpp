#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zygmund/kernel.hpp"
#include "zygmund/scaling.hpp"
#include "zygmund/signal.hpp"

namespace zygmund {

// A mollified family u_eps = u * chi_{1/gamma(eps)} along a ladder of
// regularization parameters, computed eagerly.
struct Representative {
  Signal base;
  Kernel chi;
  ScalingFn gamma;
  std::vector<double> eps_ladder;    // strictly decreasing
  std::vector<double> gamma_values;  // gamma(eps), increasing for admissible scalings
  std::vector<Signal> fields;        // u smoothed at scale 1/gamma(eps)
};

struct GrowthClass {
  enum class Kind { Bounded, LogType, GammaType, Unbounded, Unclassifiable };
  Kind kind = Kind::Unclassifiable;
  int power = 0;  // gamma exponent for GammaType / LogType
};

struct GrowthPoint {
  double eps = 0.0;
  double gamma = 0.0;
  double sup = 0.0;
};

struct GrowthReport {
  int alpha = 0;
  double fitted_exponent = 0.0;  // slope of log sup vs log gamma
  GrowthClass classification;
  std::vector<GrowthPoint> per_eps;
  double residual_max = 0.0;
  double slope_stderr = 0.0;
  std::string method;
  std::string decision_rule;
};

// Builds the mollified family. Throws ScaleFloorError when 1/gamma(eps)
// falls below the grid's resolution floor, listing the usable prefix.
Representative embed(const Signal& u, const Kernel& chi, const ScalingFn& gamma,
                     std::vector<double> eps_ladder);

// Sup growth of the alpha-th derivative of the family versus gamma. Order
// alpha derivatives use centered fourth-order differences at a step
// proportional to the mollification scale; alpha >= 1 requires every scale
// to exceed 16 grid steps (ResolutionError otherwise).
GrowthReport classify_growth(const Representative& rep, int alpha);

// Residual of u * chi_{1/gamma} = u * chi_1 + int_{1/gamma}^{1} W f(., r) dr/r
// with a log-trapezoid rule over quad_nodes scales, relative to sup|u|.
double verify_inhom_identity(const Signal& u, const Kernel& chi, double gamma,
                             std::size_t quad_nodes);

// Residual of d^alpha/dx^alpha (u * chi_{1/gamma}) = gamma^alpha W u(., 1/gamma)
// for the alpha-th derivative kernel, relative to the sup of the right side.
double verify_hom_identity(const Signal& u, const Kernel& chi, int alpha, double gamma);

}  // namespace zygmund
