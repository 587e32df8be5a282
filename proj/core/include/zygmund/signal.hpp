#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zygmund {

// Out-of-domain policies. Constant extension carries the two edge values;
// a continuous construction keeps cl == samples.front(), cr == samples.back().
struct ConstantLeftRight {
  double cl = 0;
  double cr = 0;
};

struct ZeroExtension {};

// The grid period is span() = dx*(n-1); the last sample repeats the first
// one period later.
struct PeriodicExtension {};

// Evaluation anywhere goes through the stored polynomial coefficients.
// Polynomials grow, so constant/zero/periodic policies would all misstate
// them; this keeps convolutions against polynomial inputs exact.
struct AnalyticExtension {
  std::vector<double> coeffs;  // c[0] + c[1] x + c[2] x^2 + ...
};

using Extension =
    std::variant<ConstantLeftRight, ZeroExtension, PeriodicExtension, AnalyticExtension>;

struct Signal {
  std::vector<double> samples;
  double x0 = 0;
  double dx = 1;
  Extension extension = ZeroExtension{};

  std::size_t size() const { return samples.size(); }
  double x_at(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
  double x_end() const { return x_at(samples.empty() ? 0 : samples.size() - 1); }
  double span() const { return x_end() - x0; }

  // Linear interpolation between nodes, exact at nodes; extension policy
  // outside the sampled domain. Analytic signals evaluate the polynomial
  // everywhere.
  double eval(double x) const;

  // Extended sample at integer grid offset m (m may lie outside [0, n)).
  double sample_extended(long m) const;

  double sup_abs() const;

  // Throws InvalidParameter when structural invariants fail.
  void validate() const;
};

struct GroundTruth {
  std::optional<double> exponent;
  std::string description;
};

}  // namespace zygmund
