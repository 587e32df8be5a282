#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "zygmund/colombeau.hpp"
#include "zygmund/errors.hpp"
#include "zygmund/generators.hpp"
#include "zygmund/kernel.hpp"
#include "zygmund/scaling.hpp"
#include "zygmund/transform.hpp"

using namespace zygmund;

namespace {

Signal bandlimited(std::size_t n) {
  Signal s;
  s.x0 = 0.0;
  s.dx = 2.0 * std::numbers::pi / static_cast<double>(n - 1);
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = s.x_at(i);
    s.samples[i] = std::cos(3.0 * x) + 0.5 * std::sin(5.0 * x) + 0.25 * std::cos(11.0 * x);
  }
  s.extension = PeriodicExtension{};
  return s;
}

// hand-built family with prescribed per-parameter sups
Representative synthetic(const ScalingFn& gamma, double power) {
  Representative rep;
  rep.chi = bump_mollifier(1.0, 1, 257);
  rep.gamma = gamma;
  for (int j = 2; j <= 9; ++j) rep.eps_ladder.push_back(std::pow(2.0, -j));
  Signal base;
  base.x0 = 0.0;
  base.dx = 1.0 / 63.0;
  base.samples.assign(64, 1.0);
  base.extension = PeriodicExtension{};
  rep.base = base;
  for (double eps : rep.eps_ladder) {
    const double g = gamma(eps);
    rep.gamma_values.push_back(g);
    Signal f = base;
    for (double& v : f.samples) v = std::pow(g, power);
    rep.fields.push_back(f);
  }
  return rep;
}

}  // namespace

TEST_CASE("scaling kinds evaluate their documented formulas") {
  CHECK(make_scaling(ScalingFn::Kind::Log)(std::exp(-3.0)) == doctest::Approx(3.0));
  CHECK(make_scaling(ScalingFn::Kind::Power, 1.0)(0.125) == doctest::Approx(8.0));
  CHECK(make_scaling(ScalingFn::Kind::Power, 0.5)(0.25) == doctest::Approx(2.0));
  CHECK(make_scaling(ScalingFn::Kind::PowerOfLog, 2.0)(std::exp(-3.0)) == doctest::Approx(9.0));
  CHECK_THROWS_AS(make_scaling(ScalingFn::Kind::Log)(1.5), InvalidParameter);
  CHECK_THROWS_AS(make_scaling(ScalingFn::Kind::Log)(0.0), InvalidParameter);
}

TEST_CASE("scalings that outgrow 1/eps are rejected at construction") {
  CHECK_THROWS_AS(make_scaling(ScalingFn::Kind::Power, 2.0), ScalingError);
  CHECK_THROWS_AS(make_scaling(ScalingFn::Kind::Power, -1.0), ScalingError);
  CHECK_THROWS_AS(make_scaling(ScalingFn::Kind::PowerOfLog, 0.0), ScalingError);
}

TEST_CASE("admissibility certificates separate the scaling families") {
  auto log_cert = check_admissible(make_scaling(ScalingFn::Kind::Log));
  CHECK(log_cert.admissible);
  CHECK(log_cert.divergent);
  CHECK(log_cert.max_doubling_ratio <= 2.0);

  auto pow_cert = check_admissible(make_scaling(ScalingFn::Kind::Power, 1.0));
  CHECK(pow_cert.admissible);
  CHECK(pow_cert.max_eps_gamma == doctest::Approx(1.0));

  // constructed directly to bypass the factory guard
  auto bad_cert = check_admissible(ScalingFn{ScalingFn::Kind::Power, 2.0});
  CHECK_FALSE(bad_cert.admissible);
  CHECK(bad_cert.growth_trend > 0.5);
}

TEST_CASE("embedding stores the scaled mollifications") {
  Signal u = bandlimited(4096);
  Kernel chi = bump_mollifier(1.0, 1, 2049);
  ScalingFn gamma = make_scaling(ScalingFn::Kind::Log);
  std::vector<double> eps{0.05, 0.01, 0.002, 0.0004, 0.00008, 0.000016};
  Representative rep = embed(u, chi, gamma, eps);
  REQUIRE(rep.fields.size() == eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    CHECK(rep.gamma_values[i] == doctest::Approx(gamma(rep.eps_ladder[i])));
    Signal direct = smooth(u, chi, 1.0 / rep.gamma_values[i]);
    CHECK(rep.fields[i].samples[1000] == doctest::Approx(direct.samples[1000]).epsilon(1e-12));
  }
}

TEST_CASE("embedding validates its inputs") {
  Signal u = bandlimited(512);
  Kernel chi = bump_mollifier(1.0, 1, 2049);
  Kernel mu = wavelet_from_mollifier(chi);
  ScalingFn gamma = make_scaling(ScalingFn::Kind::Log);
  CHECK_THROWS_AS(embed(u, mu, gamma, {0.1}), KindError);
  CHECK_THROWS_AS(embed(u, chi, gamma, {}), InvalidParameter);
  CHECK_THROWS_AS(embed(u, chi, gamma, {1.2}), InvalidParameter);
}

TEST_CASE("embedding reports the admissible prefix when the grid saturates") {
  Signal u = bandlimited(512);
  Kernel chi = bump_mollifier(1.0, 1, 2049);
  ScalingFn gamma = make_scaling(ScalingFn::Kind::Power, 1.0);
  // 1/gamma = eps: the smallest entries dive below the 4 dx floor
  const double floor = scale_floor(u);
  std::vector<double> eps{0.3, 0.1, floor / 2.0, floor / 8.0};
  try {
    embed(u, chi, gamma, eps);
    FAIL("expected ScaleFloorError");
  } catch (const ScaleFloorError& e) {
    CHECK(e.admissible_prefix().size() == 2);
    CHECK(e.offending_scales().size() == 2);
  }
}

TEST_CASE("growth classification recovers prescribed power laws") {
  ScalingFn pow1 = make_scaling(ScalingFn::Kind::Power, 1.0);
  auto r2 = classify_growth(synthetic(pow1, 2.0), 0);
  CHECK(r2.classification.kind == GrowthClass::Kind::GammaType);
  CHECK(r2.classification.power == 2);
  CHECK(r2.fitted_exponent == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r2.residual_max <= 1e-9);

  auto r1 = classify_growth(synthetic(pow1, 1.0), 0);
  CHECK(r1.classification.kind == GrowthClass::Kind::GammaType);
  CHECK(r1.classification.power == 1);

  auto r0 = classify_growth(synthetic(pow1, 0.0), 0);
  CHECK(r0.classification.kind == GrowthClass::Kind::Bounded);
}

TEST_CASE("slope one under a logarithmic scaling reads as log-type growth") {
  ScalingFn lg = make_scaling(ScalingFn::Kind::Log);
  auto rpt = classify_growth(synthetic(lg, 1.0), 0);
  CHECK(rpt.classification.kind == GrowthClass::Kind::LogType);
  auto rpt2 = classify_growth(synthetic(lg, 2.0), 0);
  CHECK(rpt2.classification.kind == GrowthClass::Kind::GammaType);
}

TEST_CASE("non-integer growth reads as unbounded") {
  ScalingFn pow1 = make_scaling(ScalingFn::Kind::Power, 1.0);
  auto rpt = classify_growth(synthetic(pow1, 0.55), 0);
  CHECK(rpt.classification.kind == GrowthClass::Kind::Unbounded);
  CHECK(rpt.fitted_exponent == doctest::Approx(0.55).epsilon(1e-6));
}

TEST_CASE("erratic families are refused a classification") {
  ScalingFn pow1 = make_scaling(ScalingFn::Kind::Power, 1.0);
  Representative rep = synthetic(pow1, 1.0);
  for (std::size_t i = 0; i < rep.fields.size(); ++i) {
    const double wobble = (i % 2) ? 40.0 : 1.0 / 40.0;
    for (double& v : rep.fields[i].samples) v *= wobble;
  }
  auto rpt = classify_growth(rep, 0);
  CHECK(rpt.classification.kind == GrowthClass::Kind::Unclassifiable);
  CHECK(rpt.residual_max > 0.75);
}

TEST_CASE("classification records its decision data") {
  ScalingFn pow1 = make_scaling(ScalingFn::Kind::Power, 1.0);
  auto rpt = classify_growth(synthetic(pow1, 1.0), 0);
  CHECK(rpt.alpha == 0);
  REQUIRE(rpt.per_eps.size() == 8);
  CHECK(rpt.per_eps[0].eps == doctest::Approx(0.25));
  CHECK(rpt.per_eps[0].gamma == doctest::Approx(4.0));
  CHECK(rpt.per_eps[0].sup == doctest::Approx(4.0));
  CHECK_FALSE(rpt.decision_rule.empty());
}

TEST_CASE("classification needs a ladder of at least six parameters") {
  ScalingFn pow1 = make_scaling(ScalingFn::Kind::Power, 1.0);
  Representative rep = synthetic(pow1, 1.0);
  rep.eps_ladder.resize(4);
  rep.gamma_values.resize(4);
  rep.fields.resize(4);
  CHECK_THROWS_AS(classify_growth(rep, 0), InvalidParameter);
  CHECK_THROWS_AS(classify_growth(synthetic(pow1, 1.0), -1), InvalidParameter);
}

TEST_CASE("derivative classification refuses scales the grid cannot resolve") {
  Signal u = gen_heaviside(1024, -0.5, 0.5);
  Kernel chi = bump_mollifier(1.0, 1, 2049);
  ScalingFn gamma = make_scaling(ScalingFn::Kind::Log);
  // 1/gamma between 4 dx and 16 dx: embeddable, but too coarse to
  // finite-difference
  std::vector<double> eps;
  for (int j = 0; j < 6; ++j) eps.push_back(std::exp(-(80.0 + 30.0 * j)));
  Representative rep = embed(u, chi, gamma, eps);
  CHECK_NOTHROW(classify_growth(rep, 0));
  CHECK_THROWS_AS(classify_growth(rep, 1), ResolutionError);
}

TEST_CASE("inhomogeneous identity holds on band-limited signals") {
  Signal u = bandlimited(4096);
  Kernel chi = bump_mollifier(1.0, 1, 2049);
  const double resid = verify_inhom_identity(u, chi, 16.0, 200);
  CHECK(resid <= 1e-3);
}

TEST_CASE("inhomogeneous identity residual shrinks with quadrature refinement") {
  Signal u = bandlimited(4096);
  Kernel chi = bump_mollifier(1.0, 1, 2049);
  const double coarse = verify_inhom_identity(u, chi, 16.0, 8);
  const double fine = verify_inhom_identity(u, chi, 16.0, 256);
  CHECK(fine < coarse);
  CHECK(coarse > 1e-6);
}

TEST_CASE("inhomogeneous identity validates parameters") {
  Signal u = bandlimited(512);
  Kernel chi = bump_mollifier(1.0, 1, 2049);
  CHECK_THROWS_AS(verify_inhom_identity(u, chi, 1.0, 100), InvalidParameter);
  CHECK_THROWS_AS(verify_inhom_identity(u, chi, 16.0, 4), InvalidParameter);
}

TEST_CASE("homogeneous identity holds for first and second derivatives") {
  Signal u = bandlimited(8192);
  Kernel chi = bump_mollifier(1.0, 2, 4097);
  CHECK(verify_hom_identity(u, chi, 1, 16.0) <= 1e-3);
  CHECK(verify_hom_identity(u, chi, 2, 16.0) <= 1e-2);
  CHECK_THROWS_AS(verify_hom_identity(u, chi, 0, 16.0), InvalidParameter);
  CHECK_THROWS_AS(verify_hom_identity(u, chi, 1, 0.5), InvalidParameter);
}
