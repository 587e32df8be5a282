#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "zygmund/errors.hpp"
#include "zygmund/kernel.hpp"
#include "zygmund/spectral.hpp"

using namespace zygmund;

namespace {

double normalizer(const Kernel& g, int j) {
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    acc += std::pow(std::abs(g.x_at(i)), j) * std::abs(g.samples[i]);
  return std::max(1.0, acc * g.dx);
}

}  // namespace

TEST_CASE("bump mollifier has unit mass and the requested vanishing moments") {
  for (int order : {1, 2, 3, 4}) {
    Kernel chi = bump_mollifier(1.0, order, 4097);
    auto m = check_moments(chi, order + 1);
    CHECK(std::abs(m[0] - 1.0) <= 1e-10);
    for (int j = 1; j <= order; ++j) CHECK(std::abs(m[j]) <= 1e-8 * normalizer(chi, j));
    CHECK(chi.moment_order == order);
    CHECK(chi.kind == KernelKind::Mollifier);
    CHECK(chi.support_radius.has_value());
    CHECK(*chi.support_radius == doctest::Approx(1.0));
  }
}

TEST_CASE("bump mollifier respects the requested radius") {
  Kernel chi = bump_mollifier(0.25, 1, 2049);
  CHECK(chi.reach() == doctest::Approx(0.25));
  CHECK(chi.eval(0.3) == 0.0);
  CHECK(chi.eval(-0.26) == 0.0);
  auto m = check_moments(chi, 2);
  CHECK(std::abs(m[0] - 1.0) <= 1e-10);
}

TEST_CASE("bump mollifier is even") {
  Kernel chi = bump_mollifier(1.0, 2, 2049);
  const std::size_t n = chi.size();
  for (std::size_t i = 0; i < n / 2; i += 37)
    CHECK(chi.samples[i] == doctest::Approx(chi.samples[n - 1 - i]).epsilon(1e-13));
}

TEST_CASE("refined Simpson quadrature confirms the grid moments") {
  Kernel chi = bump_mollifier(1.0, 2, 4097);
  CHECK(oracles::simpson_moment(chi, 0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(oracles::simpson_moment(chi, 1)) <= 1e-8);
  CHECK(std::abs(oracles::simpson_moment(chi, 2)) <= 1e-8);
  // the first non-vanishing moment agrees between quadratures
  auto m = check_moments(chi, 4);
  CHECK(oracles::simpson_moment(chi, 4) == doctest::Approx(m[4]).epsilon(1e-6));
}

TEST_CASE("kernel eval interpolates the bump accurately between nodes") {
  Kernel chi = bump_mollifier(1.0, 1, 4097);
  // closed form of the underlying profile: c * exp(-1/(1-x^2)) with c fixed
  // by the unit-mass constraint; ratios cancel the constant
  auto profile = [](double x) { return std::exp(-1.0 / (1.0 - x * x)); };
  const double c = chi.eval(0.0) / profile(0.0);
  for (double x : {0.1234, 0.45671, 0.78123}) {
    CHECK(chi.eval(x) == doctest::Approx(c * profile(x)).epsilon(1e-9));
  }
}

TEST_CASE("wavelet built from a mollifier annihilates constants and more") {
  for (int order : {1, 2, 3}) {
    Kernel mu = wavelet_from_mollifier(bump_mollifier(1.0, order, 4097));
    CHECK(mu.kind == KernelKind::Wavelet);
    CHECK(mu.moment_order == order);
    auto m = check_moments(mu, order + 1);
    for (int j = 0; j <= order; ++j) CHECK(std::abs(m[j]) <= 1e-8 * normalizer(mu, j));
  }
}

TEST_CASE("wavelet moments transfer from the mollifier with factor -(k+1)... pattern") {
  // with h = (x chi)' reflected, moment k of the wavelet equals
  // (-1)^(k+1) k times moment k of the mollifier
  Kernel chi = bump_mollifier(1.0, 1, 4097);
  Kernel mu = wavelet_from_mollifier(chi);
  auto mc = check_moments(chi, 3);
  auto mm = check_moments(mu, 3);
  CHECK(mm[2] == doctest::Approx(-2.0 * mc[2]).epsilon(1e-9));
}

TEST_CASE("wavelet construction requires a mollifier") {
  Kernel mu = wavelet_from_mollifier(bump_mollifier(1.0, 1, 2049));
  CHECK_THROWS_AS(wavelet_from_mollifier(mu), KindError);
}

TEST_CASE("derivative wavelets have order alpha minus one") {
  Kernel chi = bump_mollifier(1.0, 4, 8193);
  for (int alpha : {1, 2, 3, 4}) {
    Kernel w = derivative_wavelet(chi, alpha);
    CHECK(w.kind == KernelKind::Wavelet);
    CHECK(w.moment_order == alpha - 1);
    auto m = check_moments(w, alpha);
    for (int j = 0; j < alpha; ++j) CHECK(std::abs(m[j]) <= 1e-7 * normalizer(w, j));
    // the alpha-th moment equals alpha! times the mollifier mass
    double fact = 1.0;
    for (int j = 2; j <= alpha; ++j) fact *= j;
    CHECK(m[alpha] == doctest::Approx(fact).epsilon(1e-7));
  }
}

TEST_CASE("derivative wavelet rejects invalid orders") {
  Kernel chi = bump_mollifier(1.0, 2, 2049);
  CHECK_THROWS_AS(derivative_wavelet(chi, 0), InvalidParameter);
  CHECK_THROWS_AS(derivative_wavelet(wavelet_from_mollifier(chi), 1), KindError);
}

TEST_CASE("spectral pair produces the documented cutoff profile") {
  SpectralPair pair = spectral_pair(0.25, 4.0, 256);
  CHECK(pair.theorem_grade);
  CHECK(pair.phi0(0.0) == 1.0);
  CHECK(pair.phi0(0.2) == 1.0);
  CHECK(pair.phi0(4.0) == 0.0);
  CHECK(pair.phi0(5.0) == 0.0);
  const double mid = pair.phi0(1.0);
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
  // monotone decreasing through the transition band
  CHECK(pair.phi0(0.5) > pair.phi0(1.0));
  CHECK(pair.phi0(1.0) > pair.phi0(2.0));
  CHECK(pair.phi0(2.0) > pair.phi0(3.5));
}

TEST_CASE("band multiplier is nonnegative and supported on the transition band") {
  SpectralPair pair = spectral_pair(0.25, 4.0, 256);
  CHECK(pair.psi(0.1) == 0.0);
  CHECK(pair.psi(4.5) == 0.0);
  CHECK(pair.psi(1.0) > 0.0);
  CHECK(pair.psi(-1.0) == doctest::Approx(pair.psi(1.0)));
  // psi(xi) = -xi phi'(xi): cross-check against a centered difference
  const double d = 1e-6;
  for (double xi : {0.5, 1.0, 2.0, 3.0}) {
    const double fd = (pair.phi0(xi + d) - pair.phi0(xi - d)) / (2 * d);
    CHECK(pair.psi(xi) == doctest::Approx(-xi * fd).epsilon(1e-6));
  }
}

TEST_CASE("spectral kernels have unit mass and vanishing means respectively") {
  SpectralPair pair = spectral_pair(0.25, 4.0, 512);
  auto mc = check_moments(pair.chi_kernel, 1);
  auto mm = check_moments(pair.mu_kernel, 1);
  CHECK(std::abs(mc[0] - 1.0) <= 1e-10);
  CHECK(std::abs(mm[0]) <= 1e-10);
  CHECK(pair.chi_kernel.kind == KernelKind::Mollifier);
  CHECK(pair.mu_kernel.kind == KernelKind::Wavelet);
  CHECK(pair.chi_kernel.tail_bound <= 1e-10);
  CHECK(pair.mu_kernel.tail_bound <= 1e-10);
  // flat spectrum at the origin forces several vanishing moments
  CHECK(pair.chi_kernel.moment_order >= 2);
  CHECK(pair.mu_kernel.moment_order >= 2);
}

TEST_CASE("non theorem grade pairs are flagged") {
  CHECK_FALSE(spectral_pair(0.5, 2.0, 256).theorem_grade);
  CHECK(spectral_pair(0.125, 8.0, 256).theorem_grade);
}

TEST_CASE("spectral pair rejects bad parameters") {
  CHECK_THROWS_AS(spectral_pair(0.0, 4.0, 256), InvalidParameter);
  CHECK_THROWS_AS(spectral_pair(4.0, 0.25, 256), InvalidParameter);
  CHECK_THROWS_AS(spectral_pair(0.25, 4.0, 4), InvalidParameter);
}

TEST_CASE("bump mollifier rejects bad parameters") {
  CHECK_THROWS_AS(bump_mollifier(0.0, 1, 1025), InvalidParameter);
  CHECK_THROWS_AS(bump_mollifier(1.0, -1, 1025), InvalidParameter);
  CHECK_THROWS_AS(bump_mollifier(1.0, 1, 8), InvalidParameter);
}
