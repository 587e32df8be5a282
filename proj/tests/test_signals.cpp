#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zygmund/errors.hpp"
#include "zygmund/generators.hpp"
#include "zygmund/signal.hpp"

using namespace zygmund;

TEST_CASE("eval interpolates linearly and is exact at nodes") {
  Signal f{{1.0, 3.0, 2.0, -4.0}, 0.0, 0.5, ZeroExtension{}};
  CHECK(f.eval(0.0) == doctest::Approx(1.0));
  CHECK(f.eval(1.0) == doctest::Approx(2.0));
  CHECK(f.eval(0.25) == doctest::Approx(2.0));
  CHECK(f.eval(1.25) == doctest::Approx(-1.0));
  CHECK(f.x_end() == doctest::Approx(1.5));
  CHECK(f.span() == doctest::Approx(1.5));
}

TEST_CASE("zero extension vanishes outside the domain") {
  Signal f{{1.0, 1.0}, 0.0, 1.0, ZeroExtension{}};
  CHECK(f.eval(-0.5) == 0.0);
  CHECK(f.eval(1.5) == 0.0);
  CHECK(f.sample_extended(-3) == 0.0);
  CHECK(f.sample_extended(7) == 0.0);
}

TEST_CASE("constant extension holds the stored edge values") {
  Signal f{{2.0, 5.0}, 0.0, 1.0, ConstantLeftRight{2.0, 5.0}};
  CHECK(f.eval(-10.0) == 2.0);
  CHECK(f.eval(10.0) == 5.0);
  CHECK(f.sample_extended(-1) == 2.0);
  CHECK(f.sample_extended(2) == 5.0);
}

TEST_CASE("periodic extension wraps with period span") {
  // last sample repeats the first: period = dx * (n - 1)
  Signal f{{1.0, 2.0, -1.0, 1.0}, 0.0, 1.0, PeriodicExtension{}};
  const double period = f.span();
  CHECK(period == doctest::Approx(3.0));
  for (double x : {0.2, 1.7, 2.9}) {
    CHECK(f.eval(x + period) == doctest::Approx(f.eval(x)));
    CHECK(f.eval(x - 2 * period) == doctest::Approx(f.eval(x)));
  }
  CHECK(f.sample_extended(4) == doctest::Approx(f.sample_extended(1)));
  CHECK(f.sample_extended(-2) == doctest::Approx(f.sample_extended(1)));
}

TEST_CASE("analytic extension evaluates the polynomial everywhere") {
  Signal p = gen_polynomial({1.0, -2.0, 0.5}, 64, -1.0, 1.0);
  auto poly = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x; };
  CHECK(p.eval(0.37) == doctest::Approx(poly(0.37)).epsilon(1e-14));
  CHECK(p.eval(5.0) == doctest::Approx(poly(5.0)).epsilon(1e-14));
  CHECK(p.eval(-3.2) == doctest::Approx(poly(-3.2)).epsilon(1e-14));
  CHECK(p.sample_extended(-10) == doctest::Approx(poly(-1.0 - 10.0 * p.dx)).epsilon(1e-14));
}

TEST_CASE("validate rejects structural failures") {
  Signal ok{{0.0, 1.0}, 0.0, 0.5, ZeroExtension{}};
  CHECK_NOTHROW(ok.validate());
  Signal bad_dx = ok;
  bad_dx.dx = 0.0;
  CHECK_THROWS_AS(bad_dx.validate(), InvalidParameter);
  Signal bad_val = ok;
  bad_val.samples[1] = std::nan("");
  CHECK_THROWS_AS(bad_val.validate(), InvalidParameter);
  Signal empty{{}, 0.0, 1.0, ZeroExtension{}};
  CHECK_THROWS_AS(empty.validate(), InvalidParameter);
}

TEST_CASE("cantor staircase is a monotone surjection onto [0,1]") {
  auto g = gen_cantor_staircase(2, 1.0 / 3.0, 16, 4096);
  const Signal& u = g.signal;
  CHECK(u.samples.front() == doctest::Approx(0.0));
  CHECK(u.samples.back() == doctest::Approx(1.0));
  for (std::size_t i = 1; i < u.size(); ++i) CHECK(u.samples[i] >= u.samples[i - 1]);
  CHECK(*g.truth.exponent == doctest::Approx(std::log(2.0) / std::log(3.0)));
}

TEST_CASE("cantor staircase satisfies the self-similarity relation") {
  // With two pieces at ratio 1/3 the staircase obeys c(x/3) = c(x)/2 on the
  // domain rescaled to [0, L].
  auto g = gen_cantor_staircase(2, 1.0 / 3.0, 24, 8192);
  const Signal& u = g.signal;
  const double L = u.span();
  for (double frac : {0.1, 0.35, 0.62, 0.93}) {
    const double x = frac * L;
    CHECK(u.eval(u.x0 + x / 3.0) ==
          doctest::Approx(0.5 * u.eval(u.x0 + x)).epsilon(5e-3));
  }
}

TEST_CASE("cantor staircase flags grid saturation") {
  CHECK(gen_cantor_staircase(2, 1.0 / 3.0, 30, 1024).grid_saturated);
  CHECK_FALSE(gen_cantor_staircase(2, 1.0 / 3.0, 6, 65536).grid_saturated);
}

TEST_CASE("cantor staircase rejects overlapping pieces") {
  CHECK_THROWS_AS(gen_cantor_staircase(3, 0.4, 8, 1024), OverlappingPieces);
  CHECK_THROWS_AS(gen_cantor_staircase(2, 0.6, 8, 1024), OverlappingPieces);
}

TEST_CASE("independent difference-quotient slope agrees with cantor exponent") {
  auto g = gen_cantor_staircase(2, 1.0 / 3.0, 20, 65536);
  const double slope = oracles::holder_slope(g.signal, 10, 4);
  CHECK(slope == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(0.12));
}

TEST_CASE("brownian paths are deterministic per seed") {
  auto a = gen_brownian(4096, 1.0, 7);
  auto b = gen_brownian(4096, 1.0, 7);
  auto c = gen_brownian(4096, 1.0, 8);
  CHECK(a.signal.samples == b.signal.samples);
  CHECK(a.signal.samples != c.signal.samples);
  CHECK(a.signal.samples.front() == 0.0);
  CHECK(*a.truth.exponent == doctest::Approx(0.5));
}

TEST_CASE("brownian increments have the variance of the grid step") {
  auto g = gen_brownian(1 << 16, 1.0, 3);
  const Signal& u = g.signal;
  double acc = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const double d = u.samples[i] - u.samples[i - 1];
    acc += d * d;
  }
  const double mean_sq = acc / static_cast<double>(u.size() - 1);
  CHECK(mean_sq == doctest::Approx(u.dx).epsilon(0.05));
}

TEST_CASE("weierstrass sum is periodic and bounded by the geometric series") {
  auto g = gen_weierstrass(0.5, 3, 25, 4097);  // odd count puts a node at x = 0
  const Signal& u = g.signal;
  CHECK(std::holds_alternative<PeriodicExtension>(u.extension));
  CHECK(u.samples.front() == doctest::Approx(u.samples.back()).epsilon(1e-12));
  CHECK(u.sup_abs() <= 2.0 + 1e-9);
  // peak at the origin: every cosine term equals one there
  CHECK(u.eval(0.0) == doctest::Approx((1.0 - std::pow(0.5, 25)) / (1.0 - 0.5)).epsilon(1e-9));
  CHECK(*g.truth.exponent == doctest::Approx(std::log(2.0) / std::log(3.0)));
}

TEST_CASE("weierstrass requires amplitude-frequency product at least one") {
  CHECK_THROWS_AS(gen_weierstrass(0.2, 3, 10, 1024), InvalidParameter);
}

TEST_CASE("heaviside generator places the jump at the midpoint") {
  Signal u = gen_heaviside(1024, -4.0, 4.0);
  CHECK(u.eval(-1.0) == 0.0);
  CHECK(u.eval(1.0) == 1.0);
  CHECK(u.eval(-3.9) == 0.0);
  CHECK(u.eval(3.9) == 1.0);
  CHECK(std::holds_alternative<ConstantLeftRight>(u.extension));
}

TEST_CASE("polynomial generator matches direct evaluation at nodes") {
  Signal p = gen_polynomial({0.3, -1.2, 0.7, 0.05}, 512, -2.0, 2.0);
  for (std::size_t i : {std::size_t{0}, std::size_t{100}, std::size_t{511}}) {
    const double x = p.x_at(i);
    const double v = 0.3 - 1.2 * x + 0.7 * x * x + 0.05 * x * x * x;
    CHECK(p.samples[i] == doctest::Approx(v).epsilon(1e-14));
  }
}

TEST_CASE("sup_abs reports the largest magnitude") {
  Signal f{{1.0, -7.5, 3.0}, 0.0, 1.0, ZeroExtension{}};
  CHECK(f.sup_abs() == doctest::Approx(7.5));
}
