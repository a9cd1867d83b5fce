#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "zpw/dlvp.hpp"

using namespace zpw;

namespace {

std::vector<std::complex<double>> cv(std::initializer_list<double> reals) {
  std::vector<std::complex<double>> out;
  for (double r : reals) out.emplace_back(r, 0.0);
  return out;
}

}  // namespace

TEST_CASE("taper kernel coefficients") {
  PrimeContext ctx(13);
  auto V1 = vdp_polynomial(1, ctx);
  CHECK(V1.at_signed(0).real() == 1.0);
  CHECK(V1.at_signed(1).real() == 1.0);
  CHECK(V1.at_signed(-1).real() == 1.0);
  CHECK(V1.at_signed(2).real() == 0.5);
  CHECK(V1.at_signed(-2).real() == 0.5);
  CHECK(V1.at_signed(3).real() == 0.0);
  auto V2 = vdp_polynomial(2, ctx);
  CHECK(V2.at_signed(2).real() == 1.0);
  CHECK(V2.at_signed(3).real() == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(V2.at_signed(4).real() == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(V2.at_signed(5).real() == 0.0);
  CHECK_THROWS_AS(vdp_polynomial(0, ctx), std::invalid_argument);
  CHECK_THROWS_AS(vdp_polynomial(4, ctx), std::invalid_argument);  // 4n > p
}

TEST_CASE("kernel value at zero and norm bound") {
  PrimeContext ctx(13);
  auto V1 = vdp_polynomial(1, ctx);
  auto S = evaluate(V1);
  CHECK(S.values[0].real() == doctest::Approx(4.0).epsilon(1e-9));  // 3n+1
  auto nr = wiener_norm_poly(V1);
  CHECK(nr.value == doctest::Approx(16.562531790167778).epsilon(1e-9));
  CHECK(nr.value <= 3.0 * 13 + nr.err_bound);
  for (std::int64_t n = 1; 4 * n <= 101; ++n) {
    auto r = wiener_norm_poly(vdp_polynomial(n, PrimeContext(101)));
    CHECK(r.value <= 3.0 * 101 + r.err_bound);
  }
}

TEST_CASE("mean reproduces short polynomials exactly") {
  PrimeContext ctx(101);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    TrigPoly F = zero_poly(ctx);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 25);
    for (std::int64_t x = -n; x <= n; ++x)
      F.at_signed(x) = {static_cast<double>(rng() % 7) - 3.0,
                        static_cast<double>(rng() % 5) - 2.0};
    auto G = vdp_mean(F, n);
    for (std::int64_t x = 0; x < 101; ++x)
      CHECK(G.coeffs[x] == F.coeffs[x]);  // plateau multiplies by exactly 1
  }
}

TEST_CASE("coefficientwise convolution") {
  PrimeContext ctx(13);
  auto V1 = vdp_polynomial(1, ctx);
  auto P = spectral_convolution(V1, V1);
  CHECK(P.at_signed(2).real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(P.at_signed(1).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quadrature hand values") {
  const std::int64_t f01[] = {0, 1};
  auto r = continuous_l1(f01, cv({1, 1}));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-7));

  const std::int64_t f012[] = {0, 1, 2};
  auto r3 = continuous_l1(f012, cv({1, 1, 1}));
  CHECK(r3.value == doctest::Approx(1.4359911241768826).epsilon(1e-5));

  // single frequency: constant magnitude
  const std::int64_t fs[] = {7};
  auto rs = continuous_l1(fs, cv({-2.5}));
  CHECK(rs.value == doctest::Approx(2.5).epsilon(1e-12));

  const std::int64_t dup[] = {3, 3};
  CHECK_THROWS_AS(continuous_l1(dup, cv({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(continuous_l1(std::span<const std::int64_t>(), {}),
                  std::invalid_argument);
}

TEST_CASE("real-frequency quadrature") {
  const double half[] = {0.0, 0.5};
  auto r = continuous_l1_real(half, cv({1, 1}));
  CHECK(r.value == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-6));
  // integral frequencies route to the integer path bit for bit
  const double ints[] = {0.0, 1.0};
  const std::int64_t f01[] = {0, 1};
  CHECK(continuous_l1_real(ints, cv({1, 1})).value ==
        continuous_l1(f01, cv({1, 1})).value);
}

TEST_CASE("discrete to continuous comparison") {
  PrimeContext ctx(1009);
  TrigPoly F = zero_poly(ctx);
  F.at_signed(0) = 1.0;
  F.at_signed(1) = 1.0;
  auto rep = disc_cont_ratio(F);
  CHECK(rep.continuous.value ==
        doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-6));
  CHECK(rep.ratio == doctest::Approx(1.0).epsilon(0.01));

  TrigPoly wide = zero_poly(ctx);
  wide.at_signed(400) = 1.0;  // 3*400 > 1009
  CHECK_THROWS_AS(disc_cont_ratio(wide), std::invalid_argument);
  CHECK_THROWS_AS(disc_cont_ratio(zero_poly(ctx)), std::invalid_argument);
}

TEST_CASE("integral versus harmonic sum") {
  const double b[] = {1.0, 2.0};
  auto rep = hardy_ratio(b, cv({1, 1}));
  CHECK(rep.harmonic_sum == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(rep.ratio == doctest::Approx(0.8488263631567752).epsilon(1e-6));
  const double bad[] = {2.0, 1.0};
  CHECK_THROWS_AS(hardy_ratio(bad, cv({1, 1})), std::invalid_argument);
}

TEST_CASE("window concentration report") {
  PrimeContext ctx(101);
  std::vector<std::int64_t> vals;
  for (std::int64_t x = -5; x <= 5; ++x) vals.push_back(x);
  auto B = ZpSet::from_residues(ctx, vals);
  auto rep = shell_concentration_check(B, 5, 0.25);
  CHECK(rep.applicable);
  CHECK(rep.inner_count == 11);
  CHECK(rep.outer_count == 11);
  CHECK(rep.bound == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(rep.measured_norm == doctest::Approx(1.9620450684790411).epsilon(1e-9));

  // concentration fails when the outer shell dominates
  std::vector<std::int64_t> spread;
  for (std::int64_t x = 6; x <= 10; ++x) spread.push_back(x);
  spread.push_back(0);
  auto C = ZpSet::from_residues(ctx, spread);
  CHECK_FALSE(shell_concentration_check(C, 5, 0.25).applicable);

  CHECK_THROWS_AS(shell_concentration_check(B, 5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(shell_concentration_check(B, 0, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(shell_concentration_check(B, 20, 0.25),
                  std::invalid_argument);  // 6n > p
}
