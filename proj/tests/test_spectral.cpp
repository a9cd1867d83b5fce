#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zpw/spectral.hpp"

using namespace zpw;

namespace {

Eigen::VectorXcd random_function(std::int64_t p, std::mt19937_64& rng) {
  auto uni = [&rng] {
    return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
  };
  Eigen::VectorXcd f(p);
  for (std::int64_t i = 0; i < p; ++i)
    f[static_cast<Eigen::Index>(i)] = {uni(), uni()};
  return f;
}

ZpSet make_set(std::int64_t p, std::initializer_list<std::int64_t> vals) {
  std::vector<std::int64_t> v(vals);
  return ZpSet::from_residues(PrimeContext(p), v);
}

}  // namespace

TEST_CASE("two-point spectrum magnitudes at p=3") {
  auto S = indicator_spectrum(make_set(3, {0, 1}));
  CHECK(std::abs(S.values[0]) == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(std::abs(S.values[1]) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(std::abs(S.values[2]) == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("norm hand values") {
  CHECK(wiener_norm(make_set(3, {0, 1})).value ==
        doctest::Approx(4.0 / 3).epsilon(1e-9));
  CHECK(wiener_norm(make_set(5, {1, 2, 3, 4})).value ==
        doctest::Approx(8.0 / 5).epsilon(1e-9));
  CHECK(wiener_norm(make_set(5, {2})).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(wiener_norm(make_set(7, {0, 1, 2})).value ==
        doctest::Approx(1.4582501347456218).epsilon(1e-9));
  // full group: spectrum is a single spike at 0
  CHECK(wiener_norm(ZpSet::full(PrimeContext(11))).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  auto empty = wiener_norm(ZpSet(PrimeContext(7)));
  CHECK(empty.value == 0.0);
  CHECK(empty.err_bound == 0.0);
}

TEST_CASE("norm is invariant under dilation and translation") {
  auto base = wiener_norm(make_set(31, {0, 1, 2})).value;
  CHECK(wiener_norm(make_set(31, {0, 5, 10})).value ==
        doctest::Approx(base).epsilon(1e-12));
  CHECK(wiener_norm(make_set(31, {7, 8, 9})).value ==
        doctest::Approx(base).epsilon(1e-12));
  CHECK(base == doctest::Approx(1.4372178841747039).epsilon(1e-9));
}

TEST_CASE("fast transform agrees with the direct reference") {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {131, 257, 1009, 4093}) {
    PrimeContext ctx(p);
    Eigen::VectorXcd f = random_function(p, rng);
    auto fast = fourier_transform(ctx, f);
    auto direct = fourier_transform_direct(ctx, f);
    double maxdiff = 0;
    for (Eigen::Index i = 0; i < p; ++i)
      maxdiff = std::max(maxdiff, std::abs(fast.values[i] - direct.values[i]));
    CHECK(maxdiff <= 1e-10);
  }
}

TEST_CASE("round trip and parseval on random functions") {
  std::mt19937_64 rng(13);
  for (std::int64_t p : {13, 101, 1009}) {
    PrimeContext ctx(p);
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXcd f = random_function(p, rng);
      auto S = fourier_transform(ctx, f);
      auto g = inverse_transform(S);
      double maxdiff = 0, maxf = 0, sumS = 0, sumf = 0;
      for (Eigen::Index i = 0; i < p; ++i) {
        maxdiff = std::max(maxdiff, std::abs(g[i] - f[i]));
        maxf = std::max(maxf, std::abs(f[i]));
        sumS += std::norm(S.values[i]);
        sumf += std::norm(f[i]);
      }
      CHECK(maxdiff <= 1e-9 * maxf);
      CHECK(sumS == doctest::Approx(sumf / static_cast<double>(p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("error bound covers the fast-vs-extended gap") {
  std::mt19937_64 rng(17);
  for (std::int64_t p : {13, 101, 1009}) {
    PrimeContext fast_ctx(p);
    PrimeContext ext_ctx(p, PrecisionPolicy::extended);
    Eigen::VectorXcd f = random_function(p, rng);
    auto fast = fourier_transform(fast_ctx, f);
    auto ref = fourier_transform_direct(ext_ctx, f);
    for (Eigen::Index i = 0; i < p; ++i)
      CHECK(std::abs(fast.values[i] - ref.values[i]) <=
            fast.err_bound + ref.err_bound);
    CHECK(ext_ctx.unit_roundoff() < fast_ctx.unit_roundoff());
  }
}

TEST_CASE("value-side evaluation has no 1/p factor") {
  PrimeContext ctx(5);
  // F(g) = sum over the indicator of {0,1}: at g=0 the value is 2
  TrigPoly F(ctx, Eigen::VectorXcd::Zero(5));
  F.at_signed(0) = 1.0;
  F.at_signed(1) = 1.0;
  auto S = evaluate(F);
  CHECK(S.values[0].real() == doctest::Approx(2.0).epsilon(1e-12));
  auto n = wiener_norm_poly(F);
  // p times the normalized norm of the same coefficient vector
  CHECK(n.value == doctest::Approx(5.0 * wiener_norm(make_set(5, {0, 1})).value)
                       .epsilon(1e-12));
}

TEST_CASE("input validation") {
  PrimeContext ctx(7);
  CHECK_THROWS_AS(fourier_transform(ctx, Eigen::VectorXcd::Zero(6)),
                  std::invalid_argument);
  CHECK_THROWS_AS(TrigPoly(ctx, Eigen::VectorXcd::Zero(8)),
                  std::invalid_argument);
  Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(7);
  bad[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(fourier_transform(ctx, bad), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum(ctx, Eigen::VectorXcd::Zero(7), -1.0),
                  std::invalid_argument);
}

TEST_CASE("signed coefficient accessor") {
  PrimeContext ctx(7);
  TrigPoly F = zero_poly(ctx);
  F.at_signed(-2) = 3.5;
  CHECK(F.coeffs[5].real() == 3.5);
  CHECK(F.at_signed(5).real() == 3.5);
}
