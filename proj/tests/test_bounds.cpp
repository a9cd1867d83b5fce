#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <span>

#include "zpw/bounds.hpp"

using namespace zpw;

TEST_CASE("bound names round-trip") {
  for (auto t : {TheoremBound::trivial, TheoremBound::conjecture,
                 TheoremBound::char_large, TheoremBound::char_small_density,
                 TheoremBound::charsmall, TheoremBound::mediumsize})
    CHECK(parse_theorem_bound(to_string(t)) == t);
  CHECK(to_string(TheoremBound::char_large) == "char-large");
  CHECK_THROWS_AS(parse_theorem_bound("chebyshev"), std::invalid_argument);
  CHECK_THROWS_AS(parse_theorem_bound(""), std::invalid_argument);
}

TEST_CASE("trivial and conjectured forms") {
  auto t = eval_bound(TheoremBound::trivial, 101, 50);
  CHECK(t.value == 1.0);
  CHECK(t.regime_ok);

  auto c = eval_bound(TheoremBound::conjecture, 1009, 10);
  CHECK(c.value == doctest::Approx(2.302585092994046).epsilon(1e-12));
  CHECK(c.regime_ok);
  CHECK_FALSE(eval_bound(TheoremBound::conjecture, 1009, 1).regime_ok);
  CHECK_FALSE(eval_bound(TheoremBound::conjecture, 1009, 600).regime_ok);
  CHECK_FALSE(eval_bound(TheoremBound::conjecture, 1009, 600).label.empty());
}

TEST_CASE("small-set and medium-size forms") {
  // small-set cutoff at p=1009 is exp((ln p / lnln p)^(1/3)) = 4.6148...
  auto s4 = eval_bound(TheoremBound::charsmall, 1009, 4);
  CHECK(s4.value == doctest::Approx(1.3862943611198906).epsilon(1e-12));
  CHECK(s4.regime_ok);
  CHECK_FALSE(eval_bound(TheoremBound::charsmall, 1009, 5).regime_ok);
  CHECK_FALSE(eval_bound(TheoremBound::charsmall, 1009, 1).regime_ok);

  auto m100 = eval_bound(TheoremBound::mediumsize, 1009, 100);
  CHECK(m100.value == doctest::Approx(1.5779755113325626).epsilon(1e-12));
  CHECK(m100.regime_ok);
  auto m3 = eval_bound(TheoremBound::mediumsize, 1009, 3);
  CHECK(m3.value == doctest::Approx(1.021348912922496).epsilon(1e-12));
  CHECK_FALSE(m3.regime_ok);  // below the small-set cutoff
  CHECK(eval_bound(TheoremBound::mediumsize, 13, 3).value ==
        doctest::Approx(2.9680841808380154).epsilon(1e-12));
  // needs n < p/e for the iterated log
  CHECK_THROWS_AS(eval_bound(TheoremBound::mediumsize, 1009, 600),
                  std::domain_error);
}

TEST_CASE("density dichotomy forms") {
  auto big = eval_bound(TheoremBound::char_large, 1009, 900);
  CHECK(big.value == doctest::Approx(1.102984214703442).epsilon(1e-12));
  // the density hypothesis eta in [thr, 1/2) is empty at this p: thr > 1/2
  CHECK_FALSE(big.regime_ok);
  CHECK_THROWS_AS(eval_bound(TheoremBound::char_large, 1009, 500),
                  std::domain_error);

  auto small = eval_bound(TheoremBound::char_small_density, 1009, 10);
  CHECK(small.value == doctest::Approx(0.11609346748211642).epsilon(1e-12));
  CHECK(small.regime_ok);
  CHECK_FALSE(eval_bound(TheoremBound::char_small_density, 1009, 600).regime_ok);
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(eval_bound(TheoremBound::trivial, 2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(TheoremBound::conjecture, 13, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(TheoremBound::conjecture, 13, 13),
                  std::invalid_argument);
  // iterated-log bounds insist on p >= 11
  CHECK_THROWS_AS(eval_bound(TheoremBound::charsmall, 7, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(TheoremBound::mediumsize, 7, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_bound(TheoremBound::char_large, 7, 3),
                  std::invalid_argument);
  // p = 11 is the smallest accepted modulus
  CHECK_NOTHROW(eval_bound(TheoremBound::charsmall, 11, 3));
}

TEST_CASE("interval norm profile") {
  PrimeContext ctx(101);
  std::vector<std::int64_t> lengths{1, 2};
  auto rows = ap_norm_profile(ctx, lengths);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 1);
  CHECK(rows[0].flagged);
  CHECK(rows[0].ratio == 0.0);
  CHECK(rows[0].norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1].n == 2);
  CHECK_FALSE(rows[1].flagged);
  CHECK(rows[1].norm == doctest::Approx(1.2732908743647562).epsilon(1e-12));
  CHECK(rows[1].ratio == doctest::Approx(1.8369704300552059).epsilon(1e-12));

  std::vector<std::int64_t> bad{0};
  CHECK_THROWS_AS(ap_norm_profile(ctx, bad), std::invalid_argument);
  bad = {51};  // 2n >= p
  CHECK_THROWS_AS(ap_norm_profile(ctx, bad), std::invalid_argument);
}

TEST_CASE("exhaustive search frozen minima") {
  PrimeContext ctx13(13);
  auto r = extremal_search(ctx13, 3, SearchStrategy::exhaustive, 1, 0);
  CHECK(r.best_norm == doctest::Approx(1.4427400403674777).epsilon(1e-9));
  CHECK(r.evaluated == 286);  // C(13,3)
  CHECK_FALSE(r.budget_exhausted);
  CHECK(r.best_set.size() == 3);
  REQUIRE(r.bound_mediumsize.has_value());
  CHECK(*r.bound_mediumsize == doctest::Approx(2.9680841808380154).epsilon(1e-9));
  REQUIRE(r.bound_charsmall.has_value());
  CHECK(*r.bound_charsmall == doctest::Approx(std::log(3.0)).epsilon(1e-12));

  auto r4 = extremal_search(ctx13, 4, SearchStrategy::exhaustive, 1, 0);
  CHECK(r4.best_norm == doctest::Approx(1.5611346735502794).epsilon(1e-9));
  CHECK(r4.evaluated == 715);  // C(13,4)

  auto r1 = extremal_search(ctx13, 1, SearchStrategy::exhaustive, 1, 0);
  CHECK(r1.best_norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r1.best_set.size() == 1);
  CHECK(r1.evaluated == 13);

  PrimeContext ctx5(5);
  auto r2 = extremal_search(ctx5, 2, SearchStrategy::exhaustive, 1, 0);
  CHECK(r2.best_norm == doctest::Approx(1.2944271909999157).epsilon(1e-9));
}

TEST_CASE("orbit reduction preserves the minimum") {
  // every minimizing orbit has a representative containing {0,1}
  const std::pair<std::int64_t, std::int64_t> cases[] = {
      {7, 3}, {11, 3}, {13, 3}, {13, 4}};
  for (auto [p, n] : cases) {
    PrimeContext ctx(p);
    auto full = extremal_search(ctx, n, SearchStrategy::exhaustive, 1, 0);
    auto orb =
        extremal_search(ctx, n, SearchStrategy::exhaustive, 1, 0, true);
    CHECK(std::abs(full.best_norm - orb.best_norm) <= 1e-9);
    CHECK(orb.evaluated < full.evaluated);
  }
  PrimeContext ctx13(13);
  auto orb = extremal_search(ctx13, 3, SearchStrategy::exhaustive, 1, 0, true);
  CHECK(orb.evaluated == 11);  // {0,1} fixed, one free slot in {2..12}
}

TEST_CASE("annealing search is sound and deterministic") {
  PrimeContext ctx(13);
  auto exact = extremal_search(ctx, 3, SearchStrategy::exhaustive, 1, 0);
  auto a = extremal_search(ctx, 3, SearchStrategy::local_search, 42, 2000);
  CHECK(a.best_norm >= exact.best_norm - 1e-9);
  CHECK(a.budget_exhausted);
  CHECK(a.evaluated >= 1);
  auto b = extremal_search(ctx, 3, SearchStrategy::local_search, 42, 2000);
  CHECK(a.best_norm == b.best_norm);
  CHECK(a.best_set == b.best_set);
  CHECK(a.evaluated == b.evaluated);
  auto c = extremal_search(ctx, 3, SearchStrategy::local_search, 43, 2000);
  CHECK(c.best_norm >= exact.best_norm - 1e-9);
}

TEST_CASE("search guards") {
  PrimeContext big(4001);
  CHECK_THROWS_AS(extremal_search(big, 3, SearchStrategy::exhaustive, 1, 0),
                  std::length_error);
  PrimeContext ctx(13);
  CHECK_THROWS_AS(extremal_search(ctx, 13, SearchStrategy::exhaustive, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(extremal_search(ctx, 0, SearchStrategy::exhaustive, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(extremal_search(ctx, 3, SearchStrategy::local_search, 1, 0),
                  std::invalid_argument);
  // iterated-log comparisons are unavailable below p = 11
  PrimeContext tiny(7);
  auto r = extremal_search(tiny, 2, SearchStrategy::exhaustive, 1, 0);
  CHECK_FALSE(r.bound_mediumsize.has_value());
  CHECK_FALSE(r.bound_charsmall.has_value());
}
