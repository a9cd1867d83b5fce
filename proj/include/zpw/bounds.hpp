#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zpw/spectral.hpp"
#include "zpw/zp_set.hpp"

namespace zpw {

// Closed-form lower-bound evaluators, leading-order only: every implicit
// constant is 1 and every o(1) exponent is 0. Tags name density regimes for
// the indicator-norm bounds: large_density/small_density are the two branches
// of the same dichotomy, small_set covers n up to exp((ln p/lnln p)^(1/3)),
// medium_size the band from there to p/3.
enum class TheoremBound {
  trivial,
  conjecture,
  char_large,
  char_small_density,
  charsmall,
  mediumsize
};

TheoremBound parse_theorem_bound(const std::string& name);
std::string to_string(TheoremBound t);

struct BoundEvaluation {
  TheoremBound theorem;
  std::int64_t p = 0;
  std::int64_t n = 0;
  double value = 0;       // leading-order form
  bool regime_ok = false; // whether the stated hypothesis range holds
  std::string label;
};

// Throws for 1 <= n < p violations; the lnln-based bounds additionally
// require p >= 11, and mediumsize requires n < p/e so lnln(p/n) > 0.
BoundEvaluation eval_bound(TheoremBound theorem, std::int64_t p,
                           std::int64_t n);

struct ApProfileRow {
  std::int64_t n;
  double norm;
  double err_bound;
  double ratio;  // norm / ln n, 0 when n < 2
  bool flagged;  // n < 2: outside the natural range, still computable
};

std::vector<ApProfileRow> ap_norm_profile(const PrimeContext& ctx,
                                          std::span<const std::int64_t> lengths);

enum class SearchStrategy { exhaustive, local_search };

struct SearchResult {
  std::vector<std::int64_t> best_set;
  double best_norm = 0;
  double err_bound = 0;
  std::int64_t evaluated = 0;
  bool budget_exhausted = false;
  std::optional<double> bound_mediumsize;  // absent when out of formula domain
  std::optional<double> bound_charsmall;
};

// Minimizes the indicator norm over n-element subsets. Exhaustive search is
// exact (guarded at C(p,n) <= 1e7, optional affine orbit reduction);
// local_search runs seeded annealing restarts and is sound but heuristic.
SearchResult extremal_search(const PrimeContext& ctx, std::int64_t n,
                             SearchStrategy strategy, std::uint64_t seed,
                             std::int64_t budget, bool orbit_reduce = false);

}  // namespace zpw
