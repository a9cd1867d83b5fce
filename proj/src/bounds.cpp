#include "zpw/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace zpw {

TheoremBound parse_theorem_bound(const std::string& name) {
  if (name == "trivial") return TheoremBound::trivial;
  if (name == "conjecture") return TheoremBound::conjecture;
  if (name == "char-large") return TheoremBound::char_large;
  if (name == "char-small-density") return TheoremBound::char_small_density;
  if (name == "charsmall") return TheoremBound::charsmall;
  if (name == "mediumsize") return TheoremBound::mediumsize;
  throw std::invalid_argument("unknown bound name: " + name);
}

std::string to_string(TheoremBound t) {
  switch (t) {
    case TheoremBound::trivial:
      return "trivial";
    case TheoremBound::conjecture:
      return "conjecture";
    case TheoremBound::char_large:
      return "char-large";
    case TheoremBound::char_small_density:
      return "char-small-density";
    case TheoremBound::charsmall:
      return "charsmall";
    case TheoremBound::mediumsize:
    default:
      return "mediumsize";
  }
}

namespace {

void require_loglog(std::int64_t p) {
  // lnln p must be safely positive for the bound to mean anything
  if (p < 11)
    throw std::invalid_argument("bound needs p >= 11 (lnln p too small)");
}

// n in the small-set regime: n <= exp((ln p / lnln p)^(1/3))
bool small_set_regime(std::int64_t p, std::int64_t n) {
  const double lp = std::log(static_cast<double>(p));
  const double cutoff = std::exp(std::cbrt(lp / std::log(lp)));
  return static_cast<double>(n) <= cutoff;
}

}  // namespace

BoundEvaluation eval_bound(TheoremBound theorem, std::int64_t p,
                           std::int64_t n) {
  if (p < 3) throw std::invalid_argument("eval_bound: p must be >= 3");
  if (n < 1 || n >= p)
    throw std::invalid_argument("eval_bound: need 1 <= n < p");
  BoundEvaluation out;
  out.theorem = theorem;
  out.p = p;
  out.n = n;
  out.label = "leading-order form (constants 1, o(1)=0)";
  const double nd = static_cast<double>(n);
  const double pd = static_cast<double>(p);
  const double eta = nd / pd;
  switch (theorem) {
    case TheoremBound::trivial:
      out.value = 1.0;
      out.regime_ok = true;
      return out;
    case TheoremBound::conjecture:
      out.value = std::log(nd);
      out.regime_ok = n >= 2 && 2 * n < p;
      return out;
    case TheoremBound::char_large: {
      require_loglog(p);
      const double lp = std::log(pd);
      const double llp = std::log(lp);
      const double thr = std::pow(lp, -0.25) * std::sqrt(llp);
      const double inner = 1.0 + std::log(eta * eta * std::sqrt(lp) / llp);
      if (inner <= 0)
        throw std::domain_error(
            "char-large: undefined this far below the density threshold");
      out.value = std::sqrt(lp) / llp * std::pow(eta, 1.5) /
                  std::sqrt(inner);
      out.regime_ok = eta < 0.5 && eta >= thr;
      return out;
    }
    case TheoremBound::char_small_density: {
      require_loglog(p);
      const double lp = std::log(pd);
      const double llp = std::log(lp);
      const double thr = std::pow(lp, -0.25) * std::sqrt(llp);
      out.value = std::sqrt(eta) * std::pow(lp, 0.25) / std::sqrt(llp);
      out.regime_ok = eta < 0.5 && eta < thr;
      return out;
    }
    case TheoremBound::charsmall:
      require_loglog(p);
      out.value = std::log(nd);
      out.regime_ok = n >= 2 && small_set_regime(p, n);
      return out;
    case TheoremBound::mediumsize:
    default: {
      require_loglog(p);
      const double lr = std::log(pd / nd);
      if (std::log(lr) <= 0)
        throw std::domain_error(
            "mediumsize: lnln(p/n) not positive, need n < p/e");
      out.value = std::cbrt(lr) / std::log(lr);
      out.regime_ok = !small_set_regime(p, n) && 3 * n <= p;
      return out;
    }
  }
}

std::vector<ApProfileRow> ap_norm_profile(
    const PrimeContext& ctx, std::span<const std::int64_t> lengths) {
  std::vector<ApProfileRow> rows;
  for (std::int64_t n : lengths) {
    if (n < 1 || 2 * n >= ctx.p())
      throw std::invalid_argument("ap_norm_profile: need 1 <= n < p/2");
    std::vector<std::int64_t> pts(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = i;
    NormResult nr = wiener_norm(ZpSet::from_residues(ctx, pts));
    ApProfileRow row;
    row.n = n;
    row.norm = nr.value;
    row.err_bound = nr.err_bound;
    row.flagged = n < 2;
    row.ratio = n < 2 ? 0.0 : nr.value / std::log(static_cast<double>(n));
    rows.push_back(row);
  }
  return rows;
}

namespace {

double binomial_guarded(std::int64_t p, std::int64_t n) {
  double c = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    c *= static_cast<double>(p - i) / static_cast<double>(i + 1);
    if (c > 1e12) return c;
  }
  return c;
}

double norm_of(const PrimeContext& ctx, const std::vector<std::int64_t>& pts,
               double* err = nullptr) {
  NormResult nr = wiener_norm(ZpSet::from_residues(ctx, pts));
  if (err) *err = nr.err_bound;
  return nr.value;
}

// Lexicographic combinations of {start,...,p-1} joined to a fixed prefix;
// keeps the first strict improvement, so ties resolve lexicographically.
void exhaustive_scan(const PrimeContext& ctx,
                     const std::vector<std::int64_t>& prefix, std::int64_t n,
                     std::int64_t start, SearchResult& best) {
  const std::int64_t p = ctx.p();
  const auto free_slots = n - static_cast<std::int64_t>(prefix.size());
  std::vector<std::int64_t> comb(static_cast<std::size_t>(free_slots));
  for (std::int64_t i = 0; i < free_slots; ++i)
    comb[static_cast<std::size_t>(i)] = start + i;
  if (free_slots > 0 && comb.back() >= p) return;
  std::vector<std::int64_t> candidate(prefix);
  candidate.resize(static_cast<std::size_t>(n));
  while (true) {
    std::copy(comb.begin(), comb.end(),
              candidate.begin() + static_cast<std::ptrdiff_t>(prefix.size()));
    double err = 0;
    const double v = norm_of(ctx, candidate, &err);
    ++best.evaluated;
    if (best.best_set.empty() || v < best.best_norm) {
      best.best_norm = v;
      best.err_bound = err;
      best.best_set = candidate;
    }
    if (free_slots == 0) break;
    // next combination
    std::int64_t i = free_slots - 1;
    while (i >= 0 &&
           comb[static_cast<std::size_t>(i)] == p - free_slots + i)
      --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < free_slots; ++j)
      comb[static_cast<std::size_t>(j)] =
          comb[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void local_search_scan(const PrimeContext& ctx, std::int64_t n,
                       std::uint64_t seed, std::int64_t budget,
                       SearchResult& best) {
  const std::int64_t p = ctx.p();
  const std::int64_t restarts = std::max<std::int64_t>(1, budget / 2000);
  const std::int64_t proposals = std::max<std::int64_t>(1, budget / restarts);
  for (std::int64_t r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
    // random initial n-subset via partial shuffle of the residue list
    std::vector<std::int64_t> pool(static_cast<std::size_t>(p));
    for (std::int64_t i = 0; i < p; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (std::int64_t i = 0; i < n; ++i) {
      const auto j =
          i + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                                    p - i));
      std::swap(pool[static_cast<std::size_t>(i)],
                pool[static_cast<std::size_t>(j)]);
    }
    std::vector<std::int64_t> cur(pool.begin(), pool.begin() + n);
    std::vector<std::int64_t> outside(pool.begin() + n, pool.end());
    double cur_err = 0;
    double cur_norm = norm_of(ctx, cur, &cur_err);
    ++best.evaluated;
    auto consider = [&](const std::vector<std::int64_t>& s, double v,
                        double e) {
      if (best.best_set.empty() || v < best.best_norm) {
        best.best_norm = v;
        best.err_bound = e;
        best.best_set = s;
        std::sort(best.best_set.begin(), best.best_set.end());
      }
    };
    consider(cur, cur_norm, cur_err);
    double T = 0.5;
    for (std::int64_t step = 0; step < proposals; ++step) {
      if (outside.empty()) break;
      const auto ia = static_cast<std::size_t>(
          rng() % static_cast<std::uint64_t>(cur.size()));
      const auto ib = static_cast<std::size_t>(
          rng() % static_cast<std::uint64_t>(outside.size()));
      std::swap(cur[ia], outside[ib]);
      double err = 0;
      const double v = norm_of(ctx, cur, &err);
      ++best.evaluated;
      const double delta = v - cur_norm;
      const double u =
          static_cast<double>(rng() >> 11) * 0x1.0p-53;  // uniform [0,1)
      if (delta < 0 || u < std::exp(-delta / T)) {
        cur_norm = v;
        cur_err = err;
        consider(cur, v, err);
      } else {
        std::swap(cur[ia], outside[ib]);  // revert
      }
      if ((step + 1) % p == 0) T *= 0.995;
    }
  }
}

}  // namespace

SearchResult extremal_search(const PrimeContext& ctx, std::int64_t n,
                             SearchStrategy strategy, std::uint64_t seed,
                             std::int64_t budget, bool orbit_reduce) {
  const std::int64_t p = ctx.p();
  if (n < 1 || n >= p)
    throw std::invalid_argument("extremal_search: need 1 <= n < p");
  SearchResult best;
  if (strategy == SearchStrategy::exhaustive) {
    if (binomial_guarded(p, n) > 1e7)
      throw std::length_error("extremal_search: C(p,n) exceeds the 1e7 guard");
    if (orbit_reduce && n >= 2) {
      // dilation/translation invariance: some minimizer contains {0,1}
      exhaustive_scan(ctx, {0, 1}, n, 2, best);
    } else {
      exhaustive_scan(ctx, {}, n, 0, best);
    }
  } else {
    if (budget < 1)
      throw std::invalid_argument("extremal_search: budget must be >= 1");
    local_search_scan(ctx, n, seed, budget, best);
    best.budget_exhausted = true;  // heuristic always stops on budget
  }
  try {
    best.bound_mediumsize = eval_bound(TheoremBound::mediumsize, p, n).value;
  } catch (const std::exception&) {
  }
  try {
    best.bound_charsmall = eval_bound(TheoremBound::charsmall, p, n).value;
  } catch (const std::exception&) {
  }
  return best;
}

}  // namespace zpw
