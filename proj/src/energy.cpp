#include "zpw/energy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "zpw/spectral.hpp"

namespace zpw {

BigInt EnergyReport::profile_mass() const {
  BigInt s = 0;
  for (const auto& [x, c] : nk_profile) s += c;
  return s;
}

BigInt EnergyReport::max_count() const {
  BigInt m = 0;
  for (const auto& [x, c] : nk_profile)
    if (c > m) m = c;
  return m;
}

namespace {

constexpr std::int64_t kCellCap = 100'000'000;
constexpr double kBruteCap = 1e7;

std::vector<std::int64_t> dedup_sorted(std::span<const std::int64_t> Q) {
  std::vector<std::int64_t> v(Q.begin(), Q.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) throw std::invalid_argument("energy: set must be nonempty");
  return v;
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("energy: k must be >= 1");
}

void require_brute_budget(std::size_t q, int k) {
  double tuples = std::pow(static_cast<double>(q), 2.0 * k);
  if (tuples > kBruteCap)
    throw std::length_error("t_k_brute: |Q|^(2k) exceeds the 1e7 budget");
}

EnergyReport report_from_counts(const std::vector<BigInt>& counts,
                                std::int64_t key_base, int k, Domain domain) {
  EnergyReport rep;
  rep.k = k;
  rep.domain = domain;
  BigInt tk = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    rep.nk_profile[key_base + static_cast<std::int64_t>(i)] = counts[i];
    tk += counts[i] * counts[i];
  }
  rep.t_k = tk;
  return rep;
}

}  // namespace

EnergyReport nk_profile(std::span<const std::int64_t> Q, int k) {
  check_k(k);
  auto q = dedup_sorted(Q);
  const std::int64_t lo = q.front(), hi = q.back();
  const __int128 cells =
      static_cast<__int128>(k) * (hi - lo) + 1;
  if (cells > kCellCap)
    throw std::length_error("nk_profile: sum range exceeds the 1e8 cell cap");

  // counts[i] holds N_step(step*lo + i) after each pass
  std::vector<BigInt> counts(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t x : q) counts[static_cast<std::size_t>(x - lo)] = 1;
  for (int step = 2; step <= k; ++step) {
    std::vector<BigInt> next(
        static_cast<std::size_t>(step) * static_cast<std::size_t>(hi - lo) + 1);
    for (std::int64_t x : q) {
      const auto shift = static_cast<std::size_t>(x - lo);
      for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0) next[i + shift] += counts[i];
    }
    counts.swap(next);
  }
  return report_from_counts(counts, static_cast<std::int64_t>(k) * lo, k,
                            Domain::integers);
}

EnergyReport nk_profile(const ZpSet& Q, int k) {
  check_k(k);
  if (Q.empty()) throw std::invalid_argument("energy: set must be nonempty");
  const std::int64_t p = Q.modulus();
  std::vector<BigInt> counts(static_cast<std::size_t>(p));
  for (std::int64_t r = 0; r < p; ++r)
    if (Q.contains(r)) counts[static_cast<std::size_t>(r)] = 1;
  auto members = Q.members();
  for (int step = 2; step <= k; ++step) {
    std::vector<BigInt> next(static_cast<std::size_t>(p));
    for (std::int64_t x : members) {
      for (std::int64_t i = 0; i < p; ++i) {
        const auto& c = counts[static_cast<std::size_t>(i)];
        if (c != 0) next[static_cast<std::size_t>((i + x) % p)] += c;
      }
    }
    counts.swap(next);
  }
  return report_from_counts(counts, 0, k, Domain::residues);
}

BigInt t_k(std::span<const std::int64_t> Q, int k) {
  return nk_profile(Q, k).t_k;
}

BigInt t_k(const ZpSet& Q, int k) { return nk_profile(Q, k).t_k; }

namespace {

// Walks all |Q|^(2k) ordered tuples with an odometer; sum_fn folds a tuple
// half into the comparable key.
template <typename SumFn>
BigInt brute_count(const std::vector<std::int64_t>& q, int k, SumFn sum_fn) {
  const std::size_t n = q.size();
  const int digits = 2 * k;
  std::vector<std::size_t> idx(static_cast<std::size_t>(digits), 0);
  std::uint64_t matches = 0;
  while (true) {
    std::int64_t s1 = 0, s2 = 0;
    for (int j = 0; j < k; ++j) s1 += q[idx[static_cast<std::size_t>(j)]];
    for (int j = k; j < digits; ++j) s2 += q[idx[static_cast<std::size_t>(j)]];
    if (sum_fn(s1) == sum_fn(s2)) ++matches;
    int d = 0;
    for (; d < digits; ++d) {
      if (++idx[static_cast<std::size_t>(d)] < n) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
    if (d == digits) break;
  }
  return BigInt(matches);
}

}  // namespace

BigInt t_k_brute(std::span<const std::int64_t> Q, int k) {
  check_k(k);
  auto q = dedup_sorted(Q);
  require_brute_budget(q.size(), k);
  return brute_count(q, k, [](std::int64_t s) { return s; });
}

BigInt t_k_brute(const ZpSet& Q, int k) {
  check_k(k);
  if (Q.empty()) throw std::invalid_argument("energy: set must be nonempty");
  auto q = Q.members();
  require_brute_budget(q.size(), k);
  const std::int64_t p = Q.modulus();
  return brute_count(q, k, [p](std::int64_t s) { return s % p; });
}

TkSpectral t_k_spectral(const ZpSet& Q, int k) {
  check_k(k);
  if (Q.empty()) throw std::invalid_argument("energy: set must be nonempty");
  Spectrum S = indicator_spectrum(Q);
  const std::int64_t p = Q.modulus();
  long double sum = 0, grad = 0;
  for (Eigen::Index i = 0; i < S.values.size(); ++i) {
    const long double a = std::abs(S.values[i]);
    long double pw = 1;
    for (int j = 0; j < 2 * k - 1; ++j) pw *= a;
    grad += static_cast<long double>(2 * k) * pw;
    sum += pw * a;
  }
  long double scale = 1;
  for (int j = 0; j < 2 * k - 1; ++j) scale *= static_cast<long double>(p);
  const double value = static_cast<double>(scale * sum);
  const double err =
      static_cast<double>(scale * grad * static_cast<long double>(S.err_bound));
  TkSpectral out;
  out.value = value;
  out.err_estimate = err;
  out.warn = err > 0.4;
  return out;
}

TkLowerReport t_k_lower_bound_check(const ZpSet& A, const ZpSet& Q, int k) {
  check_k(k);
  if (A.empty()) throw std::invalid_argument("t_k_lower_bound_check: A empty");
  if (Q.empty()) throw std::invalid_argument("t_k_lower_bound_check: Q empty");
  if (!is_subset(Q, A))
    throw std::invalid_argument("t_k_lower_bound_check: Q must lie inside A");
  NormResult nr = wiener_norm(A);
  TkLowerReport rep;
  rep.K = nr.value + nr.err_bound;
  rep.lhs = t_k(Q, k);
  const double qn = static_cast<double>(Q.size());
  const double an = static_cast<double>(A.size());
  rep.rhs = std::pow(qn, 2.0 * k) / (an * std::pow(rep.K, 2.0 * k - 2.0));
  rep.holds = rep.lhs.convert_to<double>() >= rep.rhs;
  return rep;
}

namespace {

SumsetReport make_report_int(const std::vector<std::int64_t>& a,
                             const std::vector<std::int64_t>& b) {
  std::set<std::int64_t> plus, minus, dbl;
  for (std::int64_t x : a)
    for (std::int64_t y : b) {
      plus.insert(x + y);
      minus.insert(x - y);
    }
  for (std::int64_t x : a)
    for (std::int64_t y : a) dbl.insert(x + y);
  SumsetReport rep;
  rep.sum_size = static_cast<std::int64_t>(plus.size());
  rep.diff_size = static_cast<std::int64_t>(minus.size());
  rep.doubling = BigRat(static_cast<std::int64_t>(dbl.size()),
                        static_cast<std::int64_t>(a.size()));
  BigInt a3 = BigInt(a.size());
  a3 = a3 * a3 * a3;
  rep.L = BigRat(a3, t_k(std::span<const std::int64_t>(a), 2));
  return rep;
}

}  // namespace

std::vector<std::int64_t> sumset(std::span<const std::int64_t> A,
                                 std::span<const std::int64_t> B, SumSign sign,
                                 SumsetReport* report) {
  auto a = dedup_sorted(A);
  auto b = dedup_sorted(B);
  std::set<std::int64_t> out;
  for (std::int64_t x : a)
    for (std::int64_t y : b) out.insert(sign == SumSign::plus ? x + y : x - y);
  if (report) *report = make_report_int(a, b);
  return {out.begin(), out.end()};
}

ZpSet sumset(const ZpSet& A, const ZpSet& B, SumSign sign,
             SumsetReport* report) {
  if (A.modulus() != B.modulus())
    throw std::invalid_argument("sumset: moduli differ");
  if (A.empty() || B.empty())
    throw std::invalid_argument("sumset: sets must be nonempty");
  const PrimeContext& ctx = A.context();
  const std::int64_t p = ctx.p();
  auto image = [&](const ZpSet& lhs, const ZpSet& rhs, SumSign sg) {
    std::vector<bool> mask(static_cast<std::size_t>(p), false);
    for (std::int64_t x : lhs.members())
      for (std::int64_t y : rhs.members()) {
        std::int64_t v = sg == SumSign::plus ? x + y : x - y;
        mask[static_cast<std::size_t>(ctx.reduce(v))] = true;
      }
    return ZpSet::from_mask(ctx, std::move(mask));
  };
  ZpSet out = image(A, B, sign);
  if (report) {
    SumsetReport rep;
    rep.sum_size = image(A, B, SumSign::plus).size();
    rep.diff_size = image(A, B, SumSign::minus).size();
    rep.doubling = BigRat(image(A, A, SumSign::plus).size(), A.size());
    BigInt a3 = BigInt(A.size());
    a3 = a3 * a3 * a3;
    rep.L = BigRat(a3, t_k(A, 2));
    *report = rep;
  }
  return out;
}

}  // namespace zpw
