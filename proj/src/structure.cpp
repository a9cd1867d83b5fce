#include "zpw/structure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zpw {

BigInt GapDescriptor::size() const {
  BigInt s = 1;
  for (std::int64_t w : widths) s *= w;
  return s;
}

void validate_gap(const PrimeContext& ctx, const GapDescriptor& P) {
  if (P.generators.empty())
    throw std::invalid_argument("gap: dimension must be >= 1");
  if (P.generators.size() != P.widths.size())
    throw std::invalid_argument("gap: generator and width counts differ");
  for (std::int64_t g : P.generators)
    if (ctx.reduce(g) == 0)
      throw std::invalid_argument("gap: generators must be nonzero mod p");
  for (std::int64_t w : P.widths)
    if (w < 1) throw std::invalid_argument("gap: widths must be >= 1");
}

GapDescriptor parse_gap_literal(const PrimeContext& ctx,
                                const std::string& literal) {
  std::vector<std::string> parts;
  std::stringstream ss(literal);
  std::string tok;
  while (std::getline(ss, tok, ';')) parts.push_back(tok);
  if (parts.size() != 3)
    throw std::invalid_argument(
        "gap literal must be \"x0; x1,...,xd; w1,...,wd\"");
  auto base = parse_int_list(parts[0]);
  if (base.size() != 1)
    throw std::invalid_argument("gap literal: exactly one base point");
  GapDescriptor P;
  P.x0 = base[0];
  P.generators = parse_int_list(parts[1]);
  P.widths = parse_int_list(parts[2]);
  validate_gap(ctx, P);
  return P;
}

std::string format_gap_literal(const GapDescriptor& P) {
  std::ostringstream out;
  out << P.x0 << "; ";
  for (std::size_t i = 0; i < P.generators.size(); ++i)
    out << (i ? "," : "") << P.generators[i];
  out << "; ";
  for (std::size_t i = 0; i < P.widths.size(); ++i)
    out << (i ? "," : "") << P.widths[i];
  return out.str();
}

GapEnumeration gap_enumerate(const PrimeContext& ctx, const GapDescriptor& P) {
  validate_gap(ctx, P);
  const BigInt total = P.size();
  if (total > 10'000'000)
    throw std::length_error("gap_enumerate: width product exceeds 1e7");
  const int d = P.dimension();
  std::vector<std::int64_t> v(static_cast<std::size_t>(d), 0);
  std::vector<bool> mask(static_cast<std::size_t>(ctx.p()), false);
  while (true) {
    std::int64_t x = ctx.reduce(P.x0);
    for (int i = 0; i < d; ++i)
      x = (x + ctx.mul(v[static_cast<std::size_t>(i)],
                       P.generators[static_cast<std::size_t>(i)])) %
          ctx.p();
    mask[static_cast<std::size_t>(x)] = true;
    int i = 0;
    for (; i < d; ++i) {
      auto ui = static_cast<std::size_t>(i);
      if (++v[ui] < P.widths[ui]) break;
      v[ui] = 0;
    }
    if (i == d) break;
  }
  GapEnumeration out{ZpSet::from_mask(ctx, std::move(mask)), false};
  out.proper = BigInt(out.set.size()) == total;
  return out;
}

std::optional<DilateWitness> find_dilate(
    const PrimeContext& ctx, std::span<const std::int64_t> generators,
    std::span<const std::int64_t> targets) {
  if (generators.empty() || generators.size() != targets.size())
    throw std::invalid_argument("find_dilate: need matching nonempty lists");
  std::vector<std::int64_t> gens(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    gens[i] = ctx.reduce(generators[i]);
    if (gens[i] == 0)
      throw std::invalid_argument("find_dilate: generators must be nonzero");
  }
  for (std::int64_t t : targets)
    if (t < 1 || 2 * t >= ctx.p())
      throw std::invalid_argument("find_dilate: targets must lie in [1, p/2)");
  for (std::int64_t q = 1; q < ctx.p(); ++q) {
    bool ok = true;
    std::vector<std::int64_t> achieved(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::int64_t mag = std::abs(min_abs_rep(ctx.mul(q, gens[i]), ctx).value);
      achieved[i] = mag;
      if (mag > targets[i]) {
        ok = false;
        break;
      }
    }
    if (ok)
      return DilateWitness{q, std::move(achieved),
                           {targets.begin(), targets.end()}};
  }
  return std::nullopt;
}

BlichfeldtParams blichfeldt_params(std::int64_t A_size, const PrimeContext& ctx,
                                   const GapDescriptor& P, double d_eps) {
  validate_gap(ctx, P);
  if (A_size < 1 || A_size > ctx.p())
    throw std::invalid_argument("blichfeldt_params: need 1 <= |A| <= p");
  if (!(d_eps > 0))
    throw std::invalid_argument("blichfeldt_params: d_eps must be positive");
  const double ratio =
      static_cast<double>(A_size) / static_cast<double>(ctx.p());
  const double root =
      std::pow(ratio, 1.0 / static_cast<double>(P.dimension()));
  BlichfeldtParams out;
  for (std::int64_t w : P.widths)
    out.alphas.push_back(root / static_cast<double>(w));
  out.m = static_cast<std::int64_t>(std::floor(
      d_eps * static_cast<double>(ctx.p()) * std::pow(ratio, 1.0 / d_eps)));
  out.degenerate = out.m == 0;
  return out;
}

namespace {

// Count of sorted residues inside the cyclic window [lo, hi].
std::int64_t cyclic_window_count(const std::vector<std::int64_t>& sorted,
                                 std::int64_t lo, std::int64_t hi) {
  auto count_leq = [&](std::int64_t v) {
    return static_cast<std::int64_t>(
        std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  };
  auto count_lt = [&](std::int64_t v) {
    return static_cast<std::int64_t>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  };
  if (lo <= hi) return count_leq(hi) - count_lt(lo);
  return (static_cast<std::int64_t>(sorted.size()) - count_lt(lo)) +
         count_leq(hi);
}

}  // namespace

LocalizeResult localize(const ZpSet& A, std::int64_t m) {
  const PrimeContext& ctx = A.context();
  const std::int64_t p = ctx.p();
  if (m < 1 || 2 * m >= p)
    throw std::invalid_argument("localize: need 1 <= m < p/2");
  if (A.empty()) throw std::invalid_argument("localize: A must be nonempty");
  const auto members = A.members();
  std::int64_t best_q = 1, best_x0 = members.front(), best_count = -1;
  std::vector<std::int64_t> images(members.size());
  for (std::int64_t q = 1; q < p; ++q) {
    for (std::size_t i = 0; i < members.size(); ++i)
      images[i] = ctx.mul(q, members[i]);
    std::vector<std::int64_t> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::int64_t c = images[i];
      const std::int64_t lo = ctx.reduce(c - m), hi = ctx.reduce(c + m);
      const std::int64_t count = cyclic_window_count(sorted, lo, hi);
      if (count > best_count) {
        best_count = count;
        best_q = q;
        best_x0 = members[i];
      }
    }
  }
  return LocalizeResult{best_q, best_x0, affine_dilate(A, best_q, best_x0),
                        best_count, "q in [1,p), x0 in A"};
}

ApCoverResult best_ap_cover(const ZpSet& A) {
  const PrimeContext& ctx = A.context();
  const std::int64_t p = ctx.p();
  if (A.empty()) throw std::invalid_argument("best_ap_cover: A empty");
  const auto members = A.members();
  const auto n = static_cast<std::int64_t>(members.size());
  ApCoverResult best;
  best.length = n;
  best.captured = -1;
  for (std::int64_t q = 1; q < p; ++q) {
    // a in {x0 + v q : v < n}  <=>  q^{-1} a in a window of span n-1
    const std::int64_t t = mod_inverse(q, ctx);
    std::vector<std::int64_t> sorted(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      sorted[i] = ctx.mul(t, members[i]);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const std::int64_t lo = sorted[i];
      const std::int64_t hi = ctx.reduce(lo + n - 1);
      const std::int64_t count = cyclic_window_count(sorted, lo, hi);
      if (count > best.captured) {
        best.captured = count;
        best.step = q;
        best.base = ctx.mul(q, lo);
      }
    }
  }
  best.ratio = static_cast<double>(best.captured) / static_cast<double>(n);
  return best;
}

}  // namespace zpw
