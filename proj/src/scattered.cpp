#include "zpw/scattered.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zpw/energy.hpp"

namespace zpw {

std::vector<std::int64_t> ScatteredFamily::union_set() const {
  std::vector<std::int64_t> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

using i128 = __int128;

i128 annulus_outer(std::int64_t i, std::int64_t m) {
  return static_cast<i128>(m) << (2 * i);  // 4^i m
}

}  // namespace

ScatteredValidation validate_scattered(const ScatteredFamily& F) {
  ScatteredValidation out{true, {}};
  auto fail = [&out](const std::string& msg) {
    out.valid = false;
    out.violations.push_back(msg);
  };
  if (F.m < 1) fail("scale m must be >= 1");
  if (F.M < 1) fail("block size M must be >= 1");
  if (F.indices.size() != F.blocks.size())
    fail("index and block counts differ");
  for (std::size_t j = 0; j < F.indices.size(); ++j) {
    if (F.indices[j] < 1) fail("indices must be >= 1");
    if (F.indices[j] > 30) fail("index exceeds the supported range (30)");
    if (j > 0 && F.indices[j] <= F.indices[j - 1])
      fail("indices must be strictly increasing");
  }
  if (!out.valid) return out;

  std::vector<std::int64_t> all;
  for (std::size_t j = 0; j < F.blocks.size(); ++j) {
    const std::int64_t i = F.indices[j];
    const i128 outer = annulus_outer(i, F.m);
    const i128 half = outer / 2;  // 4^i m / 2, exact: 4^i is even
    std::vector<std::int64_t> blk = F.blocks[j];
    std::sort(blk.begin(), blk.end());
    blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
    if (static_cast<std::int64_t>(blk.size()) != F.M) {
      std::ostringstream msg;
      msg << "block " << j << " has " << blk.size()
          << " distinct elements, expected " << F.M;
      fail(msg.str());
    }
    for (std::int64_t b : blk) {
      const i128 v = b;
      const bool pos_side = v > half && v <= outer;
      const bool neg_side = v >= -outer && v < -half;
      if (!pos_side && !neg_side) {
        std::ostringstream msg;
        msg << "element " << b << " of block " << j
            << " lies outside the index-" << i << " annulus";
        fail(msg.str());
      }
    }
    all.insert(all.end(), blk.begin(), blk.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    fail("blocks are not pairwise disjoint");
  return out;
}

BigInt scattered_tk_bound(std::int64_t I, std::int64_t M, std::int64_t k) {
  if (I < 1 || M < 1 || k < 1)
    throw std::invalid_argument("scattered_tk_bound: arguments must be >= 1");
  using boost::multiprecision::pow;
  const auto uk = static_cast<unsigned>(k);
  return pow(BigInt(2), 8 * uk) * pow(BigInt(k), uk) * pow(BigInt(I), uk) *
         pow(BigInt(M), 2 * uk - 1);
}

BigInt nk_uniform_bound(std::int64_t M, std::int64_t k) {
  if (M < 1 || k < 1)
    throw std::invalid_argument("nk_uniform_bound: arguments must be >= 1");
  using boost::multiprecision::pow;
  const auto uk = static_cast<unsigned>(k);
  return pow(BigInt(2), 6 * uk) * pow(BigInt(k), uk) * pow(BigInt(M), uk - 1);
}

namespace {

void require_valid(const ScatteredFamily& F) {
  auto v = validate_scattered(F);
  if (!v.valid) {
    std::string joined = "scattered family invalid:";
    for (const auto& s : v.violations) joined += " " + s + ";";
    throw std::invalid_argument(joined);
  }
}

}  // namespace

ScatteredBoundReport verify_scattered_bound(const ScatteredFamily& F, int k) {
  require_valid(F);
  auto Q = F.union_set();
  EnergyReport rep = nk_profile(std::span<const std::int64_t>(Q), k);
  ScatteredBoundReport out;
  out.t_k_exact = rep.t_k;
  out.bound = scattered_tk_bound(F.block_count(), F.M, k);
  out.holds = out.t_k_exact <= out.bound;
  out.slack_ratio =
      out.bound.convert_to<double>() / out.t_k_exact.convert_to<double>();
  return out;
}

NkUniformReport verify_nk_uniform(const ScatteredFamily& F, int k) {
  require_valid(F);
  auto Q = F.union_set();
  EnergyReport rep = nk_profile(std::span<const std::int64_t>(Q), k);
  NkUniformReport out;
  out.max_nk = rep.max_count();
  out.bound = nk_uniform_bound(F.M, k);
  out.holds = out.max_nk <= out.bound;
  return out;
}

ShellDecomposition shell_decomposition(const ZpSet& B, std::int64_t m) {
  const std::int64_t p = B.modulus();
  if (m < 1) throw std::invalid_argument("shell_decomposition: m must be >= 1");
  ShellDecomposition S;
  S.m = m;
  if (6 * m >= p) {
    S.degenerate = true;
    S.l_0 = 0;
    if (2 * m < p) S.shells.push_back(interval_members(B, m));
    return S;
  }
  std::int64_t l0 = 1;
  while (3 * (static_cast<i128>(m) << (l0 + 1)) < p) ++l0;
  S.l_0 = l0;
  for (std::int64_t l = 0; l <= l0; ++l)
    S.shells.push_back(interval_members(B, m << l));
  for (std::int64_t l = 1; l <= l0; ++l)
    S.deltas.push_back(S.shells[static_cast<std::size_t>(l)].size() -
                       S.shells[static_cast<std::size_t>(l - 1)].size());
  return S;
}

std::variant<ScatteredFamily, SparseShell> extract_scattered(
    const ShellDecomposition& S, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("extract_scattered: M must be >= 1");
  if (S.degenerate || S.l_0 < 2)
    throw std::invalid_argument(
        "extract_scattered: decomposition has no even shell");
  ScatteredFamily F;
  F.m = S.m;
  F.M = M;
  const PrimeContext& ctx = S.shells.front().context();
  for (std::int64_t l = 2; l <= S.l_0; l += 2) {
    const ZpSet& outer = S.shells[static_cast<std::size_t>(l)];
    const ZpSet& inner = S.shells[static_cast<std::size_t>(l - 1)];
    std::vector<std::int64_t> fresh;
    for (std::int64_t r : outer.members())
      if (!inner.contains(r)) fresh.push_back(min_abs_rep(r, ctx).value);
    if (static_cast<std::int64_t>(fresh.size()) < M)
      return SparseShell{l, static_cast<std::int64_t>(fresh.size()), M};
    std::sort(fresh.begin(), fresh.end(), [](std::int64_t a, std::int64_t b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    });
    fresh.resize(static_cast<std::size_t>(M));
    std::sort(fresh.begin(), fresh.end());
    F.indices.push_back(l / 2);
    F.blocks.push_back(std::move(fresh));
  }
  return F;
}

std::string to_string(TraceBranch b) {
  switch (b) {
    case TraceBranch::sparse_shell:
      return "sparse_shell";
    case TraceBranch::scattered:
      return "scattered";
    case TraceBranch::degenerate:
    default:
      return "degenerate";
  }
}

namespace {

IneqPair make_ineq(std::string name, double lhs, const char* relation,
                   double rhs, bool must_hold, std::string note) {
  IneqPair p;
  p.name = std::move(name);
  p.lhs = lhs;
  p.rhs = rhs;
  p.relation = relation;
  p.must_hold = must_hold;
  p.holds = p.relation == "<=" ? lhs <= rhs : lhs >= rhs;
  p.note = std::move(note);
  return p;
}

}  // namespace

TraceReport trace_theorem3(const ZpSet& A, double eps, double C,
                           std::optional<int> k_override) {
  const PrimeContext& ctx = A.context();
  const std::int64_t p = ctx.p();
  if (A.empty()) throw std::invalid_argument("trace: A must be nonempty");
  if (3 * A.size() > p)
    throw std::invalid_argument("trace: need |A| <= p/3");
  if (!(eps >= 0) || !std::isfinite(eps) || !(C > 0) || !std::isfinite(C))
    throw std::invalid_argument("trace: need eps >= 0 and C > 0");

  TraceReport R;
  R.p = p;
  R.set_size = A.size();
  R.eps = eps;
  R.C = C;
  R.norm = wiener_norm(A);
  const double rawK = R.norm.value + R.norm.err_bound;
  R.K_clamped = rawK < 1.0;
  R.K = R.K_clamped ? 1.0 : rawK;
  R.d_eps = std::pow(std::log(R.K), 3.0 + eps);
  R.eta = std::exp(-C * R.K);

  const double a_over_p = static_cast<double>(R.set_size) / static_cast<double>(p);
  R.M = static_cast<std::int64_t>(std::floor(
      R.eta * static_cast<double>(R.set_size) * std::exp(-R.d_eps)));
  R.m = static_cast<std::int64_t>(std::floor(
      R.d_eps * static_cast<double>(p) * std::pow(a_over_p, 1.0 / R.d_eps)));

  if (R.m >= 1 && 6 * R.m < p) {
    std::int64_t l0 = 1;
    while (3 * (static_cast<i128>(R.m) << (l0 + 1)) < p) ++l0;
    R.l_0 = l0;
  } else {
    R.l_0 = 0;
  }

  if (R.M == 0 || R.l_0 < 2) {
    R.branch = TraceBranch::degenerate;
    R.verdict =
        "degenerate: the block budget M or the shell count collapses at this "
        "scale; parameter trail recorded, no branch inequality applies";
    return R;
  }

  LocalizeResult loc = localize(A, R.m);
  R.localized = true;
  R.q = loc.q;
  R.x0 = loc.x0;
  R.captured = loc.captured;
  R.inequalities.push_back(make_ineq(
      "localized_capture", static_cast<double>(loc.captured), ">=",
      static_cast<double>(R.set_size) * std::exp(-R.d_eps), false,
      "window capture vs the assumed structural lower bound; observational"));

  ShellDecomposition S = shell_decomposition(loc.B, R.m);
  R.deltas = S.deltas;

  auto extracted = extract_scattered(S, R.M);
  if (std::holds_alternative<SparseShell>(extracted)) {
    const auto& ss = std::get<SparseShell>(extracted);
    R.branch = TraceBranch::sparse_shell;
    R.sparse_l = ss.l;
    R.sparse_delta = ss.delta;
    const std::int64_t n = R.m << (ss.l - 1);
    if (R.eta < 0.5) {
      R.shell_check = shell_concentration_check(loc.B, n, R.eta);
      R.inequalities.push_back(make_ineq(
          "shell_concentration", R.shell_check->measured_norm, ">=",
          R.shell_check->bound, false,
          R.shell_check->applicable
              ? "measured norm vs min(ln 1/eta, ln outer); constant implicit"
              : "concentration hypothesis not met at this scale"));
      R.verdict =
          "sparse_shell: an even shell is underfull; concentration check "
          "recorded";
    } else {
      R.shell_check_note =
          "eta >= 1/2: concentration lemma out of range, check skipped";
      R.verdict =
          "sparse_shell: an even shell is underfull; eta too large for the "
          "concentration check";
    }
    return R;
  }

  const auto& F = std::get<ScatteredFamily>(extracted);
  auto valid = validate_scattered(F);
  if (!valid.valid)
    throw std::logic_error("trace: extracted family failed validation");
  R.branch = TraceBranch::scattered;
  R.I = F.block_count();
  R.k = k_override ? std::max(1, *k_override)
                   : std::max(1, static_cast<int>(std::floor(R.K)));

  auto Q = F.union_set();
  R.q_size = static_cast<std::int64_t>(Q.size());
  const i128 spread = static_cast<i128>(Q.back()) - Q.front();
  const i128 range_cells = static_cast<i128>(R.k) * spread + 1;
  const i128 conv_cost =
      static_cast<i128>(Q.size()) * range_cells * std::max(1, R.k - 1);
  const i128 res_cost = static_cast<i128>(Q.size()) * p * std::max(1, R.k - 1);
  if (range_cells > 100'000'000 || conv_cost + res_cost > 200'000'000) {
    R.budget_exhausted = true;
    R.verdict =
        "scattered: fold-count budget exhausted for this k; family and "
        "parameters recorded, energy inequalities skipped";
    return R;
  }

  EnergyReport erep = nk_profile(std::span<const std::int64_t>(Q), R.k);
  R.t_k_integer = erep.t_k;
  R.inequalities.push_back(make_ineq(
      "t_k_upper_scattered", erep.t_k.convert_to<double>(), "<=",
      scattered_tk_bound(R.I, R.M, R.k).convert_to<double>(), true,
      "exact integer-domain fold count vs 2^(8k) k^k I^k M^(2k-1)"));
  R.inequalities.push_back(
      make_ineq("nk_uniform", erep.max_count().convert_to<double>(), "<=",
                nk_uniform_bound(R.M, R.k).convert_to<double>(), true,
                "exact max representation count vs 2^(6k) k^k M^(k-1)"));

  std::vector<std::int64_t> q_res;
  q_res.reserve(Q.size());
  for (std::int64_t b : Q) q_res.push_back(ctx.reduce(b));
  ZpSet Qset = ZpSet::from_residues(ctx, q_res);
  TkLowerReport lower = t_k_lower_bound_check(loc.B, Qset, R.k);
  R.t_k_residue = lower.lhs;
  R.inequalities.push_back(
      make_ineq("t_k_lower_energy", lower.lhs.convert_to<double>(), ">=",
                lower.rhs, true,
                "exact residue-domain fold count vs |Q|^2k/(|B| K^(2k-2))"));

  const double lhs_final =
      static_cast<double>(R.q_size) / static_cast<double>(R.set_size) *
      std::pow(static_cast<double>(R.I), R.k - 1);
  const double rhs_final =
      std::pow(R.K, 3.0 * R.k - 2.0) * std::pow(2.0, 8.0 * R.k);
  R.inequalities.push_back(make_ineq(
      "final_contradiction_form", lhs_final, "<=", rhs_final, false,
      "(|Q|/|A|) I^(k-1) vs K^(3k-2) 2^(8k); the asymptotic argument needs "
      "the left side to outgrow the right, not expected at desk scale"));
  R.verdict = "scattered: family extracted, energy inequalities recorded";
  return R;
}

}  // namespace zpw
