#include "zpw/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zpw/dlvp.hpp"
#include "zpw/energy.hpp"
#include "zpw/scattered.hpp"
#include "zpw/spectral.hpp"
#include "zpw/structure.hpp"
#include "zpw/zp_set.hpp"

namespace zpw {

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1)
}

double sym_double(std::mt19937_64& rng) { return 2.0 * unit_double(rng) - 1.0; }

std::int64_t rand_below(std::mt19937_64& rng, std::int64_t n) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

ZpSet random_subset(const PrimeContext& ctx, std::int64_t n,
                    std::mt19937_64& rng) {
  const std::int64_t p = ctx.p();
  std::vector<std::int64_t> pool(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto j = i + rand_below(rng, p - i);
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(j)]);
  }
  return ZpSet::from_residues(
      ctx, std::span<const std::int64_t>(pool.data(),
                                         static_cast<std::size_t>(n)));
}

Eigen::VectorXcd random_function(std::int64_t p, std::mt19937_64& rng) {
  Eigen::VectorXcd f(p);
  for (std::int64_t i = 0; i < p; ++i)
    f[static_cast<Eigen::Index>(i)] = {sym_double(rng), sym_double(rng)};
  return f;
}

void note_failure(SuiteResult& res, const std::string& msg) {
  ++res.failures;
  if (res.notes.size() < 8) res.notes.push_back(msg);
}

std::vector<std::int64_t> primes_or(const SuiteConfig& cfg,
                                    std::vector<std::int64_t> fallback) {
  return cfg.primes.empty() ? std::move(fallback) : cfg.primes;
}

int trials_or(const SuiteConfig& cfg, int fallback) {
  return cfg.trials > 0 ? cfg.trials : fallback;
}

}  // namespace

SuiteResult suite_parseval(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "parseval";
  const auto primes = primes_or(cfg, {13, 101, 1009});
  const int trials = trials_or(cfg, 20);
  std::mt19937_64 rng(cfg.seed);
  for (std::int64_t p : primes) {
    PrimeContext ctx(p);
    for (int t = 0; t < trials; ++t) {
      ++res.trials;
      Eigen::VectorXcd f = random_function(p, rng);
      Spectrum S = fourier_transform(ctx, f);
      double lhs = 0, rhs = 0, maxf = 0;
      for (Eigen::Index i = 0; i < p; ++i) {
        lhs += std::norm(S.values[i]);
        rhs += std::norm(f[i]);
        maxf = std::max(maxf, std::abs(f[i]));
      }
      rhs /= static_cast<double>(p);
      bool ok = std::abs(lhs - rhs) <= 1e-9 * rhs;
      Eigen::VectorXcd g = inverse_transform(S);
      double maxdiff = 0;
      for (Eigen::Index i = 0; i < p; ++i)
        maxdiff = std::max(maxdiff, std::abs(g[i] - f[i]));
      ok = ok && maxdiff <= 1e-9 * maxf;
      if (!ok) {
        std::ostringstream msg;
        msg << "p=" << p << " trial=" << t << " parseval_gap="
            << std::abs(lhs - rhs) / rhs << " roundtrip_gap=" << maxdiff;
        note_failure(res, msg.str());
      }
    }
  }
  return res;
}

SuiteResult suite_young(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "young";
  const auto primes = primes_or(cfg, {13, 101, 1009});
  const int trials = trials_or(cfg, 30);
  std::mt19937_64 rng(cfg.seed);
  for (std::int64_t p : primes) {
    PrimeContext ctx(p);
    for (int t = 0; t < trials; ++t) {
      ++res.trials;
      TrigPoly F(ctx, random_function(p, rng));
      TrigPoly G(ctx, random_function(p, rng));
      NormResult nFG = wiener_norm_poly(spectral_convolution(F, G));
      NormResult nF = wiener_norm_poly(F);
      NormResult nG = wiener_norm_poly(G);
      const double rhs_upper = (nF.value + nF.err_bound) *
                               (nG.value + nG.err_bound) /
                               static_cast<double>(p);
      if (!(nFG.value <= rhs_upper + nFG.err_bound)) {
        std::ostringstream msg;
        msg << "p=" << p << " trial=" << t << " lhs=" << nFG.value
            << " rhs=" << rhs_upper;
        note_failure(res, msg.str());
      }
    }
  }
  return res;
}

SuiteResult suite_vdp(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "vdp";
  const auto primes = primes_or(cfg, {13, 101, 1009});
  const int trials = trials_or(cfg, 100);
  std::mt19937_64 rng(cfg.seed);
  for (std::int64_t p : primes) {
    PrimeContext ctx(p);
    // kernel norm, every admissible order
    for (std::int64_t n = 1; 4 * n <= p; ++n) {
      ++res.trials;
      NormResult nr = wiener_norm_poly(vdp_polynomial(n, ctx));
      if (!(nr.value <= 3.0 * static_cast<double>(p) + nr.err_bound)) {
        std::ostringstream msg;
        msg << "kernel p=" << p << " n=" << n << " norm=" << nr.value;
        note_failure(res, msg.str());
      }
    }
    // mean bound on random polynomials
    for (int t = 0; t < trials; ++t) {
      ++res.trials;
      TrigPoly F(ctx, random_function(p, rng));
      const std::int64_t n = 1 + rand_below(rng, p / 4);
      NormResult lhs = wiener_norm_poly(vdp_mean(F, n));
      NormResult rhs = wiener_norm_poly(F);
      if (!(lhs.value <= 3.0 * (rhs.value + rhs.err_bound) + lhs.err_bound)) {
        std::ostringstream msg;
        msg << "mean p=" << p << " trial=" << t << " n=" << n
            << " lhs=" << lhs.value << " rhs3=" << 3.0 * rhs.value;
        note_failure(res, msg.str());
      }
    }
  }
  return res;
}

SuiteResult suite_identities(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "identities";
  const auto primes = primes_or(cfg, {13, 101, 1009});
  const int trials = trials_or(cfg, 50);
  std::mt19937_64 rng(cfg.seed);
  for (std::int64_t p : primes) {
    PrimeContext ctx(p);
    for (int t = 0; t < trials; ++t) {
      ++res.trials;
      const std::int64_t n = 1 + rand_below(rng, p - 1);
      ZpSet A = random_subset(ctx, n, rng);
      NormResult nr = wiener_norm(A);
      bool ok = nr.value >= 1.0 - nr.err_bound;
      // complement identity
      NormResult nc = wiener_norm(complement(A));
      const double expected =
          nr.value + 1.0 - 2.0 * static_cast<double>(n) / static_cast<double>(p);
      ok = ok && std::abs(nc.value - expected) <=
                     2.0 * std::max(nr.err_bound, nc.err_bound);
      // dilation invariance
      const std::int64_t q = 1 + rand_below(rng, p - 1);
      const std::int64_t x0 = rand_below(rng, p);
      NormResult nd = wiener_norm(affine_dilate(A, q, x0));
      ok = ok && std::abs(nd.value - nr.value) <=
                     2.0 * std::max(nr.err_bound, nd.err_bound);
      if (!ok) {
        std::ostringstream msg;
        msg << "p=" << p << " trial=" << t << " n=" << n
            << " norm=" << nr.value << " comp=" << nc.value
            << " dilate=" << nd.value;
        note_failure(res, msg.str());
      }
    }
  }
  return res;
}

SuiteResult suite_tk_lower(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "tk-lower";
  const auto primes = primes_or(cfg, {3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
  const int trials = trials_or(cfg, 200);
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < trials; ++t) {
    ++res.trials;
    const std::int64_t p =
        primes[static_cast<std::size_t>(rand_below(
            rng, static_cast<std::int64_t>(primes.size())))];
    PrimeContext ctx(p);
    const std::int64_t na = 1 + rand_below(rng, p - 1);
    ZpSet A = random_subset(ctx, na, rng);
    auto members = A.members();
    // nonempty random sub-selection
    std::vector<std::int64_t> picked;
    for (std::int64_t a : members)
      if (rng() & 1) picked.push_back(a);
    if (picked.empty()) picked.push_back(members[static_cast<std::size_t>(
        rand_below(rng, static_cast<std::int64_t>(members.size())))]);
    ZpSet Q = ZpSet::from_residues(ctx, picked);
    const int k = 2 + static_cast<int>(rand_below(rng, 2));
    TkLowerReport rep = t_k_lower_bound_check(A, Q, k);
    TkLowerReport energy2 = t_k_lower_bound_check(A, A, 2);
    if (!rep.holds || !energy2.holds) {
      std::ostringstream msg;
      msg << "p=" << p << " |A|=" << na << " |Q|=" << picked.size()
          << " k=" << k << " holds=" << rep.holds
          << " energy2=" << energy2.holds;
      note_failure(res, msg.str());
    }
  }
  return res;
}

SuiteResult suite_sumdiff(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "sumdiff";
  const int trials = trials_or(cfg, 500);
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < trials; ++t) {
    ++res.trials;
    const std::int64_t n = 1 + rand_below(rng, 12);
    std::set<std::int64_t> vals;
    while (static_cast<std::int64_t>(vals.size()) < n)
      vals.insert(rand_below(rng, 61) - 30);
    std::vector<std::int64_t> A(vals.begin(), vals.end());
    SumsetReport rep;
    sumset(std::span<const std::int64_t>(A), std::span<const std::int64_t>(A),
           SumSign::plus, &rep);
    // |A| |A+A| <= |A-A|^2, exact
    if (!(BigInt(n) * rep.sum_size <= rep.diff_size * rep.diff_size)) {
      std::ostringstream msg;
      msg << "trial=" << t << " |A|=" << n << " |A+A|=" << rep.sum_size
          << " |A-A|=" << rep.diff_size;
      note_failure(res, msg.str());
    }
  }
  return res;
}

SuiteResult suite_scattered(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "scattered";
  const int trials = trials_or(cfg, 200);
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < trials; ++t) {
    ++res.trials;
    ScatteredFamily F;
    F.m = 1 + rand_below(rng, 4);
    F.M = 1 + rand_below(rng, 4);
    const std::int64_t I = 1 + rand_below(rng, 6);
    // choose I distinct indices from 1..6
    std::vector<std::int64_t> idx_pool{1, 2, 3, 4, 5, 6};
    for (std::int64_t i = 0; i < I; ++i) {
      const auto j = i + rand_below(rng, 6 - i);
      std::swap(idx_pool[static_cast<std::size_t>(i)],
                idx_pool[static_cast<std::size_t>(j)]);
    }
    idx_pool.resize(static_cast<std::size_t>(I));
    std::sort(idx_pool.begin(), idx_pool.end());
    F.indices = idx_pool;
    for (std::int64_t i : F.indices) {
      // annulus candidates, both signs
      std::vector<std::int64_t> cand;
      const std::int64_t outer = F.m << (2 * i);
      for (std::int64_t v = outer / 2 + 1; v <= outer; ++v) {
        cand.push_back(v);
        cand.push_back(-v);
      }
      for (std::size_t j = 0; j < static_cast<std::size_t>(F.M); ++j) {
        const auto sw = j + static_cast<std::size_t>(rand_below(
                                rng, static_cast<std::int64_t>(cand.size() - j)));
        std::swap(cand[j], cand[sw]);
      }
      cand.resize(static_cast<std::size_t>(F.M));
      std::sort(cand.begin(), cand.end());
      F.blocks.push_back(std::move(cand));
    }
    const int k = 1 + static_cast<int>(rand_below(rng, 3));
    auto valid = validate_scattered(F);
    if (!valid.valid) {
      note_failure(res, "generated family invalid at trial " +
                            std::to_string(t));
      continue;
    }
    auto bound_rep = verify_scattered_bound(F, k);
    auto nk_rep = verify_nk_uniform(F, k);
    if (!bound_rep.holds || !nk_rep.holds) {
      std::ostringstream msg;
      msg << "trial=" << t << " I=" << I << " M=" << F.M << " m=" << F.m
          << " k=" << k << " t_k=" << bound_rep.t_k_exact
          << " bound=" << bound_rep.bound << " max_nk=" << nk_rep.max_nk;
      note_failure(res, msg.str());
    }
  }
  return res;
}

SuiteResult suite_blichfeldt(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "blichfeldt";
  const auto primes = primes_or(cfg, {11, 31, 101, 257, 503, 1009});
  const int trials = trials_or(cfg, 200);
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < trials; ++t) {
    ++res.trials;
    const std::int64_t p =
        primes[static_cast<std::size_t>(rand_below(
            rng, static_cast<std::int64_t>(primes.size())))];
    PrimeContext ctx(p);
    const std::int64_t d = 1 + rand_below(rng, 3);
    // targets t_i >= p^((d-1)/d) give prod(t_i/p) >= 1/p
    const double lower_d =
        std::pow(static_cast<double>(p),
                 static_cast<double>(d - 1) / static_cast<double>(d));
    const auto lower = static_cast<std::int64_t>(std::ceil(lower_d));
    const std::int64_t upper = (p - 1) / 2;
    std::vector<std::int64_t> gens, targets;
    for (std::int64_t i = 0; i < d; ++i) {
      gens.push_back(1 + rand_below(rng, p - 1));
      targets.push_back(lower + rand_below(rng, std::max<std::int64_t>(
                                                    1, upper - lower)));
    }
    auto witness = find_dilate(ctx, gens, targets);
    bool ok = witness.has_value();
    if (ok) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::int64_t mag = std::abs(
            min_abs_rep(ctx.mul(witness->q, gens[i]), ctx).value);
        ok = ok && mag == witness->achieved[i] && mag <= targets[i];
      }
      // independent minimality scan
      for (std::int64_t q = 1; ok && q < witness->q; ++q) {
        bool all = true;
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (std::abs(min_abs_rep(ctx.mul(q, gens[i]), ctx).value) >
              targets[i]) {
            all = false;
            break;
          }
        if (all) ok = false;
      }
    }
    if (!ok) {
      std::ostringstream msg;
      msg << "trial=" << t << " p=" << p << " d=" << d
          << " found=" << witness.has_value();
      note_failure(res, msg.str());
    }
  }
  return res;
}

std::vector<std::string> suite_names() {
  return {"parseval", "young",   "vdp",       "identities",
          "tk-lower", "sumdiff", "scattered", "blichfeldt"};
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "parseval") return suite_parseval(cfg);
  if (name == "young") return suite_young(cfg);
  if (name == "vdp") return suite_vdp(cfg);
  if (name == "identities") return suite_identities(cfg);
  if (name == "tk-lower") return suite_tk_lower(cfg);
  if (name == "sumdiff") return suite_sumdiff(cfg);
  if (name == "scattered") return suite_scattered(cfg);
  if (name == "blichfeldt") return suite_blichfeldt(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace zpw
