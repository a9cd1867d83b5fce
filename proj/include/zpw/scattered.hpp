#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zpw/bigint.hpp"
#include "zpw/dlvp.hpp"
#include "zpw/spectral.hpp"
#include "zpw/structure.hpp"
#include "zpw/zp_set.hpp"

namespace zpw {

// Union of equal-size integer blocks, block i confined to the 4-adic annulus
// [-4^i m, -4^i m/2) on the left and (4^i m/2, 4^i m] on the right.
struct ScatteredFamily {
  std::int64_t m = 1;
  std::int64_t M = 1;
  std::vector<std::int64_t> indices;               // strictly increasing, >= 1
  std::vector<std::vector<std::int64_t>> blocks;   // one per index

  std::int64_t block_count() const {
    return static_cast<std::int64_t>(indices.size());
  }
  std::vector<std::int64_t> union_set() const;
};

struct ScatteredValidation {
  bool valid;
  std::vector<std::string> violations;
};

ScatteredValidation validate_scattered(const ScatteredFamily& F);

// 2^(8k) k^k I^k M^(2k-1), exact.
BigInt scattered_tk_bound(std::int64_t I, std::int64_t M, std::int64_t k);

// 2^(6k) k^k M^(k-1), exact.
BigInt nk_uniform_bound(std::int64_t M, std::int64_t k);

struct ScatteredBoundReport {
  BigInt t_k_exact;
  BigInt bound;
  double slack_ratio;  // bound / t_k_exact
  bool holds;
};

ScatteredBoundReport verify_scattered_bound(const ScatteredFamily& F, int k);

struct NkUniformReport {
  BigInt max_nk;
  BigInt bound;
  bool holds;
};

NkUniformReport verify_nk_uniform(const ScatteredFamily& F, int k);

struct ShellDecomposition {
  std::int64_t m = 0;
  std::int64_t l_0 = 0;
  bool degenerate = false;  // 2m >= p/3, no valid l exists
  std::vector<ZpSet> shells;          // D_l for l = 0..l_0
  std::vector<std::int64_t> deltas;   // |D_l \ D_{l-1}| for l = 1..l_0
};

// D_l = {b in B : |b| <= 2^l m}, l_0 maximal with 2^(l_0) m < p/3.
ShellDecomposition shell_decomposition(const ZpSet& B, std::int64_t m);

struct SparseShell {
  std::int64_t l;      // first even shell with too few fresh elements
  std::int64_t delta;  // |D_l \ D_{l-1}|
  std::int64_t needed; // the requested block size M
};

// Picks the M smallest-magnitude fresh elements from every even shell
// (block index i = l/2); reports the first underfull even shell instead
// when one exists.
std::variant<ScatteredFamily, SparseShell> extract_scattered(
    const ShellDecomposition& S, std::int64_t M);

enum class TraceBranch { degenerate, sparse_shell, scattered };

std::string to_string(TraceBranch b);

struct IneqPair {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  std::string relation;    // "<=" or ">=", the direction being checked
  bool must_hold = false;  // proved statement vs observational pair
  bool holds = false;
  std::string note;
};

struct TraceReport {
  std::int64_t p = 0;
  std::int64_t set_size = 0;
  double eps = 0, C = 0;
  NormResult norm{0, 0};
  double K = 1;  // norm + err, clamped to >= 1
  bool K_clamped = false;
  double d_eps = 0;
  double eta = 0;  // exp(-C K)
  std::int64_t M = 0, m = 0, l_0 = 0, I = 0;
  TraceBranch branch = TraceBranch::degenerate;

  bool localized = false;
  std::int64_t q = 0, x0 = 0, captured = 0;
  std::vector<std::int64_t> deltas;

  // sparse_shell branch
  std::int64_t sparse_l = 0, sparse_delta = 0;
  std::optional<ShellCheckReport> shell_check;
  std::string shell_check_note;

  // scattered branch
  int k = 0;
  std::int64_t q_size = 0;
  BigInt t_k_integer;
  BigInt t_k_residue;
  bool budget_exhausted = false;

  std::vector<IneqPair> inequalities;
  std::string verdict;
};

// Instrumented walk of the main proof pipeline at desk scale. Requires
// nonempty A with |A| <= p/3.
TraceReport trace_theorem3(const ZpSet& A, double eps, double C,
                           std::optional<int> k_override = std::nullopt);

}  // namespace zpw
