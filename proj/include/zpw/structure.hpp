#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zpw/bigint.hpp"
#include "zpw/zp_set.hpp"

namespace zpw {

// Generalized arithmetic progression {x0 + sum v_i * gen_i : 0 <= v_i < w_i}.
struct GapDescriptor {
  std::int64_t x0 = 0;
  std::vector<std::int64_t> generators;
  std::vector<std::int64_t> widths;

  int dimension() const { return static_cast<int>(generators.size()); }
  BigInt size() const;  // product of widths, not the distinct count
};

// Literal form "x0; x1,...,xd; w1,...,wd".
GapDescriptor parse_gap_literal(const PrimeContext& ctx,
                                const std::string& literal);
std::string format_gap_literal(const GapDescriptor& P);

void validate_gap(const PrimeContext& ctx, const GapDescriptor& P);

struct GapEnumeration {
  ZpSet set;
  bool proper;  // distinct count equals the width product
};

// Walks all width-product tuples; guarded at 1e7.
GapEnumeration gap_enumerate(const PrimeContext& ctx, const GapDescriptor& P);

struct DilateWitness {
  std::int64_t q;
  std::vector<std::int64_t> achieved;  // |min_abs_rep(q * gen_i)|
  std::vector<std::int64_t> targets;
};

// Smallest q in [1, p) with |q * gen_i| <= target_i for every i, by
// exhaustive scan; empty when no q works.
std::optional<DilateWitness> find_dilate(const PrimeContext& ctx,
                                         std::span<const std::int64_t> generators,
                                         std::span<const std::int64_t> targets);

struct BlichfeldtParams {
  std::vector<double> alphas;  // (A_size/p)^(1/d) / w_i
  std::int64_t m;              // floor(d_eps * p * (A_size/p)^(1/d_eps))
  bool degenerate;             // m == 0
};

BlichfeldtParams blichfeldt_params(std::int64_t A_size, const PrimeContext& ctx,
                                   const GapDescriptor& P, double d_eps);

struct LocalizeResult {
  std::int64_t q = 1;
  std::int64_t x0 = 0;
  ZpSet B;
  std::int64_t captured = 0;
  std::string search_space;  // documents the searched grid
};

// Maximizes |q(A - x0) cap [-m, m]| over q in [1, p) and x0 in A.
// Deterministic tie-break: smallest q, then smallest x0.
LocalizeResult localize(const ZpSet& A, std::int64_t m);

struct ApCoverResult {
  std::int64_t step = 1;    // AP step q
  std::int64_t base = 0;    // AP base point
  std::int64_t length = 0;  // AP length searched (= |A|)
  std::int64_t captured = 0;
  double ratio = 0;  // captured / |A|
};

// Bounded heuristic: scans every step q and reports the best overlap of A
// with a length-|A| AP. No structural guarantee is claimed.
ApCoverResult best_ap_cover(const ZpSet& A);

}  // namespace zpw
