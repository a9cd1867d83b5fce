#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zpw/context.hpp"

namespace zpw {

/// A subset of Z_p. Dense bit mask (O(1) membership, O(p) iteration),
/// immutable after construction.
class ZpSet {
 public:
  explicit ZpSet(PrimeContext ctx) : ctx_(ctx), mask_(ctx.p(), false) {}

  static ZpSet from_residues(PrimeContext ctx,
                             std::span<const std::int64_t> values);
  static ZpSet from_mask(PrimeContext ctx, std::vector<bool> mask);
  static ZpSet full(PrimeContext ctx);

  const PrimeContext& context() const { return ctx_; }
  std::int64_t modulus() const { return ctx_.p(); }
  std::int64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(std::int64_t residue) const {
    return mask_[static_cast<std::size_t>(ctx_.reduce(residue))];
  }

  /// Residues in increasing order.
  std::vector<std::int64_t> members() const;
  /// Minimal-absolute-value representatives, in increasing order.
  std::vector<std::int64_t> signed_members() const;

  const std::vector<bool>& mask() const { return mask_; }

  friend bool operator==(const ZpSet& a, const ZpSet& b) {
    return a.ctx_.p() == b.ctx_.p() && a.mask_ == b.mask_;
  }

 private:
  PrimeContext ctx_;
  std::vector<bool> mask_;
  std::int64_t count_ = 0;
};

/// Z_p \ A.
ZpSet complement(const ZpSet& a);

/// {q(x - x0) mod p : x in A}. q must be nonzero mod p; cardinality is
/// preserved because the map is a bijection.
ZpSet affine_dilate(const ZpSet& a, std::int64_t q, std::int64_t x0);

/// {a in A : |min_abs_rep(a)| <= n}. Requires 0 <= n < p/2, otherwise the
/// window wraps the whole group.
ZpSet interval_members(const ZpSet& a, std::int64_t n);

bool is_subset(const ZpSet& inner, const ZpSet& outer);

/// Comma-separated integers, reduced mod p. "0,1,4"
ZpSet parse_set_literal(PrimeContext ctx, const std::string& literal);

/// One integer per line; '#' starts a comment; blank lines ignored.
ZpSet read_set_file(PrimeContext ctx, const std::string& path);

/// Shared list parser ("3,-1,10"); used by set literals and CLI options.
std::vector<std::int64_t> parse_int_list(const std::string& literal);

}  // namespace zpw
