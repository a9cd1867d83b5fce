#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zpw {

/// Numeric precision used by the transform kernels and the error bounds
/// attached to spectra. float64 accumulates in double, extended in long
/// double (still stored as double, with the extra rounding accounted for).
enum class PrecisionPolicy { float64, extended };

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::int64_t n);

/// The odd prime modulus p plus the precision policy every downstream
/// computation inherits. Immutable; cheap to copy.
class PrimeContext {
 public:
  explicit PrimeContext(std::int64_t p,
                        PrecisionPolicy policy = PrecisionPolicy::float64);

  std::int64_t p() const { return p_; }
  PrecisionPolicy precision() const { return policy_; }

  /// (p-1)/2, the largest magnitude of a signed representative.
  std::int64_t half() const { return (p_ - 1) / 2; }

  /// Unit roundoff of the active accumulation precision.
  double unit_roundoff() const;

  /// Reduce an arbitrary integer into [0, p).
  std::int64_t reduce(std::int64_t x) const {
    std::int64_t r = x % p_;
    return r < 0 ? r + p_ : r;
  }

  std::int64_t mul(std::int64_t a, std::int64_t b) const;

  friend bool operator==(const PrimeContext& a, const PrimeContext& b) {
    return a.p_ == b.p_ && a.policy_ == b.policy_;
  }

 private:
  std::int64_t p_;
  PrecisionPolicy policy_;
};

/// a^e mod m, e >= 0, m >= 1.
std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t m);

/// Multiplicative inverse mod p; rejects multiples of p.
std::int64_t mod_inverse(std::int64_t a, const PrimeContext& ctx);

/// The unique representative of a residue in (-p/2, p/2).
struct SignedRep {
  std::int64_t value;
};

/// Minimal-absolute-value representative of residue x, |result| <= (p-1)/2.
SignedRep min_abs_rep(std::int64_t x, const PrimeContext& ctx);

}  // namespace zpw
