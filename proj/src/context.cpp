#include "zpw/context.hpp"

#include <cfloat>
#include <limits>

namespace zpw {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = static_cast<std::uint64_t>(n - 1);
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sufficient witness set for all n < 3.3e24, so exact on int64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(a, d, static_cast<std::uint64_t>(n));
    if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, static_cast<std::uint64_t>(n));
      if (x == static_cast<std::uint64_t>(n - 1)) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeContext::PrimeContext(std::int64_t p, PrecisionPolicy policy)
    : p_(p), policy_(policy) {
  if (p < 3) throw std::invalid_argument("PrimeContext: p must be >= 3");
  if (p % 2 == 0) throw std::invalid_argument("PrimeContext: p must be odd");
  if (p > std::numeric_limits<std::int32_t>::max())
    throw std::invalid_argument("PrimeContext: p exceeds the 2^31-1 cap");
  if (!is_prime(p))
    throw std::invalid_argument("PrimeContext: " + std::to_string(p) +
                                " is not prime");
}

double PrimeContext::unit_roundoff() const {
  switch (policy_) {
    case PrecisionPolicy::extended:
      return static_cast<double>(LDBL_EPSILON) / 2.0;
    case PrecisionPolicy::float64:
    default:
      return DBL_EPSILON / 2.0;
  }
}

std::int64_t PrimeContext::mul(std::int64_t a, std::int64_t b) const {
  // p is capped at 2^31-1 so the product of two reduced residues fits int64.
  return (reduce(a) * reduce(b)) % p_;
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t m) {
  if (m < 1 || e < 0) throw std::invalid_argument("mod_pow: bad arguments");
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(powmod_u64(static_cast<std::uint64_t>(r),
                                              static_cast<std::uint64_t>(e),
                                              static_cast<std::uint64_t>(m)));
}

std::int64_t mod_inverse(std::int64_t a, const PrimeContext& ctx) {
  std::int64_t r = ctx.reduce(a);
  if (r == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
  return mod_pow(r, ctx.p() - 2, ctx.p());
}

SignedRep min_abs_rep(std::int64_t x, const PrimeContext& ctx) {
  if (x < 0 || x >= ctx.p())
    throw std::out_of_range("min_abs_rep: residue outside [0, p)");
  return SignedRep{x <= ctx.half() ? x : x - ctx.p()};
}

}  // namespace zpw
