#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zpw/bigint.hpp"
#include "zpw/zp_set.hpp"

namespace zpw {

enum class Domain { integers, residues };

// Representation counts N_k(x) and the fold energy t_k = sum_x N_k(x)^2,
// both exact. Profile keys are plain integers in the integer domain and
// residues in [0, p) in the residue domain.
struct EnergyReport {
  int k = 0;
  Domain domain = Domain::integers;
  std::map<std::int64_t, BigInt> nk_profile;
  BigInt t_k;
  std::optional<double> spectral_estimate;

  BigInt profile_mass() const;   // sum of all counts, must equal |Q|^k
  BigInt max_count() const;      // max_x N_k(x)
};

// Iterated sparse-shift convolution of the indicator count vector.
// Integer domain allocates a dense array over [k*min(Q), k*max(Q)];
// the allocation is capped at 1e8 cells.
EnergyReport nk_profile(std::span<const std::int64_t> Q, int k);
EnergyReport nk_profile(const ZpSet& Q, int k);

BigInt t_k(std::span<const std::int64_t> Q, int k);
BigInt t_k(const ZpSet& Q, int k);

// Independent oracle: walks all |Q|^(2k) index tuples. Guarded by
// |Q|^(2k) <= 1e7.
BigInt t_k_brute(std::span<const std::int64_t> Q, int k);
BigInt t_k_brute(const ZpSet& Q, int k);

struct TkSpectral {
  double value;
  double err_estimate;
  bool warn;  // err_estimate > 0.4, the rounding guarantee is gone
};

// p^(2k-1) * sum_g |hat_chi_Q(g)|^(2k).
TkSpectral t_k_spectral(const ZpSet& Q, int k);

struct TkLowerReport {
  BigInt lhs;  // exact t_k(Q), residue domain
  double rhs;  // |Q|^(2k) / (|A| * K^(2k-2))
  double K;    // wiener_norm(A) padded by its error bound
  bool holds;
};

// Checks t_k(Q) >= |Q|^(2k) / (|A| K^(2k-2)) for Q inside A.
TkLowerReport t_k_lower_bound_check(const ZpSet& A, const ZpSet& Q, int k);

struct SumsetReport {
  BigInt sum_size;   // |A+B|
  BigInt diff_size;  // |A-B|
  BigRat doubling;   // |A+A| / |A|
  BigRat L;          // |A|^3 / t_2(A)
};

enum class SumSign { plus, minus };

std::vector<std::int64_t> sumset(std::span<const std::int64_t> A,
                                 std::span<const std::int64_t> B, SumSign sign,
                                 SumsetReport* report = nullptr);
ZpSet sumset(const ZpSet& A, const ZpSet& B, SumSign sign,
             SumsetReport* report = nullptr);

}  // namespace zpw
