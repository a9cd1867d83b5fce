#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "zpw/spectral.hpp"
#include "zpw/zp_set.hpp"

namespace zpw {

// Flat plateau on |x| <= n, linear taper to 2n, zero beyond.
TrigPoly vdp_polynomial(std::int64_t n, const PrimeContext& ctx);

// Coefficientwise product; on the value side this is (1/p) times the cyclic
// convolution of the two polynomials.
TrigPoly spectral_convolution(const TrigPoly& F, const TrigPoly& G);

TrigPoly vdp_mean(const TrigPoly& F, std::int64_t n);

struct ContinuousL1Result {
  double value = 0;
  std::int64_t samples_used = 0;
  double convergence_gap = 0;  // relative change at the last refinement
  bool converged = false;
};

// integral over [0,1] of |sum_j c_j e(b_j u)| by composite midpoint with
// doubling refinement; stops at relative change < 1e-8 or 2^26 samples.
ContinuousL1Result continuous_l1(std::span<const std::int64_t> frequencies,
                                 std::span<const std::complex<double>> coeffs);

// Same integral for real frequencies; integral frequencies are routed to the
// fast path above.
ContinuousL1Result continuous_l1_real(
    std::span<const double> frequencies,
    std::span<const std::complex<double>> coeffs);

struct DiscContReport {
  double discrete;  // (1/p) sum_g |F(g)|
  ContinuousL1Result continuous;
  double ratio;  // discrete / continuous
};

// Requires coefficients to vanish outside |x| <= p/3.
DiscContReport disc_cont_ratio(const TrigPoly& F);

struct HardyReport {
  ContinuousL1Result integral;
  double harmonic_sum;  // sum_j |c_j| / j, j = 1..l
  double ratio;
};

HardyReport hardy_ratio(std::span<const double> b,
                        std::span<const std::complex<double>> c);

struct ShellCheckReport {
  bool applicable;
  double bound;  // min(ln(1/eta), ln |B cap [-2n,2n]|)
  double measured_norm;
  std::int64_t inner_count;  // |B cap [-n,n]|
  std::int64_t outer_count;  // |B cap [-2n,2n]|
};

// Concentration test |B cap [-n,n]| >= (1-eta)|B cap [-2n,2n]| paired with
// the measured full norm; requires n <= p/6 and 0 < eta < 1/2.
ShellCheckReport shell_concentration_check(const ZpSet& B, std::int64_t n,
                                           double eta);

}  // namespace zpw
