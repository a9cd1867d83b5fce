#include "zpw/dlvp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zpw/fft.hpp"

namespace zpw {

TrigPoly vdp_polynomial(std::int64_t n, const PrimeContext& ctx) {
  if (n < 1 || 4 * n > ctx.p())
    throw std::invalid_argument("vdp_polynomial: need 1 <= n <= p/4");
  TrigPoly V = zero_poly(ctx);
  V.at_signed(0) = 1.0;
  for (std::int64_t x = 1; x <= 2 * n; ++x) {
    double c = x <= n ? 1.0
                      : static_cast<double>(2 * n - x + 1) /
                            static_cast<double>(n + 1);
    V.at_signed(x) = c;
    V.at_signed(-x) = c;
  }
  return V;
}

TrigPoly spectral_convolution(const TrigPoly& F, const TrigPoly& G) {
  if (!(F.ctx == G.ctx))
    throw std::invalid_argument("spectral_convolution: context mismatch");
  return TrigPoly(F.ctx, F.coeffs.cwiseProduct(G.coeffs));
}

TrigPoly vdp_mean(const TrigPoly& F, std::int64_t n) {
  return spectral_convolution(F, vdp_polynomial(n, F.ctx));
}

namespace {

constexpr std::int64_t kSampleCap = std::int64_t{1} << 26;
constexpr std::int64_t kFftSampleCap = std::int64_t{1} << 22;
constexpr double kRelTol = 1e-8;

std::int64_t next_pow2_i64(std::int64_t n) {
  std::int64_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// Midpoint estimate at N samples for integer frequencies, one transform of
// size N. The half-sample offset folds exactly into the bin coefficients:
// P((x+1/2)/N) = sum_j [c_j e(b_j/(2N))] e((b_j mod N) x / N).
double midpoint_integer_fft(std::span<const std::int64_t> b,
                            std::span<const std::complex<double>> c,
                            std::int64_t N) {
  std::vector<std::complex<double>> d(static_cast<std::size_t>(N));
  const double pi = std::numbers::pi_v<double>;
  for (std::size_t j = 0; j < b.size(); ++j) {
    std::int64_t t = b[j] % (2 * N);
    if (t < 0) t += 2 * N;
    double ang = pi * static_cast<double>(t) / static_cast<double>(N);
    std::complex<double> twist(std::cos(ang), std::sin(ang));
    std::int64_t g = b[j] % N;
    if (g < 0) g += N;
    d[static_cast<std::size_t>(g)] += c[j] * twist;
  }
  // values[x] = sum_g d[g] e(+gx/N) = dft(d) read at N-x
  auto D = dft(d);
  long double acc = 0;
  for (std::int64_t x = 0; x < N; ++x)
    acc += std::abs(D[static_cast<std::size_t>((N - x) % N)]);
  return static_cast<double>(acc / static_cast<long double>(N));
}

// Streaming evaluation via per-frequency phase recurrences, with the phases
// recomputed from scratch every block to stop drift. Works for real b and
// for sample counts too large to hold an FFT buffer.
double midpoint_stream(std::span<const double> b,
                       std::span<const std::complex<double>> c,
                       std::int64_t N) {
  constexpr std::int64_t kBlock = 4096;
  const double two_pi = 2.0 * std::numbers::pi_v<double>;
  const std::size_t l = b.size();
  std::vector<std::complex<double>> phase(l), step(l);
  for (std::size_t j = 0; j < l; ++j) {
    double frac = b[j] / static_cast<double>(N);
    frac -= std::floor(frac);
    step[j] = std::polar(1.0, two_pi * frac);
  }
  long double acc = 0;
  for (std::int64_t x = 0; x < N; ++x) {
    if (x % kBlock == 0) {
      for (std::size_t j = 0; j < l; ++j) {
        double t = b[j] * (static_cast<double>(x) + 0.5) /
                   static_cast<double>(N);
        t -= std::floor(t);
        phase[j] = std::polar(1.0, two_pi * t);
      }
    }
    std::complex<double> v{0, 0};
    for (std::size_t j = 0; j < l; ++j) v += c[j] * phase[j];
    acc += std::abs(v);
    for (std::size_t j = 0; j < l; ++j) phase[j] *= step[j];
  }
  return static_cast<double>(acc / static_cast<long double>(N));
}

ContinuousL1Result refine(double max_abs_freq,
                          const std::function<double(std::int64_t)>& eval,
                          bool pow2_grid) {
  std::int64_t N = std::max<std::int64_t>(
      1024, 64 * (static_cast<std::int64_t>(max_abs_freq) + 1));
  if (pow2_grid) N = next_pow2_i64(N);
  ContinuousL1Result res;
  double prev = eval(N);
  res.value = prev;
  res.samples_used = N;
  res.convergence_gap = HUGE_VAL;
  while (2 * N <= kSampleCap) {
    N *= 2;
    double cur = eval(N);
    double gap = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
    res.value = cur;
    res.samples_used = N;
    res.convergence_gap = gap;
    if (gap < kRelTol) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  return res;
}

}  // namespace

ContinuousL1Result continuous_l1(std::span<const std::int64_t> frequencies,
                                 std::span<const std::complex<double>> coeffs) {
  if (frequencies.size() != coeffs.size())
    throw std::invalid_argument("continuous_l1: list lengths differ");
  if (frequencies.empty())
    throw std::invalid_argument("continuous_l1: empty polynomial");
  std::vector<std::int64_t> sorted(frequencies.begin(), frequencies.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("continuous_l1: frequencies must be distinct");
  double mx = 0;
  for (std::int64_t f : frequencies)
    mx = std::max(mx, static_cast<double>(std::abs(f)));
  std::vector<double> breal(frequencies.begin(), frequencies.end());
  auto eval = [&](std::int64_t N) {
    if (N <= kFftSampleCap) return midpoint_integer_fft(frequencies, coeffs, N);
    return midpoint_stream(breal, coeffs, N);
  };
  return refine(mx, eval, /*pow2_grid=*/true);
}

ContinuousL1Result continuous_l1_real(
    std::span<const double> frequencies,
    std::span<const std::complex<double>> coeffs) {
  if (frequencies.size() != coeffs.size())
    throw std::invalid_argument("continuous_l1: list lengths differ");
  if (frequencies.empty())
    throw std::invalid_argument("continuous_l1: empty polynomial");
  bool integral = true;
  for (double f : frequencies) {
    if (!std::isfinite(f))
      throw std::invalid_argument("continuous_l1: non-finite frequency");
    if (f != std::floor(f) || std::abs(f) > 9e15) integral = false;
  }
  if (integral) {
    std::vector<std::int64_t> bi(frequencies.size());
    for (std::size_t j = 0; j < frequencies.size(); ++j)
      bi[j] = static_cast<std::int64_t>(frequencies[j]);
    return continuous_l1(bi, coeffs);
  }
  std::vector<double> sorted(frequencies.begin(), frequencies.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("continuous_l1: frequencies must be distinct");
  double mx = 0;
  for (double f : frequencies) mx = std::max(mx, std::abs(f));
  auto eval = [&](std::int64_t N) {
    return midpoint_stream(frequencies, coeffs, N);
  };
  return refine(mx, eval, /*pow2_grid=*/false);
}

DiscContReport disc_cont_ratio(const TrigPoly& F) {
  const std::int64_t p = F.p();
  std::vector<std::int64_t> freqs;
  std::vector<std::complex<double>> coeffs;
  for (std::int64_t r = 0; r < p; ++r) {
    std::complex<double> cx = F.coeffs[static_cast<Eigen::Index>(r)];
    if (cx == std::complex<double>{0, 0}) continue;
    std::int64_t rep = min_abs_rep(r, F.ctx).value;
    if (3 * std::abs(rep) > p)
      throw std::invalid_argument(
          "disc_cont_ratio: coefficients must vanish outside |x| <= p/3");
    freqs.push_back(rep);
    coeffs.push_back(cx);
  }
  if (freqs.empty())
    throw std::invalid_argument("disc_cont_ratio: zero polynomial");
  DiscContReport rep;
  rep.discrete = wiener_norm_poly(F).value / static_cast<double>(p);
  rep.continuous = continuous_l1(freqs, coeffs);
  rep.ratio = rep.discrete / rep.continuous.value;
  return rep;
}

HardyReport hardy_ratio(std::span<const double> b,
                        std::span<const std::complex<double>> c) {
  if (b.empty() || b.size() != c.size())
    throw std::invalid_argument("hardy_ratio: need matching nonempty lists");
  for (std::size_t j = 1; j < b.size(); ++j)
    if (!(b[j - 1] < b[j]))
      throw std::invalid_argument("hardy_ratio: b must be strictly increasing");
  HardyReport rep;
  rep.integral = continuous_l1_real(b, c);
  double hs = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    hs += std::abs(c[j]) / static_cast<double>(j + 1);
  rep.harmonic_sum = hs;
  rep.ratio = rep.integral.value / hs;
  return rep;
}

ShellCheckReport shell_concentration_check(const ZpSet& B, std::int64_t n,
                                           double eta) {
  const std::int64_t p = B.modulus();
  if (n < 1 || 6 * n > p)
    throw std::invalid_argument("shell_concentration_check: need 1 <= n <= p/6");
  if (!(eta > 0.0 && eta < 0.5))
    throw std::invalid_argument("shell_concentration_check: need 0 < eta < 1/2");
  const std::int64_t inner = interval_members(B, n).size();
  const std::int64_t outer = interval_members(B, 2 * n).size();
  ShellCheckReport rep;
  rep.inner_count = inner;
  rep.outer_count = outer;
  rep.applicable = outer >= 2 && static_cast<double>(inner) >=
                                     (1.0 - eta) * static_cast<double>(outer);
  rep.bound = rep.applicable
                  ? std::min(std::log(1.0 / eta),
                             std::log(static_cast<double>(outer)))
                  : 0.0;
  rep.measured_norm = wiener_norm(B).value;
  return rep;
}

}  // namespace zpw
