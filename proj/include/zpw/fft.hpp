#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zpw {

// Forward DFT convention used throughout: X[k] = sum_j x[j] e(-jk/n),
// e(t) = exp(2*pi*i*t). No normalization factor; callers scale.

template <typename Real>
std::vector<std::complex<Real>> dft_direct(
    const std::vector<std::complex<Real>>& x, int sign = -1) {
  const std::size_t n = x.size();
  const Real two_pi = static_cast<Real>(2) * std::numbers::pi_v<Real>;
  std::vector<std::complex<Real>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<Real> acc{0, 0};
    for (std::size_t j = 0; j < n; ++j) {
      // exact j*k mod n keeps the phase argument small
      std::uint64_t t = (static_cast<std::uint64_t>(j) * k) % n;
      Real ang = static_cast<Real>(sign) * two_pi * static_cast<Real>(t) /
                 static_cast<Real>(n);
      acc += x[j] * std::complex<Real>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

namespace detail {

inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// In-place iterative radix-2 transform, x.size() must be a power of two.
template <typename Real>
void fft_pow2(std::vector<std::complex<Real>>& x, int sign) {
  const std::size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_pow2: size must be a power of two");
  // bit reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  const Real two_pi = static_cast<Real>(2) * std::numbers::pi_v<Real>;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    Real ang = static_cast<Real>(sign) * two_pi / static_cast<Real>(len);
    std::complex<Real> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<Real> w{1, 0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<Real> u = x[i + j];
        std::complex<Real> v = x[i + j + len / 2] * w;
        x[i + j] = u + v;
        x[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Precomputed chirp data for a Bluestein transform of size n.
template <typename Real>
struct BluesteinPlan {
  std::size_t n = 0;
  std::size_t m = 0;  // pow2 >= 2n-1
  std::vector<std::complex<Real>> chirp;      // e(-j^2/(2n)), j < n
  std::vector<std::complex<Real>> kernel_ft;  // fft of conj-chirp filter
  explicit BluesteinPlan(std::size_t n_) : n(n_) {
    m = next_pow2(2 * n - 1);
    chirp.resize(n);
    const Real pi = std::numbers::pi_v<Real>;
    const auto n64 = static_cast<std::uint64_t>(n);
    for (std::size_t j = 0; j < n; ++j) {
      // j^2 mod 2n evaluated exactly in integers so the phase stays accurate
      std::uint64_t j64 = static_cast<std::uint64_t>(j) % (2 * n64);
      std::uint64_t sq = (j64 * j64) % (2 * n64);
      Real ang = -pi * static_cast<Real>(sq) / static_cast<Real>(n);
      chirp[j] = std::complex<Real>(std::cos(ang), std::sin(ang));
    }
    std::vector<std::complex<Real>> b(m, std::complex<Real>{0, 0});
    b[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < n; ++j) {
      b[j] = std::conj(chirp[j]);
      b[m - j] = std::conj(chirp[j]);
    }
    fft_pow2(b, -1);
    kernel_ft = std::move(b);
  }
};

template <typename Real>
const BluesteinPlan<Real>& bluestein_plan(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<BluesteinPlan<Real>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<BluesteinPlan<Real>>(n)).first;
  return *it->second;
}

// Arbitrary-size forward transform via the chirp-z factorization
// jk = (j^2 + k^2 - (j-k)^2) / 2.
template <typename Real>
std::vector<std::complex<Real>> bluestein(
    const std::vector<std::complex<Real>>& x) {
  const std::size_t n = x.size();
  const auto& plan = bluestein_plan<Real>(n);
  std::vector<std::complex<Real>> a(plan.m, std::complex<Real>{0, 0});
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * plan.chirp[j];
  fft_pow2(a, -1);
  for (std::size_t j = 0; j < plan.m; ++j) a[j] *= plan.kernel_ft[j];
  fft_pow2(a, +1);
  const Real scale = static_cast<Real>(1) / static_cast<Real>(plan.m);
  std::vector<std::complex<Real>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * plan.chirp[k];
  return out;
}

}  // namespace detail

// Forward transform X[k] = sum_j x[j] e(-jk/n) for any n >= 1.
template <typename Real>
std::vector<std::complex<Real>> dft(const std::vector<std::complex<Real>>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if (n <= 64) return dft_direct(x, -1);
  if ((n & (n - 1)) == 0) {
    auto y = x;
    detail::fft_pow2(y, -1);
    return y;
  }
  return detail::bluestein(x);
}

// Inverse of dft(): x[j] = (1/n) sum_k X[k] e(+jk/n).
template <typename Real>
std::vector<std::complex<Real>> idft(const std::vector<std::complex<Real>>& X) {
  const std::size_t n = X.size();
  if (n == 0) return {};
  std::vector<std::complex<Real>> conj_in(n);
  for (std::size_t j = 0; j < n; ++j) conj_in[j] = std::conj(X[j]);
  auto y = dft(conj_in);
  const Real scale = static_cast<Real>(1) / static_cast<Real>(n);
  for (auto& v : y) v = std::conj(v) * scale;
  return y;
}

}  // namespace zpw
