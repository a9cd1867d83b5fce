#include "zpw/spectral.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zpw/fft.hpp"
#include "zpw/parallel.hpp"

namespace zpw {

TrigPoly::TrigPoly(PrimeContext c, Eigen::VectorXcd co)
    : ctx(c), coeffs(std::move(co)) {
  if (coeffs.size() != ctx.p())
    throw std::invalid_argument("TrigPoly: need exactly p coefficients");
}

std::complex<double>& TrigPoly::at_signed(std::int64_t x) {
  return coeffs[static_cast<Eigen::Index>(ctx.reduce(x))];
}

std::complex<double> TrigPoly::at_signed(std::int64_t x) const {
  return coeffs[static_cast<Eigen::Index>(ctx.reduce(x))];
}

TrigPoly zero_poly(PrimeContext ctx) {
  return TrigPoly(ctx, Eigen::VectorXcd::Zero(ctx.p()));
}

Spectrum::Spectrum(PrimeContext c, Eigen::VectorXcd v, double err)
    : ctx(c), values(std::move(v)), err_bound(err) {
  if (values.size() != ctx.p())
    throw std::invalid_argument("Spectrum: need exactly p values");
  if (!(err_bound >= 0) || !std::isfinite(err_bound))
    throw std::invalid_argument("Spectrum: err_bound must be finite and >= 0");
}

namespace {

double check_finite_max_abs(const Eigen::VectorXcd& f) {
  double mx = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    double a = std::abs(f[i]);
    if (!std::isfinite(a))
      throw std::invalid_argument("transform input must be finite");
    mx = std::max(mx, a);
  }
  return mx;
}

// Per-value envelope for the normalized transform (1/p)*sum of p terms.
// The second term covers rounding into double storage when the summation
// itself ran in wider precision.
double per_value_err(const PrimeContext& ctx, double max_abs) {
  const double u = ctx.unit_roundoff();
  const double u_store = DBL_EPSILON / 2;
  return (8.0 * static_cast<double>(ctx.p()) * u + u_store) * max_abs;
}

template <typename Real>
std::vector<std::complex<Real>> to_real_vec(const Eigen::VectorXcd& f) {
  std::vector<std::complex<Real>> v(static_cast<std::size_t>(f.size()));
  for (Eigen::Index i = 0; i < f.size(); ++i)
    v[static_cast<std::size_t>(i)] =
        std::complex<Real>(static_cast<Real>(f[i].real()),
                           static_cast<Real>(f[i].imag()));
  return v;
}

// Unnormalized forward values S[g] = sum_x f(x) e(+x*g/p) via the shared
// kernel: with dft's e(-jk/n) convention this is dft(f) read at index p-g.
template <typename Real>
Eigen::VectorXcd forward_sum_fast(std::int64_t p, const Eigen::VectorXcd& f) {
  auto v = to_real_vec<Real>(f);
  auto d = dft(v);
  Eigen::VectorXcd out(p);
  for (std::int64_t g = 0; g < p; ++g) {
    const auto& z = d[static_cast<std::size_t>((p - g) % p)];
    out[static_cast<Eigen::Index>(g)] = {static_cast<double>(z.real()),
                                         static_cast<double>(z.imag())};
  }
  return out;
}

// O(p^2) with an exact x*g mod p phase table; summation order is x ascending
// for every g, so results do not depend on the thread schedule.
template <typename Real>
Eigen::VectorXcd forward_sum_direct(std::int64_t p, const Eigen::VectorXcd& f) {
  const Real two_pi = static_cast<Real>(2) * std::numbers::pi_v<Real>;
  std::vector<std::complex<Real>> root(static_cast<std::size_t>(p));
  for (std::int64_t t = 0; t < p; ++t) {
    Real ang = two_pi * static_cast<Real>(t) / static_cast<Real>(p);
    root[static_cast<std::size_t>(t)] = {std::cos(ang), std::sin(ang)};
  }
  auto v = to_real_vec<Real>(f);
  Eigen::VectorXcd out(p);
  parallel_for(static_cast<std::size_t>(p), [&](std::size_t b, std::size_t e) {
    for (std::size_t g = b; g < e; ++g) {
      std::complex<Real> acc{0, 0};
      for (std::int64_t x = 0; x < p; ++x)
        acc += v[static_cast<std::size_t>(x)] *
               root[static_cast<std::size_t>(
                   (x * static_cast<std::int64_t>(g)) % p)];
      out[static_cast<Eigen::Index>(g)] = {static_cast<double>(acc.real()),
                                           static_cast<double>(acc.imag())};
    }
  });
  return out;
}

Eigen::VectorXcd forward_sum(const PrimeContext& ctx, const Eigen::VectorXcd& f,
                             bool fast) {
  const std::int64_t p = ctx.p();
  if (ctx.precision() == PrecisionPolicy::extended)
    return fast ? forward_sum_fast<long double>(p, f)
                : forward_sum_direct<long double>(p, f);
  return fast ? forward_sum_fast<double>(p, f) : forward_sum_direct<double>(p, f);
}

}  // namespace

Spectrum fourier_transform(const PrimeContext& ctx, const Eigen::VectorXcd& f) {
  if (f.size() != ctx.p())
    throw std::invalid_argument("fourier_transform: need exactly p values");
  const double mx = check_finite_max_abs(f);
  Eigen::VectorXcd vals = forward_sum(ctx, f, /*fast=*/ctx.p() > 128);
  vals /= static_cast<double>(ctx.p());
  return Spectrum(ctx, std::move(vals), per_value_err(ctx, mx));
}

Spectrum fourier_transform_direct(const PrimeContext& ctx,
                                  const Eigen::VectorXcd& f) {
  if (f.size() != ctx.p())
    throw std::invalid_argument("fourier_transform: need exactly p values");
  const double mx = check_finite_max_abs(f);
  Eigen::VectorXcd vals = forward_sum(ctx, f, /*fast=*/false);
  vals /= static_cast<double>(ctx.p());
  return Spectrum(ctx, std::move(vals), per_value_err(ctx, mx));
}

Eigen::VectorXcd inverse_transform(const Spectrum& F) {
  check_finite_max_abs(F.values);
  const std::int64_t p = F.p();
  // f(x) = sum_g hat_f(g) e(-x*g/p), exactly dft's sign convention.
  if (F.ctx.precision() == PrecisionPolicy::extended) {
    auto v = to_real_vec<long double>(F.values);
    auto d = dft(v);
    Eigen::VectorXcd out(p);
    for (std::int64_t x = 0; x < p; ++x) {
      const auto& z = d[static_cast<std::size_t>(x)];
      out[static_cast<Eigen::Index>(x)] = {static_cast<double>(z.real()),
                                           static_cast<double>(z.imag())};
    }
    return out;
  }
  auto v = to_real_vec<double>(F.values);
  auto d = dft(v);
  Eigen::VectorXcd out(p);
  for (std::int64_t x = 0; x < p; ++x)
    out[static_cast<Eigen::Index>(x)] = d[static_cast<std::size_t>(x)];
  return out;
}

Eigen::VectorXcd indicator(const ZpSet& A) {
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(A.modulus());
  for (std::int64_t r = 0; r < A.modulus(); ++r)
    if (A.mask()[static_cast<std::size_t>(r)])
      f[static_cast<Eigen::Index>(r)] = 1.0;
  return f;
}

Spectrum indicator_spectrum(const ZpSet& A) {
  return fourier_transform(A.context(), indicator(A));
}

NormResult wiener_norm(const ZpSet& A) {
  if (A.empty()) return {0.0, 0.0};
  Spectrum S = indicator_spectrum(A);
  double sum = 0;
  for (Eigen::Index i = 0; i < S.values.size(); ++i) sum += std::abs(S.values[i]);
  return {sum, static_cast<double>(S.p()) * S.err_bound};
}

Spectrum evaluate(const TrigPoly& F) {
  const double mx = check_finite_max_abs(F.coeffs);
  Eigen::VectorXcd vals = forward_sum(F.ctx, F.coeffs, /*fast=*/F.p() > 128);
  const double err =
      static_cast<double>(F.p()) * per_value_err(F.ctx, mx);
  return Spectrum(F.ctx, std::move(vals), err);
}

NormResult wiener_norm_poly(const TrigPoly& F) {
  Spectrum S = evaluate(F);
  double sum = 0;
  for (Eigen::Index i = 0; i < S.values.size(); ++i) sum += std::abs(S.values[i]);
  return {sum, static_cast<double>(S.p()) * S.err_bound};
}

}  // namespace zpw
