#pragma once

#include <Eigen/Dense>
#include <complex>

#include "zpw/context.hpp"
#include "zpw/zp_set.hpp"

namespace zpw {

// Coefficient-side view: F(g) = sum_x c_x e(x*g/p). Coefficient for the
// signed representative x lives at index x mod p.
struct TrigPoly {
  PrimeContext ctx;
  Eigen::VectorXcd coeffs;

  TrigPoly(PrimeContext c, Eigen::VectorXcd co);
  std::int64_t p() const { return ctx.p(); }
  std::complex<double>& at_signed(std::int64_t x);
  std::complex<double> at_signed(std::int64_t x) const;
};

TrigPoly zero_poly(PrimeContext ctx);

// Value-side view: hat_f(g) for each residue g, with a uniform absolute
// error bound per value.
struct Spectrum {
  PrimeContext ctx;
  Eigen::VectorXcd values;
  double err_bound;

  Spectrum(PrimeContext c, Eigen::VectorXcd v, double err);
  std::int64_t p() const { return ctx.p(); }
};

struct NormResult {
  double value;
  double err_bound;
};

// hat_f(g) = (1/p) sum_x f(x) e(x*g/p). Fast path; agrees with the direct
// reference within 1e-10 per value for p <= 4096 (tested).
Spectrum fourier_transform(const PrimeContext& ctx, const Eigen::VectorXcd& f);

// O(p^2) reference transform with a fixed per-value summation order.
Spectrum fourier_transform_direct(const PrimeContext& ctx,
                                  const Eigen::VectorXcd& f);

// f(x) = sum_g hat_f(g) e(-x*g/p).
Eigen::VectorXcd inverse_transform(const Spectrum& F);

Eigen::VectorXcd indicator(const ZpSet& A);
Spectrum indicator_spectrum(const ZpSet& A);

// sum_g |hat_chi_A(g)|, error bound = p * per-value bound.
NormResult wiener_norm(const ZpSet& A);

// Value side of a coefficient polynomial: values[g] = sum_x c_x e(x*g/p)
// (no 1/p factor), err_bound = p * transform per-value bound.
Spectrum evaluate(const TrigPoly& F);

// sum_g |F(g)| over the value side.
NormResult wiener_norm_poly(const TrigPoly& F);

}  // namespace zpw
