#pragma once

#include <cmath>

#include "lichi/core/complex.hpp"
#include "lichi/core/precision.hpp"
#include "lichi/specfun/bernoulli.hpp"

namespace lichi {

/// Principal branch of log Gamma(z) for Re z > 0 (continuous in the right half
/// plane, real on the positive axis). Stirling series with Bernoulli tail after
/// an upward shift of z.
template <class Real>
Complex<Real> log_gamma(Complex<Real> z, const PrecisionConfig& prec) {
  using std::ceil;
  using std::log;
  if (!(z.re > 0)) throw Error(ErrorCode::DomainError, "log_gamma: requires Re z > 0");
  const unsigned bits = effective_bits<Real>(prec);
  const Real eps = pow2<Real>(-static_cast<int>(bits) - 4);
  // |z| >= ~ bits/4 keeps the asymptotic series terms decreasing past 2^-bits.
  const Real threshold = Real(bits) * Real(0.25) + Real(8);

  Complex<Real> shift_log(Real(0), Real(0));
  while (abs(z) < threshold) {
    shift_log += log(z);
    z.re += 1;
  }
  const Complex<Real> half(Real(0.5), Real(0));
  Complex<Real> result = (z - half) * log(z) - z + Complex<Real>(log(2 * pi<Real>()) / 2, Real(0));
  const Complex<Real> inv = Complex<Real>(Real(1), Real(0)) / z;
  const Complex<Real> inv2 = inv * inv;
  Complex<Real> zpow = inv;  // z^{-(2r-1)}
  for (unsigned r = 1; r < 4 * bits; ++r) {
    const Real coeff = rational_to_real<Real>(bernoulli(2 * r) / big_rational((2 * r) * (2 * r - 1)));
    const Complex<Real> term = zpow * coeff;
    result += term;
    if (abs(term) < eps * (1 + abs(result))) break;
    zpow *= inv2;
  }
  return result - shift_log;
}

/// Digamma psi(x) for real x > 0: recurrence up to x >= bits/4 + 8, then the
/// asymptotic series log x - 1/(2x) - sum B_2r / (2r x^{2r}).
template <class Real>
Real digamma(Real x, const PrecisionConfig& prec) {
  using std::log;
  if (!(x > 0)) throw Error(ErrorCode::DomainError, "digamma: requires x > 0");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  const unsigned bits = effective_bits<Real>(prec);
  const Real eps = pow2<Real>(-static_cast<int>(bits) - 4);
  const Real threshold = Real(bits) * Real(0.25) + Real(8);
  Real shift = 0;
  while (x < threshold) {
    shift += 1 / x;
    x += 1;
  }
  Real result = log(x) - 1 / (2 * x);
  const Real inv2 = 1 / (x * x);
  Real xp = inv2;
  for (unsigned r = 1; r < 4 * bits; ++r) {
    const Real term = rational_to_real<Real>(bernoulli(2 * r) / big_rational(2 * r)) * xp;
    result -= term;
    if (abs_real(term) < eps) break;
    xp *= inv2;
  }
  return result - shift;
}

}  // namespace lichi
