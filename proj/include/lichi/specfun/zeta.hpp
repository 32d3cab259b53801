#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "lichi/core/complex.hpp"
#include "lichi/core/precision.hpp"
#include "lichi/specfun/bernoulli.hpp"

namespace lichi {

struct HurwitzOptions {
  unsigned guard_bits = 10;
  std::uint64_t max_terms = 20'000'000;  // ceiling on the direct-sum length N
};

namespace detail {

// Euler-Maclaurin tail of zeta(s, x) = sum_{k>=0} (k + x)^{-s} for large x:
// x^{1-s}/(s-1) + x^{-s}/2 + sum_r B_2r/(2r)! (s)_{2r-1} x^{-s-2r+1}.
// Returns false when the Bernoulli terms stop decreasing before reaching eps.
template <class Real>
bool euler_maclaurin_tail(const Complex<Real>& s, const Real& x, const Real& eps, unsigned max_r,
                          Complex<Real>& out) {
  using std::log;
  const Complex<Real> one(Real(1), Real(0));
  const Complex<Real> x_pow_ms = exp(-s * log(x));  // x^{-s}
  out = x_pow_ms * x / (s - one) + x_pow_ms / Real(2);
  Complex<Real> poch = s;                  // (s)_{2r-1}
  Complex<Real> xp = x_pow_ms / x;         // x^{-s-2r+1}
  const Real inv_x2 = Real(1) / (x * x);
  Real prev = -1;
  for (unsigned r = 1; r <= max_r; ++r) {
    const Complex<Real> term = poch * xp * bernoulli_over_factorial<Real>(2 * r);
    const Real mag = abs(term);
    out += term;
    if (mag <= eps) return true;
    if (prev >= 0 && mag > prev) return false;
    prev = mag;
    poch *= (s + Complex<Real>(Real(2 * r - 1), Real(0))) * (s + Complex<Real>(Real(2 * r), Real(0)));
    xp *= inv_x2;
  }
  return false;
}

}  // namespace detail

/// Hurwitz zeta(s, a) for a in (0, 1], s != 1, by Euler-Maclaurin summation.
template <class Real>
Complex<Real> hurwitz_zeta(const Complex<Real>& s, const Real& a, const PrecisionConfig& prec,
                           const HurwitzOptions& opts = {}) {
  using std::ceil;
  using std::log;
  if (s.re == 1 && s.im == 0) throw Error(ErrorCode::PoleAtOne, "hurwitz_zeta at s = 1");
  if (!(a > 0) || a > 1) throw Error(ErrorCode::DomainError, "hurwitz_zeta: a must lie in (0, 1]");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);

  const unsigned bits = effective_bits<Real>(prec);
  const int guard_bits = static_cast<int>(std::min(opts.guard_bits, bits / 2));
  const Real eps = pow2<Real>(-static_cast<int>(bits) + guard_bits);
  const Real abs_im = s.im < 0 ? Real(-s.im) : s.im;
  const Real abs_s = abs(s);
  std::uint64_t n = std::max<std::uint64_t>(20, static_cast<std::uint64_t>(to_ld(ceil(abs_im / 3))));
  // keep x = N + a comfortably above |s| / (2 pi) for large |Re s| as well
  n = std::max<std::uint64_t>(n, static_cast<std::uint64_t>(to_ld(abs_s / 4)) + 1);

  while (n <= opts.max_terms) {
    Complex<Real> sum(Real(0), Real(0));
    for (std::uint64_t k = 0; k < n; ++k) sum += exp(-s * log(Real(k) + a));
    Complex<Real> tail;
    const Real scale = std::max(Real(1), abs(sum));
    if (detail::euler_maclaurin_tail(s, Real(n) + a, eps * scale, 4 * bits, tail)) return sum + tail;
    n *= 2;
  }
  throw Error(ErrorCode::PrecisionUnreachable, "hurwitz_zeta: Euler-Maclaurin length exceeds ceiling");
}

/// zeta(j) for integer j >= 2: even closed form, odd via hurwitz_zeta(j, 1).
template <class Real>
Real zeta_int(unsigned j, const PrecisionConfig& prec) {
  if (j < 2) throw Error(ErrorCode::DomainError, "zeta_int: j must be >= 2");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  using std::pow;
  if (j % 2 == 0) {
    // pi^{2m} |B_{2m}| 2^{2m-1} / (2m)!
    const Real bf = bernoulli_over_factorial<Real>(j);
    const Real mag = bf < 0 ? Real(-bf) : bf;
    return pow(pi<Real>(), Real(j)) * mag * pow2<Real>(static_cast<int>(j) - 1);
  }
  return hurwitz_zeta<Real>(Complex<Real>(Real(j), Real(0)), Real(1), prec).re;
}

/// psi^{(j-1)}(1) or psi^{(j-1)}(1/2).
/// j = 1: -gamma, or -gamma - 2 log 2.
/// j >= 2: (-1)^j (j-1)! zeta(j), times (2^j - 1) at 1/2.
template <class Real>
Real polygamma_closed(unsigned j, bool at_half, const PrecisionConfig& prec) {
  if (j < 1) throw Error(ErrorCode::DomainError, "polygamma_closed: j must be >= 1");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  if (j == 1) {
    Real v = -euler_gamma<Real>();
    if (at_half) v -= 2 * ln_two<Real>();
    return v;
  }
  Real fact = 1;
  for (unsigned i = 2; i < j; ++i) fact *= Real(i);
  Real v = fact * zeta_int<Real>(j, prec);
  if (j % 2 == 1) v = -v;
  if (at_half) v *= pow2<Real>(static_cast<int>(j)) - 1;
  return v;
}

}  // namespace lichi
