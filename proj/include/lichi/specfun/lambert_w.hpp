#pragma once

#include <cmath>

#include "lichi/core/error.hpp"
#include "lichi/core/precision.hpp"

namespace lichi {

/// Lower real branch W_{-1}(x) <= -1 of the inverse of w e^w, for x in [-1/e, 0).
/// Halley iteration seeded with log(-x) - log(-log(-x)), or with the branch-point
/// series -1 - p - p^2/3 (p = sqrt(2(1 + e x))) close to -1/e.
template <class Real>
Real lambert_w_m1(const Real& x, const PrecisionConfig& prec) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::sqrt;
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  if (!(x < 0)) throw Error(ErrorCode::OutOfDomain, "lambert_w_m1: x must be negative");
  const Real e = exp(Real(1));
  const Real dist = 1 + e * x;  // 0 at the branch point
  const unsigned bits = effective_bits<Real>(prec);
  const Real tiny = pow2<Real>(-static_cast<int>(bits) + 4);
  if (dist < -tiny) throw Error(ErrorCode::OutOfDomain, "lambert_w_m1: x < -1/e");
  if (dist <= tiny) return Real(-1);

  Real w;
  if (dist < Real(0.3)) {
    const Real p = sqrt(2 * dist);
    w = -1 - p - p * p / 3 - Real(11) / 72 * p * p * p;
  } else {
    const Real l1 = log(-x);
    w = l1 - log(-l1);
  }
  const Real eps = pow2<Real>(-static_cast<int>(bits) + 2);
  for (int iter = 0; iter < 200; ++iter) {
    const Real ew = exp(w);
    const Real f = w * ew - x;
    const Real wp1 = w + 1;
    if (wp1 == 0) break;
    const Real fp = ew * wp1;
    const Real step = f / (fp - (w + 2) * f / (2 * wp1));
    Real next = w - step;
    if (next > -1) next = (w - 1) / 2;  // stay on the lower branch
    const Real change = abs(next - w);
    w = next;
    if (change <= eps * abs(w)) break;
  }
  return w;
}

}  // namespace lichi
