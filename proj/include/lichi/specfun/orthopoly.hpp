#pragma once

#include <cmath>
#include <vector>

#include "lichi/core/error.hpp"
#include "lichi/core/precision.hpp"

namespace lichi {

/// T_n(x) = cos(n arccos x). Evaluated trigonometrically: for x close to 1 and
/// large n the three-term recurrence loses relative accuracy.
template <class Real>
Real chebyshev_T(unsigned n, const Real& x, const PrecisionConfig& prec) {
  using std::acos;
  using std::cos;
  if (x < -1 || x > 1) throw Error(ErrorCode::DomainError, "chebyshev_T: |x| must be <= 1");
  if (n == 0) return Real(1);
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits + 20);
  const Real theta = acos(x);
  return cos(Real(n) * theta);
}

/// U_n(cos t) = sin((n+1)t) / sin t, with the limits n+1 at t = 0 and (-1)^n (n+1) at t = pi.
template <class Real>
Real chebyshev_U(unsigned n, const Real& x, const PrecisionConfig& prec) {
  using std::acos;
  using std::sin;
  if (x < -1 || x > 1) throw Error(ErrorCode::DomainError, "chebyshev_U: |x| must be <= 1");
  if (n == 0) return Real(1);
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits + 20);
  if (x == 1) return Real(n + 1);
  if (x == -1) return (n % 2 == 0) ? Real(n + 1) : Real(-static_cast<long>(n + 1));
  const Real theta = acos(x);
  return sin(Real(n + 1) * theta) / sin(theta);
}

/// L^1_0(x) .. L^1_m(x) by (k+1) L_{k+1} = (2k + 2 - x) L_k - (k+1) L_{k-1}.
template <class Real>
std::vector<Real> laguerre_L1_all(unsigned m, const Real& x) {
  std::vector<Real> out;
  out.reserve(m + 1);
  out.push_back(Real(1));
  if (m == 0) return out;
  out.push_back(Real(2) - x);
  for (unsigned k = 1; k < m; ++k) {
    out.push_back(((Real(2 * k + 2) - x) * out[k] - Real(k + 1) * out[k - 1]) / Real(k + 1));
  }
  return out;
}

/// Associated Laguerre polynomial L^1_m(x), x >= 0.
template <class Real>
Real laguerre_L1(unsigned m, const Real& x, const PrecisionConfig& prec) {
  if (x < 0) throw Error(ErrorCode::DomainError, "laguerre_L1: x must be >= 0");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  return laguerre_L1_all<Real>(m, x).back();
}

}  // namespace lichi
