#pragma once

#include <cmath>

#include "lichi/characters.hpp"
#include "lichi/core/complex.hpp"
#include "lichi/core/precision.hpp"
#include "lichi/specfun/gamma.hpp"
#include "lichi/specfun/zeta.hpp"

namespace lichi {

/// L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q), for non-principal chi.
template <class Real>
Complex<Real> l_value(const Complex<Real>& s, const DirichletCharacter& chi, const PrecisionConfig& prec) {
  if (chi.is_principal()) throw Error(ErrorCode::PrincipalCharacter, "L(s, chi) for principal chi has a pole");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  using std::log;
  const std::uint64_t q = chi.modulus();
  Complex<Real> acc(Real(0), Real(0));
  if (s.re == 1 && s.im == 0) {
    // poles of the Hurwitz terms cancel: L(1, chi) = -(1/q) sum chi(a) psi(a/q)
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (chi.exponent(a) == DirichletCharacter::kZero) continue;
      acc -= chi.value<Real>(a) * digamma<Real>(Real(a) / Real(q), prec);
    }
    return acc / Real(q);
  }
  for (std::uint64_t a = 1; a <= q; ++a) {
    if (chi.exponent(a) == DirichletCharacter::kZero) continue;
    acc += chi.value<Real>(a) * hurwitz_zeta<Real>(s, Real(a) / Real(q), prec);
  }
  return acc * exp(-s * log(Real(q)));
}

/// log of the archimedean factor (q/pi)^{(s+a)/2} Gamma((s+a)/2); requires Re(s + a) > 0.
template <class Real>
Complex<Real> log_gamma_factor(const Complex<Real>& s, int parity, std::uint64_t q, const PrecisionConfig& prec) {
  using std::log;
  const Complex<Real> h = (s + Complex<Real>(Real(parity), Real(0))) / Real(2);
  return h * log(Real(q) / pi<Real>()) + log_gamma<Real>(h, prec);
}

/// xi(s, chi) = (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi) for primitive non-principal chi.
template <class Real>
Complex<Real> xi_value(const Complex<Real>& s, const DirichletCharacter& chi, const PrecisionConfig& prec) {
  if (!chi.is_primitive()) throw Error(ErrorCode::NotPrimitive, "xi requires a primitive character");
  if (chi.is_principal()) throw Error(ErrorCode::PrincipalCharacter, "xi for principal chi is out of scope");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  return exp(log_gamma_factor<Real>(s, chi.parity(), chi.modulus(), prec)) * l_value<Real>(s, chi, prec);
}

/// Principal square root of the inverse root number, omega^{-1/2}.
template <class Real>
Complex<Real> inverse_sqrt_root_number(const DirichletCharacter& chi, const PrecisionConfig& prec) {
  const auto g = gauss_sum<Real>(chi, prec);
  return Complex<Real>(Real(1), Real(0)) / sqrt(g.root_number_omega);
}

/// theta(t) = (t/2) log(q/pi) + Im log Gamma((1/2 + a + i t)/2), continuous in t.
template <class Real>
Real hardy_theta(const Real& t, int parity, std::uint64_t q, const PrecisionConfig& prec) {
  const Complex<Real> s(Real(0.5), t);
  return log_gamma_factor<Real>(s, parity, q, prec).im;
}

namespace detail {

template <class Real>
void require_real_primitive(const DirichletCharacter& chi) {
  if (!chi.is_real() || chi.is_principal()) {
    throw Error(ErrorCode::ComplexCharacterUnsupported, "critical-line rotation requires a real non-principal character");
  }
  if (!chi.is_primitive()) throw Error(ErrorCode::NotPrimitive, "critical-line rotation requires a primitive character");
}

}  // namespace detail

/// Rotated critical-line value e^{i theta(t)} omega^{-1/2} L(1/2 + it, chi), with
/// its imaginary part returned as a residual. This is
/// omega^{-1/2} xi(1/2 + it, chi) divided by the positive factor
/// (q/pi)^{(1/2+a)/2} |Gamma((1/2 + a + it)/2)|, so it has the same sign and zeros
/// and stays O(1) at any height.
template <class Real>
Complex<Real> rotated_critical_value(const Real& t, const DirichletCharacter& chi, const PrecisionConfig& prec) {
  detail::require_real_primitive<Real>(chi);
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  const Complex<Real> s(Real(0.5), t);
  const Real theta = hardy_theta<Real>(t, chi.parity(), chi.modulus(), prec);
  return polar_unit<Real>(theta) * inverse_sqrt_root_number<Real>(chi, prec) * l_value<Real>(s, chi, prec);
}

/// Hardy Z-function of a real primitive character; real, with sign changes exactly
/// at critical-line zeros. Throws PrecisionUnreachable when the rotated value is
/// not real to 2^{-bits/2}.
template <class Real>
Real hardy_z(const Real& t, const DirichletCharacter& chi, const PrecisionConfig& prec) {
  const auto v = rotated_critical_value<Real>(t, chi, prec);
  const unsigned bits = effective_bits<Real>(prec);
  const Real tol = pow2<Real>(-static_cast<int>(bits / 2)) * std::max(Real(1), abs(v));
  if (abs_real(v.im) > tol) {
    throw Error(ErrorCode::PrecisionUnreachable, "rotated critical-line value is not real");
  }
  return v.re;
}

/// Smooth zero-counting main term (1/2 pi) T log T + c1 T,
/// c1 = (log q - log 2 pi - 1) / (2 pi).
/// q is accepted as a real so the constant can be probed away from integer moduli.
inline double n_formula(double T, double q) {
  if (T < 1) throw Error(ErrorCode::DomainError, "n_formula requires T >= 1");
  if (!(q > 0)) throw Error(ErrorCode::DomainError, "n_formula requires q > 0");
  const double two_pi = 2 * std::acos(-1.0);
  const double c1 = (std::log(q) - std::log(two_pi) - 1) / two_pi;
  return T * std::log(T) / two_pi + c1 * T;
}

inline double n_formula(double T, const DirichletCharacter& chi) {
  return n_formula(T, static_cast<double>(chi.modulus()));
}

}  // namespace lichi
