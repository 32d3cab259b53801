#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lichi/characters.hpp"
#include "lichi/core/complex.hpp"
#include "lichi/core/precision.hpp"
#include "lichi/specfun/bernoulli.hpp"

namespace lichi {

namespace detail {

using cld = Complex<long double>;

// B_2r / (2r (2r - 1)), r = 1..kStirlingTerms
inline constexpr int kStirlingTerms = 24;
inline const std::array<long double, kStirlingTerms>& stirling_coefficients() {
  static const auto table = [] {
    std::array<long double, kStirlingTerms> t{};
    for (int r = 1; r <= kStirlingTerms; ++r) {
      t[r - 1] = rational_to_real<long double>(bernoulli(2 * r) / big_rational((2 * r) * (2 * r - 1)));
    }
    return t;
  }();
  return table;
}

// B_2r / (2r)!, r = 1..kEulerMaclaurinTerms
inline constexpr int kEulerMaclaurinTerms = 40;
inline const std::array<long double, kEulerMaclaurinTerms>& em_coefficients() {
  static const auto table = [] {
    std::array<long double, kEulerMaclaurinTerms> t{};
    for (int r = 1; r <= kEulerMaclaurinTerms; ++r) t[r - 1] = bernoulli_over_factorial<long double>(2 * r);
    return t;
  }();
  return table;
}

inline cld log_gamma_ld(cld z) {
  cld shift(0.0L, 0.0L);
  while (abs(z) < 24.0L) {
    shift += log(z);
    z.re += 1.0L;
  }
  cld result = (z - cld(0.5L, 0.0L)) * log(z) - z + cld(0.5L * std::log(2.0L * 3.14159265358979323846264338327950288L), 0.0L);
  const cld inv = cld(1.0L, 0.0L) / z;
  const cld inv2 = inv * inv;
  cld zp = inv;
  for (long double c : stirling_coefficients()) {
    const cld term = zp * c;
    result += term;
    if (abs(term) < 1e-22L * (1.0L + abs(result))) break;
    zp *= inv2;
  }
  return result - shift;
}

}  // namespace detail

/// Extended-precision (long double) evaluator of L(s, chi) for a fixed real
/// primitive character, tuned for repeated evaluation up to height t_max:
/// tables of log n and chi(n) n^{-1/2}, a direct sum over n < qK with K ~ t/3,
/// and an Euler-Maclaurin tail per residue class.
class CriticalLineEvaluator {
 public:
  CriticalLineEvaluator(const DirichletCharacter& chi, double t_max)
      : q_(chi.modulus()), parity_(chi.parity()), t_max_(t_max) {
    if (!chi.is_real() || chi.is_principal()) {
      throw Error(ErrorCode::ComplexCharacterUnsupported, "critical-line evaluator requires a real non-principal character");
    }
    if (!chi.is_primitive()) throw Error(ErrorCode::NotPrimitive, "critical-line evaluator requires a primitive character");
    if (!(t_max >= 0)) throw Error(ErrorCode::DomainError, "critical-line evaluator: t_max must be >= 0");
    log_q_ = std::log(static_cast<long double>(q_));
    log_q_over_pi_ = log_q_ - std::log(3.14159265358979323846264338327950288L);
    for (std::uint64_t r = 1; r < q_; ++r) {
      const int v = chi.real_value(r);
      if (v != 0) {
        residues_.push_back(r);
        residue_sign_.push_back(static_cast<signed char>(v));
      }
    }
    const std::uint64_t k_max = cutoff(static_cast<long double>(t_max));
    const std::size_t count = static_cast<std::size_t>(k_max) * residues_.size();
    logn_.reserve(count);
    weight_.reserve(count);
    for (std::uint64_t k = 0; k < k_max; ++k) {
      for (std::size_t i = 0; i < residues_.size(); ++i) {
        const long double n = static_cast<long double>(k * q_ + residues_[i]);
        const long double l = std::log(n);
        logn_.push_back(l);
        weight_.push_back(residue_sign_[i] / std::sqrt(n));
      }
    }
  }

  std::uint64_t modulus() const { return q_; }
  int parity() const { return parity_; }
  double t_max() const { return t_max_; }

  /// theta(t) = (t/2) log(q/pi) + Im log Gamma((1/2 + a + it)/2).
  long double theta(long double t) const {
    const detail::cld h((0.5L + parity_) / 2.0L, t / 2.0L);
    return t / 2.0L * log_q_over_pi_ + detail::log_gamma_ld(h).im;
  }

  /// L(sigma + it, chi) for 0 < sigma <= 3 and |t| <= t_max.
  detail::cld l_value(long double sigma, long double t) const {
    const std::uint64_t k = cutoff(t < 0 ? -t : t);
    const std::size_t m = static_cast<std::size_t>(k) * residues_.size();
    if (m > logn_.size()) throw Error(ErrorCode::DomainError, "critical-line evaluator: |t| exceeds t_max");
    long double re = 0, im = 0;
    if (sigma == 0.5L) {
      for (std::size_t i = 0; i < m; ++i) {
        const long double ph = t * logn_[i];
        re += weight_[i] * std::cos(ph);
        im -= weight_[i] * std::sin(ph);
      }
    } else {
      const long double shift = 0.5L - sigma;  // n^{-sigma} = n^{-1/2} e^{(1/2 - sigma) log n}
      for (std::size_t i = 0; i < m; ++i) {
        const long double ph = t * logn_[i];
        const long double w = weight_[i] * std::exp(shift * logn_[i]);
        re += w * std::cos(ph);
        im -= w * std::sin(ph);
      }
    }
    detail::cld sum(re, im);
    const detail::cld s(sigma, t);
    const detail::cld q_pow = exp(-s * log_q_);
    for (std::size_t i = 0; i < residues_.size(); ++i) {
      const long double x = static_cast<long double>(k) + static_cast<long double>(residues_[i]) / q_;
      sum += q_pow * hurwitz_tail(s, x) * static_cast<long double>(residue_sign_[i]);
    }
    return sum;
  }

  /// e^{i theta(t)} L(1/2 + it, chi); real up to rounding (omega = 1 for real primitive chi).
  detail::cld rotated(long double t) const {
    const long double th = theta(t);
    return detail::cld(std::cos(th), std::sin(th)) * l_value(0.5L, t);
  }

  long double z(long double t) const { return rotated(t).re; }

 private:
  std::uint64_t cutoff(long double t) const {
    const long double k = std::ceil(t / 3.0L);
    return k < 20 ? 20 : static_cast<std::uint64_t>(k) + 1;
  }

  // zeta(s, x) for x >= max(20, |t|/3), by Euler-Maclaurin with no direct terms
  static detail::cld hurwitz_tail(const detail::cld& s, long double x) {
    using detail::cld;
    const long double lx = std::log(x);
    const cld x_ms = exp(-s * lx);
    cld out = x_ms * x / (s - cld(1.0L, 0.0L)) + x_ms * 0.5L;
    cld poch = s;
    cld xp = x_ms / x;
    const long double inv_x2 = 1.0L / (x * x);
    const auto& coeff = detail::em_coefficients();
    for (int r = 0; r < detail::kEulerMaclaurinTerms; ++r) {
      const cld term = poch * xp * coeff[r];
      out += term;
      if (abs(term) < 1e-21L) break;
      const long double a = 2 * r + 1;
      poch *= (s + cld(a, 0.0L)) * (s + cld(a + 1.0L, 0.0L));
      xp *= inv_x2;
    }
    return out;
  }

  std::uint64_t q_;
  int parity_;
  double t_max_;
  long double log_q_ = 0;
  long double log_q_over_pi_ = 0;
  std::vector<std::uint64_t> residues_;
  std::vector<signed char> residue_sign_;
  std::vector<long double> logn_;
  std::vector<long double> weight_;
};

}  // namespace lichi
