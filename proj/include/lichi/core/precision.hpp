#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <type_traits>

#include "lichi/core/error.hpp"

namespace lichi {

/// Runtime-precision binary float (MPFR). Precision of new values follows the
/// calling thread's default, see ScopedPrecision.
using mp_real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_mp_real_v = std::is_same_v<T, mp_real>;

struct PrecisionConfig {
  unsigned working_bits = 96;
  double target_abs_error = 1e-20;

  static PrecisionConfig make(unsigned bits, double target_abs_error = 1e-20) {
    if (bits < 64) throw Error(ErrorCode::DomainError, "working_bits must be >= 64");
    if (!(target_abs_error > 0)) throw Error(ErrorCode::DomainError, "target_abs_error must be > 0");
    return PrecisionConfig{bits, target_abs_error};
  }

  [[nodiscard]] PrecisionConfig with_bits(unsigned bits) const { return make(bits, target_abs_error); }
};

/// Precision default for the process, honouring LI_PREC_BITS when set.
inline PrecisionConfig default_precision() {
  if (const char* env = std::getenv("LI_PREC_BITS")) {
    char* end = nullptr;
    const unsigned long bits = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return PrecisionConfig::make(static_cast<unsigned>(bits));
    throw Error(ErrorCode::ConfigError, std::string("LI_PREC_BITS is not an integer: ") + env);
  }
  return PrecisionConfig{};
}

inline unsigned digits10_for_bits(unsigned bits) {
  // ceil(bits * log10(2)) plus one digit so the backend rounds up to >= bits
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

/// Sets the mp_real default precision of the current thread for its lifetime.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits) : saved_(mp_real::default_precision()) {
    mp_real::default_precision(digits10_for_bits(bits));
  }
  ~ScopedPrecision() { mp_real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

/// Binary digits actually carried by Real under `prec`.
template <class Real>
unsigned effective_bits(const PrecisionConfig& prec) {
  if constexpr (is_mp_real_v<Real>) {
    return prec.working_bits;
  } else {
    return static_cast<unsigned>(std::numeric_limits<Real>::digits);
  }
}

template <class Real>
Real pow2(int e) {
  using std::ldexp;
  return ldexp(Real(1), e);
}

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real euler_gamma() {
  return boost::math::constants::euler<Real>();
}

template <class Real>
Real ln_two() {
  return boost::math::constants::ln_two<Real>();
}

template <class Real>
long double to_ld(const Real& x) {
  if constexpr (is_mp_real_v<Real>) {
    return x.template convert_to<long double>();
  } else {
    return static_cast<long double>(x);
  }
}

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(to_ld(x));
}

}  // namespace lichi
