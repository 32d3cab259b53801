#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "lichi/core/error.hpp"
#include "lichi/core/precision.hpp"

namespace lichi {

using big_int = boost::multiprecision::mpz_int;
using big_rational = boost::multiprecision::mpq_rational;

/// Exact C(n, j).
inline big_int big_binomial(unsigned n, unsigned j) {
  if (j > n) throw Error(ErrorCode::DomainError, "binomial requires 0 <= j <= n");
  if (j > n - j) j = n - j;
  big_int r = 1;
  for (unsigned i = 1; i <= j; ++i) {
    r *= n - j + i;
    r /= i;  // exact: r is C(n-j+i, i) after this step
  }
  return r;
}

namespace detail {

// B_0..B_n via sum_{k=0}^{m} C(m+1,k) B_k = 0. Grows on demand; readers share the lock.
class BernoulliTable {
 public:
  static BernoulliTable& instance() {
    static BernoulliTable table;
    return table;
  }

  big_rational get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return values_[n];
  }

 private:
  BernoulliTable() { values_.emplace_back(1); }

  void extend(unsigned n) {
    while (values_.size() <= n) {
      const unsigned m = static_cast<unsigned>(values_.size());
      if (m > 1 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      big_rational acc = 0;
      big_int binom = 1;  // C(m+1, k)
      for (unsigned k = 0; k < m; ++k) {
        acc += big_rational(binom) * values_[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      values_.push_back(-acc / big_rational(m + 1));
    }
  }

  std::shared_mutex mutex_;
  std::vector<big_rational> values_;
};

}  // namespace detail

/// Exact Bernoulli number B_n for even n (B_1 = -1/2 is not exposed).
inline big_rational bernoulli(unsigned n) {
  if (n % 2 == 1) throw Error(ErrorCode::DomainError, "bernoulli: n must be even");
  return detail::BernoulliTable::instance().get(n);
}

template <class Real>
Real rational_to_real(const big_rational& r) {
  if constexpr (is_mp_real_v<Real>) {
    return mp_real(boost::multiprecision::numerator(r)) / mp_real(boost::multiprecision::denominator(r));
  } else {
    return static_cast<Real>(r.template convert_to<long double>());
  }
}

/// B_{2r} / (2r)! as Real, r >= 1.
template <class Real>
Real bernoulli_over_factorial(unsigned two_r) {
  big_int fact = 1;
  for (unsigned i = 2; i <= two_r; ++i) fact *= i;
  return rational_to_real<Real>(bernoulli(two_r) / big_rational(fact));
}

}  // namespace lichi
