#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "lichi/characters.hpp"
#include "lichi/core/complex.hpp"
#include "lichi/core/number_theory.hpp"
#include "lichi/core/parallel.hpp"
#include "lichi/core/precision.hpp"
#include "lichi/li/result.hpp"
#include "lichi/specfun/bernoulli.hpp"
#include "lichi/specfun/lambert_w.hpp"
#include "lichi/specfun/orthopoly.hpp"
#include "lichi/specfun/zeta.hpp"

namespace lichi {

/// Archimedean term of the arithmetic formula.
/// even: sum_{j=2}^n C(n,j) (-1)^j (1 - 2^-j) zeta(j) - n log 2
/// odd:  sum_{j=2}^n C(n,j) (-1)^j 2^-j zeta(j)
/// (the even-case series sum_l 1/(l(2l-1)) equals 2 log 2).
template <class Real>
Real tau_chi(unsigned n, int parity, const PrecisionConfig& prec) {
  if (n < 1) throw Error(ErrorCode::DomainError, "tau_chi: n must be >= 1");
  if (parity != 0 && parity != 1) throw Error(ErrorCode::DomainError, "tau_chi: parity must be 0 or 1");
  const PrecisionConfig hi = prec.with_bits(prec.working_bits + 2 * n);
  Real sum;
  {
    [[maybe_unused]] ScopedPrecision guard(hi.working_bits);
    sum = 0;
    for (unsigned j = 2; j <= n; ++j) {
      const Real c = Real(big_binomial(n, j).str());
      const Real p = pow2<Real>(-static_cast<int>(j));
      Real term = c * zeta_int<Real>(j, hi) * (parity == 0 ? Real(1) - p : p);
      sum += (j % 2 == 0) ? term : Real(-term);
    }
    if (parity == 0) sum -= Real(n) * ln_two<Real>();
  }
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  return Real(sum);
}

/// Working precision for arithmetic-formula calls: 64 + 2n + ceil(log2(qM)).
inline unsigned arith_working_bits(unsigned n, std::uint64_t q, std::uint64_t M) {
  const double lg = std::log2(static_cast<double>(q) * static_cast<double>(std::max<std::uint64_t>(M, 1)));
  return 64 + 2 * n + static_cast<unsigned>(std::ceil(lg));
}

struct KernelRequest {
  unsigned n = 1;
  std::uint64_t M = 2;
};

namespace detail {

inline constexpr std::uint64_t kKernelBlock = std::uint64_t(1) << 20;

// prime powers k = p^m in [lo, hi] as (k, m), ascending in k
inline std::vector<std::pair<std::uint64_t, unsigned>> prime_powers_in(const std::vector<std::uint32_t>& primes,
                                                                      std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto first = std::lower_bound(primes.begin(), primes.end(), lo);
  for (auto it = first; it != primes.end() && *it <= hi; ++it) out.emplace_back(*it, 1u);
  for (std::uint32_t p : primes) {
    const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (pp > hi) break;
    std::uint64_t k = pp;
    unsigned m = 2;
    while (k <= hi) {
      if (k >= lo) out.emplace_back(k, m);
      if (k > hi / p) break;
      k *= p;
      ++m;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// For each request (n, M): -sum over prime powers k = p^m <= M of
/// (log p / k) chi(k) L^1_{n-1}(log k), all requests in one sweep. The k-range
/// is cut into fixed blocks summed independently and reduced in block order, so
/// results do not depend on the thread count.
template <class Real>
std::vector<Complex<Real>> prime_power_kernel_sums(const DirichletCharacter& chi, const std::vector<KernelRequest>& requests,
                                                   const PrecisionConfig& prec, unsigned threads = 0) {
  using C = Complex<Real>;
  if (requests.empty()) return {};
  std::uint64_t m_max = 0;
  unsigned n_max = 0;
  for (const auto& r : requests) {
    if (r.n < 1) throw Error(ErrorCode::DomainError, "kernel sum: n must be >= 1");
    if (r.M < 2) throw Error(ErrorCode::DomainError, "kernel sum: M must be >= 2");
    m_max = std::max(m_max, r.M);
    n_max = std::max(n_max, r.n);
  }
  std::vector<std::size_t> order(requests.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return requests[a].M < requests[b].M; });

  const std::vector<std::uint32_t> primes = nt::primes_up_to(m_max);
  const std::uint64_t q = chi.modulus();
  const bool real = chi.is_real();
  const std::size_t blocks = static_cast<std::size_t>((m_max + detail::kKernelBlock - 1) / detail::kKernelBlock);
  // partial[b][i]: contribution of block b to request i
  std::vector<std::vector<C>> partial(blocks);

  parallel_for(blocks, threads, [&](std::size_t b) {
    [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
    std::vector<C> chi_table;
    if (!real) {
      chi_table.reserve(q);
      for (std::uint64_t a = 0; a < q; ++a) chi_table.push_back(chi.value<Real>(a));
    }
    const std::uint64_t lo = b * detail::kKernelBlock + 1;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + detail::kKernelBlock - 1, m_max);
    std::vector<C> out(requests.size(), C(Real(0), Real(0)));
    std::vector<Real> acc_re(n_max, Real(0)), acc_im(n_max, Real(0));
    std::size_t next = 0;
    while (next < order.size() && requests[order[next]].M < lo) ++next;
    auto flush_below = [&](std::uint64_t k) {
      while (next < order.size() && requests[order[next]].M < k) {
        const unsigned d = requests[order[next]].n - 1;
        out[order[next]] = C(acc_re[d], acc_im[d]);
        ++next;
      }
    };
    for (const auto& [k, m] : detail::prime_powers_in(primes, lo, hi)) {
      flush_below(k);
      if (next == order.size()) break;
      Real w_re, w_im(0);
      if (real) {
        const int v = chi.real_value(k);
        if (v == 0) continue;
        w_re = Real(v);
      } else {
        const C& v = chi_table[k % q];
        if (v.re == 0 && v.im == 0) continue;
        w_re = v.re;
        w_im = v.im;
      }
      const Real lk = log(Real(k));
      const Real scale = -(lk / Real(m)) / Real(k);
      w_re *= scale;
      if (!real) w_im *= scale;
      const std::vector<Real> lag = laguerre_L1_all<Real>(n_max - 1, lk);
      for (unsigned d = 0; d < n_max; ++d) {
        acc_re[d] += w_re * lag[d];
        if (!real) acc_im[d] += w_im * lag[d];
      }
    }
    flush_below(std::numeric_limits<std::uint64_t>::max());
    partial[b] = std::move(out);
  });

  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  std::vector<C> total(requests.size(), C(Real(0), Real(0)));
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < requests.size(); ++i) total[i] += partial[b][i];
  }
  return total;
}

template <class Real>
Complex<Real> prime_power_kernel_sum(unsigned n, const DirichletCharacter& chi, std::uint64_t M, const PrecisionConfig& prec,
                                     unsigned threads = 0) {
  return prime_power_kernel_sums<Real>(chi, {KernelRequest{n, M}}, prec, threads).front();
}

/// Truncation bound for the arithmetic formula:
/// sqrt(n / log M) (log M + 2) / sqrt(M) when M + 1 is prime, 3 sqrt(n) / sqrt(M) otherwise;
/// +inf for M < 16, where the bound is not established.
inline double error_bound_EM(unsigned n, std::uint64_t M) {
  if (M < 16) return std::numeric_limits<double>::infinity();
  const double m = static_cast<double>(M);
  if (nt::is_prime(M + 1)) {
    const double lm = std::log(m);
    return std::sqrt(n / lm) * (lm + 2) / std::sqrt(m);
  }
  return 3 * std::sqrt(static_cast<double>(n)) / std::sqrt(m);
}

inline BoundCase bound_case_for(std::uint64_t M) {
  return nt::is_prime(M + 1) ? BoundCase::m_plus_one_prime : BoundCase::generic;
}

/// (n/4) W_{-1}(-10^-nu / sqrt n)^2 + 4 n 10^{2 nu}, the cutoff for the M + 1 prime case.
inline std::uint64_t prime_adjacent_M(unsigned n, unsigned nu) {
  const long double x = -std::pow(10.0L, -static_cast<long double>(nu)) / std::sqrt(static_cast<long double>(n));
  if (x < -1.0L / std::exp(1.0L)) throw Error(ErrorCode::WDomainError, "W_{-1} argument below -1/e");
  const long double w = lambert_w_m1<long double>(x, PrecisionConfig{});
  const long double m = n / 4.0L * w * w + 4.0L * n * std::pow(10.0L, 2.0L * nu);
  return static_cast<std::uint64_t>(std::ceil(m));
}

/// M = ceil(9 n 10^{2 nu}), then advanced until M + 1 is composite and the bound is
/// strictly below 10^-nu (only possible for M >= 16).
inline TruncationParams choose_M(unsigned n, unsigned nu) {
  if (n < 1) throw Error(ErrorCode::DomainError, "choose_M: n must be >= 1");
  const long double raw = 9.0L * n * std::pow(10.0L, 2.0L * nu);
  if (raw > 1e18L) throw Error(ErrorCode::DomainError, "choose_M: cutoff exceeds the supported range");
  TruncationParams p;
  p.nu = nu;
  p.M = static_cast<std::uint64_t>(std::ceil(raw));
  try {
    p.prime_adjacent_candidate = prime_adjacent_M(n, nu);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::WDomainError) throw;
    p.candidate_domain_error = true;
  }
  if (p.M >= 16) {
    const double target = std::pow(10.0, -static_cast<double>(nu));
    while (nt::is_prime(p.M + 1) || !(error_bound_EM(n, p.M) < target)) ++p.M;
  }
  p.bound_case = bound_case_for(p.M);
  return p;
}

namespace detail {

inline void require_arith_character(const DirichletCharacter& chi) {
  if (chi.conductor() == 1) throw Error(ErrorCode::ConductorOne, "the arithmetic formula needs conductor q > 1");
  if (!chi.is_primitive()) throw Error(ErrorCode::NotPrimitive, "the arithmetic formula needs a primitive character");
}

template <class Real>
LiResultT<Real> assemble_arith(unsigned n, const DirichletCharacter& chi, const TruncationParams& params,
                               const Complex<Real>& kernel, const PrecisionConfig& prec) {
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  LiResultT<Real> r;
  r.n = n;
  r.method = LiMethod::arith;
  r.chi_id = chi.id();
  r.complex_character = !chi.is_real();
  TruncationParams p = params;
  p.bound_case = bound_case_for(p.M);
  r.params = p;
  const Real q = Real(chi.modulus());
  r.value = Real(n) / 2 * (log(q / pi<Real>()) - euler_gamma<Real>()) + tau_chi<Real>(n, chi.parity(), prec) + kernel.re;
  r.error_bound = error_bound_EM(n, p.M);
  return r;
}

}  // namespace detail

/// lambda_chi(n) ~ (n/2)(log(q/pi) - gamma) + tau_chi(n) + kernel sum up to M, with
/// |error| <= error_bound_EM(n, M). Precision is raised to arith_working_bits if needed.
template <class Real = mp_real>
LiResultT<Real> li_arith(unsigned n, const DirichletCharacter& chi, const TruncationParams& params,
                         const PrecisionConfig& prec = default_precision(), unsigned threads = 0) {
  detail::require_arith_character(chi);
  if (n < 1) throw Error(ErrorCode::DomainError, "li_arith: n must be >= 1");
  const PrecisionConfig p = prec.with_bits(std::max(prec.working_bits, arith_working_bits(n, chi.modulus(), params.M)));
  const auto kernel = prime_power_kernel_sum<Real>(n, chi, params.M, p, threads);
  return detail::assemble_arith<Real>(n, chi, params, kernel, p);
}

/// li_arith for several (n, params) pairs sharing one sieve and one sweep.
template <class Real = mp_real>
std::vector<LiResultT<Real>> li_arith_batch(const std::vector<std::pair<unsigned, TruncationParams>>& jobs,
                                            const DirichletCharacter& chi, const PrecisionConfig& prec = default_precision(),
                                            unsigned threads = 0) {
  detail::require_arith_character(chi);
  if (jobs.empty()) return {};
  unsigned bits = prec.working_bits;
  std::vector<KernelRequest> requests;
  for (const auto& [n, params] : jobs) {
    if (n < 1) throw Error(ErrorCode::DomainError, "li_arith: n must be >= 1");
    bits = std::max(bits, arith_working_bits(n, chi.modulus(), params.M));
    requests.push_back(KernelRequest{n, params.M});
  }
  const PrecisionConfig p = prec.with_bits(bits);
  const auto kernels = prime_power_kernel_sums<Real>(chi, requests, p, threads);
  std::vector<LiResultT<Real>> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) out.push_back(detail::assemble_arith<Real>(jobs[i].first, chi, jobs[i].second, kernels[i], p));
  return out;
}

}  // namespace lichi
