#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lichi/core/parallel.hpp"
#include "lichi/core/precision.hpp"
#include "lichi/lfunc/zero_list.hpp"
#include "lichi/li/result.hpp"
#include "lichi/specfun/lambert_w.hpp"

namespace lichi {

/// (3n^2 / 2T^2) [ (1/2pi) T log T + (1/pi + log(q / 2 pi e)) T + 1/2 ], as printed.
/// Negative for small q and moderate T.
inline double tail_bound_formula(unsigned n, double T, std::uint64_t q) {
  const double pi_d = std::acos(-1.0);
  const double nn = static_cast<double>(n);
  const double bracket =
      T * std::log(T) / (2 * pi_d) + (1 / pi_d + std::log(static_cast<double>(q) / (2 * pi_d * std::exp(1.0)))) * T + 0.5;
  return 3 * nn * nn / (2 * T * T) * bracket;
}

/// Bound on |lambda(n) - lambda(n, T)|. +inf when T < max(n, 3) or when the printed
/// formula is not positive (it then bounds nothing).
inline double tail_bound(unsigned n, double T, std::uint64_t q) {
  const double inf = std::numeric_limits<double>::infinity();
  if (!(T >= std::max(static_cast<double>(n), 3.0))) return inf;
  const double v = tail_bound_formula(n, T, q);
  return v > 0 ? v : inf;
}

struct T0Choice {
  double T0 = 0;
  double tail = 0;          // tail_bound(n, T0, q)
  bool post_check = false;  // tail <= 3 * 10^-k
};

/// Largest root of log T / T = b with b = (4pi / 9n^2) 10^-k, i.e. T0 = -W_{-1}(-b) / b.
/// The tail bound at T0 is checked against 3 * 10^-k.
inline T0Choice choose_T0(unsigned n, unsigned k_exp, std::uint64_t q) {
  if (n < 1) throw Error(ErrorCode::DomainError, "choose_T0: n must be >= 1");
  const long double pi_l = 3.14159265358979323846264338327950288L;
  const long double b = 4 * pi_l / (9.0L * n * n) * std::pow(10.0L, -static_cast<long double>(k_exp));
  const long double x = -b;
  if (x < -1.0L / std::exp(1.0L)) throw Error(ErrorCode::WDomainError, "choose_T0: W_{-1} argument below -1/e");
  const long double w = lambert_w_m1<long double>(x, PrecisionConfig{});
  T0Choice c;
  c.T0 = static_cast<double>(-w / b);
  c.tail = tail_bound(n, c.T0, q);
  c.post_check = c.tail <= 3 * std::pow(10.0, -static_cast<double>(k_exp));
  return c;
}

namespace detail {

inline constexpr std::size_t kZeroBlock = 1024;

inline std::size_t resolve_count(const ZeroList& zeros, std::size_t N) {
  if (zeros.empty()) throw Error(ErrorCode::EmptyZeroList, "zero list is empty");
  if (N == 0) return zeros.size();
  if (N > zeros.size()) {
    throw Error(ErrorCode::NExceedsList, "N=" + std::to_string(N) + " exceeds the " + std::to_string(zeros.size()) + " records");
  }
  return N;
}

// phi = atan(1 / (2 |gamma|)); with x = (4 gamma^2 - 1)/(4 gamma^2 + 1) = cos(2 phi),
// 1 - T_n(x) = 2 sin^2(n phi).
template <class Real>
Real zero_angle(double gamma) {
  using std::atan;
  return atan(Real(1) / (2 * Real(std::fabs(gamma))));
}

template <class Real>
LiResultT<Real> zero_result_header(unsigned n, const ZeroList& zeros, std::size_t N, unsigned k_exp, LiMethod m) {
  LiResultT<Real> r;
  r.n = n;
  r.method = m;
  r.chi_id = zeros.chi_id();
  r.conditional_rh = true;
  PartialSumParams p;
  p.N = N;
  p.T = std::min(std::fabs(zeros[N - 1].gamma), zeros.height());
  p.k_exp = k_exp;
  r.params = p;
  r.error_bound = tail_bound(n, p.T, zeros.chi_id().q);
  return r;
}

}  // namespace detail

/// lambda(n, N) = 2 sum_{k<=N} alpha_k (1 - T_n(x_k)), x_k = (4 gamma_k^2 - 1)/(4 gamma_k^2 + 1),
/// evaluated as 4 alpha_k sin^2(n atan(1 / 2 gamma_k)). Without the factor 2 when the list is
/// not conjugate-symmetric. N = 0 uses every record.
template <class Real = mp_real>
std::vector<LiResultT<Real>> li_zero_sum_range(unsigned n_lo, unsigned n_hi, const ZeroList& zeros, std::size_t N = 0,
                                               const PrecisionConfig& prec = default_precision(), unsigned k_exp = 3,
                                               unsigned threads = 0) {
  N = detail::resolve_count(zeros, N);
  if (n_lo < 1 || n_hi < n_lo) throw Error(ErrorCode::DomainError, "li_zero_sum: need 1 <= n_lo <= n_hi");
  const std::size_t width = n_hi - n_lo + 1;
  const std::size_t blocks = (N + detail::kZeroBlock - 1) / detail::kZeroBlock;
  const int weight = zeros.symmetric() ? 4 : 2;
  std::vector<std::vector<Real>> partial(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
    using std::sin;
    std::vector<Real> acc(width, Real(0));
    const std::size_t end = std::min(N, (b + 1) * detail::kZeroBlock);
    for (std::size_t k = b * detail::kZeroBlock; k < end; ++k) {
      const Real phi = detail::zero_angle<Real>(zeros[k].gamma);
      const Real a = Real(weight * static_cast<int>(zeros[k].alpha));
      for (std::size_t i = 0; i < width; ++i) {
        const Real s = sin(Real(n_lo + static_cast<unsigned>(i)) * phi);
        acc[i] += a * s * s;
      }
    }
    partial[b] = std::move(acc);
  });
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  std::vector<LiResultT<Real>> out;
  for (std::size_t i = 0; i < width; ++i) {
    auto r = detail::zero_result_header<Real>(n_lo + static_cast<unsigned>(i), zeros, N, k_exp, LiMethod::zero_sum);
    Real v(0);
    for (std::size_t b = 0; b < blocks; ++b) v += partial[b][i];
    r.value = v;
    out.push_back(std::move(r));
  }
  return out;
}

template <class Real = mp_real>
LiResultT<Real> li_zero_sum(unsigned n, const ZeroList& zeros, std::size_t N = 0,
                            const PrecisionConfig& prec = default_precision(), unsigned k_exp = 3, unsigned threads = 0) {
  return li_zero_sum_range<Real>(n, n, zeros, N, prec, k_exp, threads).front();
}

namespace detail {

// 2 n U_{n-1}(x(gamma)) x'(gamma) = 32 n gamma (4 gamma^2 + 1)^-2 U_{n-1}(x), x' = 16 gamma / (4 gamma^2 + 1)^2
inline double integral_kernel(unsigned n, double g) {
  const double theta = 2 * std::atan(1 / (2 * g));
  const double st = std::sin(theta);
  const double u = st == 0 ? static_cast<double>(n) : std::sin(n * theta) / st;
  const double d = 4 * g * g + 1;
  return 32.0 * n * g / (d * d) * u;
}

struct SimpsonBudget {
  std::uint64_t subdivisions = 0;
  std::uint64_t cap = std::uint64_t(1) << 20;
};

inline double simpson_rec(unsigned n, double a, double b, double fa, double fm, double fb, double whole, double eps,
                          int depth, SimpsonBudget& budget) {
  const double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
  const double flm = integral_kernel(n, lm), frm = integral_kernel(n, rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || budget.subdivisions >= budget.cap || std::fabs(diff) <= 15 * eps) return left + right + diff / 15;
  ++budget.subdivisions;
  return simpson_rec(n, a, m, fa, flm, fm, left, eps / 2, depth - 1, budget) +
         simpson_rec(n, m, b, fm, frm, fb, right, eps / 2, depth - 1, budget);
}

inline double adaptive_simpson(unsigned n, double a, double b, double eps, SimpsonBudget& budget) {
  const double fa = integral_kernel(n, a), fb = integral_kernel(n, b), fm = integral_kernel(n, (a + b) / 2);
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson_rec(n, a, b, fa, fm, fb, whole, eps, 40, budget);
}

}  // namespace detail

/// lambda(n, N) from the integral of N(gamma) against 32 n gamma (4 gamma^2 + 1)^-2 U_{n-1}(x):
/// exact piecewise, since the antiderivative of that kernel is 2 T_n(x). Also fills
/// quadrature_value with an adaptive-Simpson evaluation over [gamma_1, gamma_N] plus the
/// exact contribution beyond gamma_N.
template <class Real = mp_real>
LiResultT<Real> li_integral(unsigned n, const ZeroList& zeros, std::size_t N = 0,
                            const PrecisionConfig& prec = default_precision(), bool quadrature = true, unsigned k_exp = 3) {
  N = detail::resolve_count(zeros, N);
  if (n < 1) throw Error(ErrorCode::DomainError, "li_integral: n must be >= 1");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  using std::sin;
  auto r = detail::zero_result_header<Real>(n, zeros, N, k_exp, LiMethod::integral);
  const int w = zeros.symmetric() ? 2 : 1;
  // T_n(x_k) = 1 - 2 sin^2(n phi_k)
  auto t_n = [&](std::size_t k) {
    const Real s = sin(Real(n) * detail::zero_angle<Real>(zeros[k].gamma));
    return Real(1) - 2 * s * s;
  };
  Real value(0);
  Real steps(0);
  Real t_prev = t_n(0);
  for (std::size_t k = 0; k + 1 < N; ++k) {
    steps += Real(zeros[k].alpha);
    const Real t_next = t_n(k + 1);
    value += Real(w) * steps * (t_next - t_prev);
    t_prev = t_next;
  }
  steps += Real(zeros[N - 1].alpha);
  value += Real(w) * steps * (Real(1) - t_prev);
  r.value = value;

  if (quadrature && zeros.symmetric()) {
    const double span = std::fabs(zeros[N - 1].gamma) - std::fabs(zeros[0].gamma);
    detail::SimpsonBudget budget;
    double quad = 0, count = 0;
    for (std::size_t k = 0; k + 1 < N; ++k) {
      count += zeros[k].alpha;
      const double a = zeros[k].gamma, b = zeros[k + 1].gamma;
      const double eps = 1e-8 * (b - a) / span;
      // the kernel already carries the factor 2 of a symmetric list
      quad += 0.5 * w * count * detail::adaptive_simpson(n, a, b, eps, budget);
    }
    count += zeros[N - 1].alpha;
    const double s = std::sin(n * std::atan(1 / (2 * std::fabs(zeros[N - 1].gamma))));
    quad += w * count * 2 * s * s;
    r.quadrature_value = quad;
  }
  return r;
}

struct PartialRhReport {
  bool empty = true;
  double height = 0;            // T: zeros verified on the critical line below this height
  double n_max = 0;             // floor(T^2): lambda(n) >= 0 implied for n <= T^2
  std::size_t zero_count = 0;
  double remark_scale = 0;      // (number of zeros)^2, the heuristic extrapolation
  Provenance provenance = Provenance::computed;
  std::vector<std::string> warnings;
};

/// Restates the implication "all zeros with |Im rho| < T on the line => lambda(n) >= 0
/// for n <= T^2" for the given list; informational only.
inline PartialRhReport partial_rh_report(const ZeroList& zeros) {
  PartialRhReport rep;
  rep.provenance = zeros.provenance();
  rep.zero_count = zeros.size();
  if (zeros.empty()) {
    rep.warnings.push_back("empty zero list: no height verified");
    return rep;
  }
  rep.empty = false;
  rep.height = zeros.height();
  rep.n_max = std::floor(rep.height * rep.height);
  const double c = static_cast<double>(zeros.size());
  rep.remark_scale = c * c;
  if (zeros.provenance() == Provenance::imported) {
    rep.warnings.push_back("imported list: on-line verification up to the height is assumed, not checked");
  }
  return rep;
}

/// c_chi = (gamma - 1)/2 + log(q / pi)/2.
inline double li_asymptotic_constant(double q) {
  const double euler = 0.57721566490153286060651209008240243;
  return 0.5 * (euler - 1) + 0.5 * std::log(q / std::acos(-1.0));
}

/// (1/2) n log n + c_chi n.
inline double asymptotic_model(unsigned n, double q) {
  if (n < 1) throw Error(ErrorCode::DomainError, "asymptotic_model: n must be >= 1");
  const double nn = static_cast<double>(n);
  return 0.5 * nn * std::log(nn) + li_asymptotic_constant(q) * nn;
}

}  // namespace lichi
