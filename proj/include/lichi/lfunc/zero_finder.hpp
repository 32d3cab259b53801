#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lichi/characters.hpp"
#include "lichi/core/parallel.hpp"
#include "lichi/core/precision.hpp"
#include "lichi/lfunc/critical_line.hpp"
#include "lichi/lfunc/l_value.hpp"
#include "lichi/lfunc/zero_list.hpp"

namespace lichi {

struct ZeroFinderOptions {
  double grid_step = 0;       // 0 selects min(0.2, pi / log(q T_max))
  double tolerance = 1e-10;   // bracket width at which refinement stops
  double chunk_length = 50;   // t-length of independently scanned intervals
  unsigned threads = 0;       // 0 selects std::thread::hardware_concurrency()
  bool exact_count = true;    // argument-principle count at every chunk boundary
};

inline double default_grid_step(std::uint64_t q, double t_max) {
  const double lg = std::log(static_cast<double>(q) * std::max(t_max, 1.0));
  const double pi_over = lg > 0 ? std::acos(-1.0) / lg : 0.2;
  return std::min(0.2, pi_over);
}

namespace detail {

inline int sign_of(long double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Illinois-modified regula falsi on a sign-change bracket, down to width tol.
inline ZeroRecord refine_root(const CriticalLineEvaluator& ev, long double lo, long double hi, long double flo,
                              long double fhi, long double tol) {
  int side = 0;
  long double last_width = hi - lo;
  int stalled = 0;
  for (int iter = 0; iter < 400 && hi - lo > tol; ++iter) {
    long double x;
    if (stalled >= 3) {
      x = (lo + hi) / 2;
      stalled = 0;
    } else {
      x = (lo * fhi - hi * flo) / (fhi - flo);
      const long double margin = tol / 4;
      x = std::clamp(x, lo + margin, hi - margin);
    }
    const long double fx = ev.z(x);
    if (fx == 0) {
      lo = hi = x;
      break;
    }
    if (sign_of(fx) == sign_of(flo)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi /= 2;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo /= 2;
      side = 1;
    }
    const long double width = hi - lo;
    stalled = width > last_width / 2 ? stalled + 1 : 0;
    if (stalled == 0) last_width = width;
  }
  long double g = lo;
  if (hi > lo) {
    g = (lo * fhi - hi * flo) / (fhi - flo);
    g = std::clamp(g, lo, hi);
  }
  ZeroRecord r;
  r.gamma = static_cast<double>(g);
  const long double gd = static_cast<long double>(r.gamma);
  r.accuracy = static_cast<double>(std::max(gd - lo, hi - gd)) + 4 * DBL_EPSILON * r.gamma;
  r.alpha = 1;
  return r;
}

struct ScanOutcome {
  std::vector<ZeroRecord> records;
  std::vector<std::string> notes;
};

// Zeros in (t_first, t_last] sampled on `samples` equal steps, with subdivision
// of same-sign local minima of |Z|.
inline ScanOutcome scan_interval(const CriticalLineEvaluator& ev, long double t_first, long double t_last,
                                 std::size_t samples, long double tol) {
  ScanOutcome out;
  std::vector<long double> t(samples + 1), z(samples + 1);
  for (std::size_t j = 0; j <= samples; ++j) {
    t[j] = j == samples ? t_last : t_first + (t_last - t_first) * static_cast<long double>(j) / samples;
    z[j] = ev.z(t[j]);
  }
  auto bracket_zeros = [&](long double a, long double b, long double za, long double zb, std::size_t pieces,
                           std::vector<ZeroRecord>& sink) {
    long double prev_t = a, prev_z = za;
    for (std::size_t p = 1; p <= pieces; ++p) {
      const long double tt = p == pieces ? b : a + (b - a) * static_cast<long double>(p) / pieces;
      const long double zz = p == pieces ? zb : ev.z(tt);
      if (zz == 0) {
        sink.push_back(ZeroRecord{static_cast<double>(tt), 1, static_cast<double>(tol)});
        prev_t = tt;
        prev_z = ev.z(tt + tol);
        continue;
      }
      if (sign_of(prev_z) * sign_of(zz) < 0) sink.push_back(refine_root(ev, prev_t, tt, prev_z, zz, tol));
      prev_t = tt;
      prev_z = zz;
    }
  };
  for (std::size_t j = 0; j < samples; ++j) {
    if (z[j + 1] == 0) {
      if (t[j + 1] != t_last) out.records.push_back(ZeroRecord{static_cast<double>(t[j + 1]), 1, static_cast<double>(tol)});
      continue;
    }
    if (z[j] != 0 && sign_of(z[j]) * sign_of(z[j + 1]) < 0) {
      out.records.push_back(refine_root(ev, t[j], t[j + 1], z[j], z[j + 1], tol));
    }
    // same-sign local minimum of |Z| at t[j]: look for a hidden pair on [t[j-1], t[j+1]]
    if (j >= 1 && sign_of(z[j - 1]) == sign_of(z[j]) && sign_of(z[j]) == sign_of(z[j + 1]) &&
        std::fabs(z[j]) < std::fabs(z[j - 1]) && std::fabs(z[j]) < std::fabs(z[j + 1])) {
      std::vector<ZeroRecord> hidden;
      bracket_zeros(t[j - 1], t[j], z[j - 1], z[j], 8, hidden);
      bracket_zeros(t[j], t[j + 1], z[j], z[j + 1], 8, hidden);
      if (!hidden.empty()) {
        out.notes.push_back("close zero pair resolved near t=" + std::to_string(static_cast<double>(t[j])));
        out.records.insert(out.records.end(), hidden.begin(), hidden.end());
      }
    }
  }
  std::sort(out.records.begin(), out.records.end(), [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma < b.gamma; });
  out.records.erase(std::unique(out.records.begin(), out.records.end(),
                                [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma == b.gamma; }),
                    out.records.end());
  return out;
}

// arg L(1/2 + iT) by continuous variation along 2 + i0 -> 2 + iT -> 1/2 + iT
// (Re L > 0 on Re s = 2); nullopt when the horizontal path passes too close to a zero.
inline std::optional<long double> continuous_arg(const CriticalLineEvaluator& ev, long double T) {
  const long double pi_l = 3.14159265358979323846264338327950288L;
  cld prev = ev.l_value(2.0L, T);
  long double acc = arg(prev);
  long double sigma = 2.0L, step = 0.125L;
  while (sigma > 0.5L) {
    const long double next = std::max(0.5L, sigma - step);
    const cld cur = ev.l_value(next, T);
    long double d = arg(cur) - arg(prev);
    while (d > pi_l) d -= 2 * pi_l;
    while (d < -pi_l) d += 2 * pi_l;
    if (std::fabs(d) > pi_l / 6) {
      if (step < 1e-9L) return std::nullopt;
      step /= 2;
      continue;
    }
    acc += d;
    prev = cur;
    sigma = next;
    if (std::fabs(d) < pi_l / 24) step = std::min(step * 2, 0.25L);
  }
  return acc;
}

// N(T) = theta(T)/pi + arg L(1/2 + iT)/pi, an integer when T is not an ordinate.
inline std::optional<std::int64_t> exact_count(const CriticalLineEvaluator& ev, long double T) {
  if (T <= 0) return 0;
  const auto a = continuous_arg(ev, T);
  if (!a) return std::nullopt;
  const long double pi_l = 3.14159265358979323846264338327950288L;
  const long double v = (ev.theta(T) + *a) / pi_l;
  const long double r = std::round(v);
  if (std::fabs(v - r) > 0.05L) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

}  // namespace detail

/// Number of zeros of L(s, chi) with 0 < Im s <= T by the argument principle
/// (assumes T is not itself an ordinate). Real primitive characters only.
inline std::int64_t count_zeros_exact(const DirichletCharacter& chi, double T) {
  CriticalLineEvaluator ev(chi, T);
  const auto n = detail::exact_count(ev, T);
  if (!n) throw Error(ErrorCode::PrecisionUnreachable, "argument-principle count is not integral at this height");
  return *n;
}

/// All critical-line zeros with 0 < gamma <= t_max of a real primitive character.
/// The scan runs in extended double precision (independent of prec.working_bits);
/// refined ordinates are bracketed to opts.tolerance. Completeness is checked per
/// chunk against the argument-principle count and globally against n_formula.
inline ZeroList find_zeros(const DirichletCharacter& chi, double t_max, const PrecisionConfig& prec = default_precision(),
                           const ZeroFinderOptions& opts = {}) {
  (void)prec;
  detail::require_real_primitive<double>(chi);
  if (!(t_max > 0)) throw Error(ErrorCode::DomainError, "find_zeros: t_max must be positive");
  const CriticalLineEvaluator ev(chi, t_max);
  const long double tol = opts.tolerance;
  const double h_target = opts.grid_step > 0 ? opts.grid_step : default_grid_step(chi.modulus(), t_max);
  const std::size_t steps = static_cast<std::size_t>(std::ceil(t_max / h_target));
  const long double h = static_cast<long double>(t_max) / steps;
  auto grid_t = [&](std::size_t i) { return i == steps ? static_cast<long double>(t_max) : h * i; };

  // chunk boundaries: grid points near multiples of chunk_length, picked for large |Z|
  const std::size_t per_chunk = std::max<std::size_t>(8, static_cast<std::size_t>(opts.chunk_length / h));
  std::vector<std::size_t> bounds{0};
  for (std::size_t nominal = per_chunk; nominal + per_chunk / 2 < steps; nominal += per_chunk) {
    std::size_t best = nominal;
    long double best_abs = -1;
    for (std::size_t c = nominal - 2; c <= nominal + 2; ++c) {
      const long double a = std::fabs(ev.z(grid_t(c)));
      if (a > best_abs) {
        best_abs = a;
        best = c;
      }
    }
    bounds.push_back(best);
  }
  bounds.push_back(steps);
  const std::size_t chunks = bounds.size() - 1;

  std::vector<std::optional<std::int64_t>> counts(bounds.size());
  counts[0] = 0;
  if (opts.exact_count) {
    parallel_for(chunks, opts.threads, [&](std::size_t c) { counts[c + 1] = detail::exact_count(ev, grid_t(bounds[c + 1])); });
  }

  std::vector<detail::ScanOutcome> results(chunks);
  auto run_chunk = [&](std::size_t c, std::size_t factor) {
    return detail::scan_interval(ev, grid_t(bounds[c]), grid_t(bounds[c + 1]), (bounds[c + 1] - bounds[c]) * factor, tol);
  };
  parallel_for(chunks, opts.threads, [&](std::size_t c) {
    auto r = run_chunk(c, 1);
    if (counts[c] && counts[c + 1]) {
      const auto expected = *counts[c + 1] - *counts[c];
      if (static_cast<std::int64_t>(r.records.size()) != expected) {
        auto fine = run_chunk(c, 4);
        fine.notes.push_back("chunk (" + std::to_string(static_cast<double>(grid_t(bounds[c]))) + ", " +
                             std::to_string(static_cast<double>(grid_t(bounds[c + 1]))) + "] rescanned at 4x grid");
        if (static_cast<std::int64_t>(fine.records.size()) != expected) {
          fine.notes.push_back("chunk count " + std::to_string(fine.records.size()) + " differs from argument-principle count " +
                               std::to_string(expected));
        }
        r = std::move(fine);
      }
    } else if (opts.exact_count) {
      r.notes.push_back("argument-principle count unavailable at a boundary of chunk " + std::to_string(c));
    }
    results[c] = std::move(r);
  });

  auto merge = [&] {
    std::vector<ZeroRecord> all;
    for (const auto& r : results) all.insert(all.end(), r.records.begin(), r.records.end());
    return all;
  };
  std::vector<ZeroRecord> all = merge();
  const double slack = 2 + std::log(t_max);
  auto smooth_ok = [&](std::size_t found) {
    return t_max < 1 || std::fabs(static_cast<double>(found) - n_formula(t_max, chi.modulus())) <= slack;
  };
  if (!smooth_ok(all.size())) {
    parallel_for(chunks, opts.threads, [&](std::size_t c) { results[c] = run_chunk(c, 4); });
    all = merge();
    if (!smooth_ok(all.size())) {
      throw Error(ErrorCode::CompletenessCheckFailed,
                  "found " + std::to_string(all.size()) + " zeros up to " + std::to_string(t_max) + ", n_formula gives " +
                      std::to_string(n_formula(t_max, chi.modulus())));
    }
  }
  ZeroList list(chi.id(), std::move(all), t_max, Provenance::computed);
  for (const auto& r : results) {
    for (const auto& n : r.notes) list.add_note(n);
  }
  return list;
}

/// The first `count` zeros; the returned height is the midpoint between the last
/// returned ordinate and the next one.
inline ZeroList find_first_zeros(const DirichletCharacter& chi, std::size_t count,
                                 const PrecisionConfig& prec = default_precision(), const ZeroFinderOptions& opts = {}) {
  detail::require_real_primitive<double>(chi);
  const std::uint64_t q = chi.modulus();
  // smallest T with n_formula(T) comfortably above count
  auto target = [&](double tt) { return static_cast<double>(count) + 3 + 1.5 * std::log(tt); };
  double lo = 1, hi = 10;
  while (n_formula(hi, q) < target(hi)) hi *= 2;
  for (int i = 0; i < 60; ++i) {
    const double mid = (lo + hi) / 2;
    (n_formula(mid, q) < target(mid) ? lo : hi) = mid;
  }
  double t = std::max(hi, 10.0);
  for (int attempt = 0; attempt < 20; ++attempt) {
    ZeroList all = find_zeros(chi, t, prec, opts);
    if (all.size() > count) {
      std::vector<ZeroRecord> head(all.records().begin(), all.records().begin() + static_cast<std::ptrdiff_t>(count));
      const double height = count == 0 ? all[0].gamma / 2 : (all[count - 1].gamma + all[count].gamma) / 2;
      ZeroList out(chi.id(), std::move(head), height, Provenance::computed);
      for (const auto& n : all.notes()) out.add_note(n);
      return out;
    }
    t *= 1.2;
  }
  throw Error(ErrorCode::InsufficientZeros, "could not reach the requested number of zeros");
}

}  // namespace lichi
