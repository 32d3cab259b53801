#pragma once

// Command implementations behind tools/lichi. Each command writes its report to
// `out`, diagnostics to `err`, and returns a process exit code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "lichi/characters.hpp"
#include "lichi/data/paper_tables.hpp"
#include "lichi/lfunc/l_value.hpp"
#include "lichi/lfunc/zero_finder.hpp"
#include "lichi/lfunc/zero_list.hpp"
#include "lichi/li/arith.hpp"
#include "lichi/li/zero_sum.hpp"

namespace lichi::cli {

enum class Method { arith, zeros, both };
enum class Format { table, csv };

struct RunConfig {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> label;  // default: the real primitive character mod q
  unsigned n_lo = 1;
  unsigned n_hi = 1;
  Method method = Method::zeros;
  unsigned nu = 3;
  unsigned k_exp = 3;
  std::optional<unsigned> prec_bits;  // default: LI_PREC_BITS or 96
  std::string zeros_path;
  std::size_t zeros_count = 0;
  double tmax = 0;
  std::string out_path;
  Format format = Format::table;
  unsigned threads = 0;
};

/// "A..B" or "A".
inline std::pair<unsigned, unsigned> parse_n_range(const std::string& text) {
  auto parse = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::ConfigError, "bad n range '" + text + "': expected A..B");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned n = parse(text);
    return {n, n};
  }
  const unsigned a = parse(text.substr(0, dots)), b = parse(text.substr(dots + 2));
  if (b < a) throw Error(ErrorCode::ConfigError, "empty n range '" + text + "'");
  return {a, b};
}

/// "q" or "q.label".
inline void parse_chi_spec(const std::string& text, RunConfig& cfg) {
  const auto dot = text.find('.');
  const std::string qs = text.substr(0, dot);
  if (qs.empty() || qs.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::ConfigError, "bad character '" + text + "': expected q or q.label");
  }
  cfg.q = std::stoull(qs);
  if (dot != std::string::npos) {
    const std::string ls = text.substr(dot + 1);
    if (ls.empty() || ls.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::ConfigError, "bad character label in '" + text + "'");
    }
    cfg.label = std::stoull(ls);
  }
}

inline PrecisionConfig precision_for(const RunConfig& cfg) {
  return cfg.prec_bits ? PrecisionConfig::make(*cfg.prec_bits) : default_precision();
}

inline DirichletCharacter resolve_character(const RunConfig& cfg) {
  if (cfg.q == 0) throw Error(ErrorCode::ConfigError, "--q is required");
  return cfg.label ? character_by_label(cfg.q, *cfg.label) : real_primitive_character(cfg.q);
}

/// %.12g, with inf/nan spelled out.
inline std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline ZeroList obtain_zeros(const RunConfig& cfg, const DirichletCharacter& chi, std::ostream& err) {
  if (!cfg.zeros_path.empty()) return read_zeros(cfg.zeros_path, chi.id());
  ZeroFinderOptions opts;
  opts.threads = cfg.threads;
  if (cfg.zeros_count > 0) {
    err << "computing " << cfg.zeros_count << " zeros of L(s, chi_" << chi.id().str() << ")\n";
    return find_first_zeros(chi, cfg.zeros_count, precision_for(cfg), opts);
  }
  if (cfg.tmax > 0) {
    err << "computing zeros of L(s, chi_" << chi.id().str() << ") up to height " << cfg.tmax << "\n";
    return find_zeros(chi, cfg.tmax, precision_for(cfg), opts);
  }
  throw Error(ErrorCode::ConfigError, "the zeros method needs a zero source: --zeros PATH, --zeros-count N or --tmax T");
}

inline int cmd_characters(std::uint64_t q, std::ostream& out) {
  if (q == 0) throw Error(ErrorCode::ConfigError, "--q must be positive");
  out << std::left << std::setw(8) << "label" << std::setw(8) << "order" << std::setw(8) << "parity" << std::setw(11)
      << "conductor" << std::setw(11) << "primitive" << "kind\n";
  for (const auto& chi : enumerate_characters(q)) {
    out << std::left << std::setw(8) << chi.label() << std::setw(8) << chi.order() << std::setw(8)
        << (chi.parity() == 0 ? "even" : "odd") << std::setw(11) << chi.conductor() << std::setw(11)
        << (chi.is_primitive() ? "yes" : "no") << (chi.is_principal() ? "principal" : (chi.is_real() ? "real" : "complex"))
        << "\n";
  }
  return 0;
}

inline int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto chi = resolve_character(cfg);
  if (cfg.zeros_count == 0 && !(cfg.tmax > 0)) throw Error(ErrorCode::ConfigError, "zeros needs --tmax T or --zeros-count N");
  if (cfg.out_path.empty()) throw Error(ErrorCode::ConfigError, "zeros needs --out PATH");
  {
    // fail on an unwritable path before the scan, not after it
    std::ofstream probe(cfg.out_path);
    if (!probe) throw Error(ErrorCode::IoError, "cannot open " + cfg.out_path + " for writing");
  }
  const ZeroList zeros = obtain_zeros(cfg, chi, err);
  write_zeros(cfg.out_path, zeros);
  for (const auto& note : zeros.notes()) err << "note: " << note << "\n";
  if (zeros.empty()) err << "warning: no zeros with 0 < gamma <= " << num(zeros.height()) << "\n";
  out << "wrote " << zeros.size() << " zeros of chi_" << chi.id().str() << " up to height " << num(zeros.height()) << " to "
      << cfg.out_path;
  if (zeros.height() >= 1) out << "; n_formula(height) = " << num(n_formula(zeros.height(), chi.modulus()));
  out << "\n";
  return 0;
}

struct LiRow {
  unsigned n = 0;
  std::optional<double> arith, bound_arith;
  std::optional<std::uint64_t> M;
  std::optional<double> zeros, bound_zeros;
  std::optional<std::size_t> N;
  std::optional<double> T;
  double seconds_arith = 0, seconds_zeros = 0;

  double reference() const { return zeros ? *zeros : (arith ? *arith : 0.0); }
  bool positive() const { return reference() >= 0; }
  bool finite_bounds() const {
    return (!bound_arith || std::isfinite(*bound_arith)) && (!bound_zeros || std::isfinite(*bound_zeros));
  }
};

inline std::vector<LiRow> compute_rows(const RunConfig& cfg, std::ostream& err) {
  const auto chi = resolve_character(cfg);
  const PrecisionConfig prec = precision_for(cfg);
  std::vector<LiRow> rows;
  for (unsigned n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    LiRow r;
    r.n = n;
    rows.push_back(r);
  }
  const unsigned first = std::max(1u, cfg.n_lo);
  const bool any = cfg.n_hi >= 1;
  auto row_for = [&](unsigned n) -> LiRow& { return rows[n - cfg.n_lo]; };
  // lambda(0) = 0 exactly, with zero error
  if (cfg.n_lo == 0) {
    LiRow& z = rows.front();
    if (cfg.method != Method::zeros) z.arith = 0, z.bound_arith = 0;
    if (cfg.method != Method::arith) z.zeros = 0, z.bound_zeros = 0;
  }
  if (any && cfg.method != Method::zeros) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<unsigned, TruncationParams>> jobs;
    for (unsigned n = first; n <= cfg.n_hi; ++n) jobs.emplace_back(n, choose_M(n, cfg.nu));
    const auto results = li_arith_batch<mp_real>(jobs, chi, prec, cfg.threads);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& res : results) {
      LiRow& r = row_for(res.n);
      r.arith = to_double(res.value);
      r.bound_arith = res.error_bound;
      r.M = std::get<TruncationParams>(res.params).M;
      r.seconds_arith = dt / static_cast<double>(results.size());
    }
    if (!chi.is_real()) err << "note: complex character, arithmetic values are Re(lambda)\n";
  }
  if (any && cfg.method != Method::arith) {
    const ZeroList zeros = obtain_zeros(cfg, chi, err);
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = li_zero_sum_range<mp_real>(first, cfg.n_hi, zeros, 0, prec, cfg.k_exp, cfg.threads);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& res : results) {
      LiRow& r = row_for(res.n);
      r.zeros = to_double(res.value);
      r.bound_zeros = res.error_bound;
      const auto& p = std::get<PartialSumParams>(res.params);
      r.N = p.N;
      r.T = p.T;
      r.seconds_zeros = dt / static_cast<double>(results.size());
    }
    err << "note: zero-sum values are conditional on RH for L(s, chi_" << chi.id().str() << ")\n";
  }
  return rows;
}

inline void write_li_csv(std::ostream& os, const std::vector<LiRow>& rows) {
  auto opt = [](const auto& v) -> std::string {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(*v)>>) {
      return num(*v);
    } else {
      return std::to_string(*v);
    }
  };
  os << "n,lambda_arith,bound_arith,M,lambda_zeros,bound_zeros,N,T,positive\n";
  for (const auto& r : rows) {
    os << r.n << "," << opt(r.arith) << "," << opt(r.bound_arith) << "," << opt(r.M) << "," << opt(r.zeros) << ","
       << opt(r.bound_zeros) << "," << opt(r.N) << "," << opt(r.T) << "," << (r.positive() ? 1 : 0) << "\n";
  }
}

inline void write_li_table(std::ostream& os, const std::vector<LiRow>& rows) {
  auto cell = [](const auto& v) -> std::string {
    if (!v) return "-";
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(*v)>>) {
      return num(*v);
    } else {
      return std::to_string(*v);
    }
  };
  os << std::left << std::setw(6) << "n" << std::setw(18) << "lambda_arith" << std::setw(14) << "bound_arith" << std::setw(12)
     << "M" << std::setw(18) << "lambda_zeros" << std::setw(14) << "bound_zeros" << std::setw(8) << "N" << std::setw(14) << "T"
     << "positive\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(6) << r.n << std::setw(18) << cell(r.arith) << std::setw(14) << cell(r.bound_arith)
       << std::setw(12) << cell(r.M) << std::setw(18) << cell(r.zeros) << std::setw(14) << cell(r.bound_zeros) << std::setw(8)
       << cell(r.N) << std::setw(14) << cell(r.T) << (r.positive() ? "yes" : "NO") << "\n";
  }
}

inline void emit(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (cfg.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + cfg.out_path + " for writing");
  body(f);
}

inline int cmd_li(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = compute_rows(cfg, err);
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == Format::csv) {
      write_li_csv(os, rows);
    } else {
      write_li_table(os, rows);
    }
  });
  bool finite = true, positive = true;
  for (const auto& r : rows) {
    finite = finite && r.finite_bounds();
    positive = positive && r.positive();
  }
  if (!positive) err << "NOTICE: a computed Li coefficient is negative\n";
  if (!finite) err << "some error bounds are infinite (bound formula not applicable at these parameters)\n";
  return finite ? 0 : 1;
}

inline int cmd_compare(RunConfig cfg, std::ostream& out, std::ostream& err) {
  cfg.method = Method::both;
  const auto rows = compute_rows(cfg, err);
  bool all_pass = true, finite = true;
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == Format::csv) {
      os << "n,lambda_arith,bound_arith,lambda_zeros,bound_zeros,delta,verdict,seconds_arith,seconds_zeros\n";
    } else {
      os << std::left << std::setw(6) << "n" << std::setw(18) << "lambda_arith" << std::setw(18) << "lambda_zeros"
         << std::setw(14) << "delta" << std::setw(14) << "bound_sum" << std::setw(9) << "verdict" << std::setw(14)
         << "t_arith[s]" << "t_zeros[s]\n";
    }
    for (const auto& r : rows) {
      const double delta = std::fabs(*r.arith - *r.zeros);
      const double bound = *r.bound_arith + *r.bound_zeros;
      const bool pass = delta <= bound;
      all_pass = all_pass && pass;
      finite = finite && r.finite_bounds();
      if (cfg.format == Format::csv) {
        os << r.n << "," << num(*r.arith) << "," << num(*r.bound_arith) << "," << num(*r.zeros) << "," << num(*r.bound_zeros)
           << "," << num(delta) << "," << (pass ? "PASS" : "FAIL") << "," << num(r.seconds_arith) << ","
           << num(r.seconds_zeros) << "\n";
      } else {
        os << std::left << std::setw(6) << r.n << std::setw(18) << num(*r.arith) << std::setw(18) << num(*r.zeros)
           << std::setw(14) << num(delta) << std::setw(14) << num(bound) << std::setw(9) << (pass ? "PASS" : "FAIL")
           << std::setw(14) << num(r.seconds_arith) << num(r.seconds_zeros) << "\n";
      }
    }
  });
  if (!all_pass) err << "some deltas exceed the summed error bounds\n";
  return finite ? 0 : 1;
}

inline std::string plot_script(const std::string& csv_path, const std::string& png_path, std::uint64_t q) {
  std::ostringstream s;
  s << "import csv\n"
       "import matplotlib\n"
       "matplotlib.use('Agg')\n"
       "import matplotlib.pyplot as plt\n\n"
       "rows = list(csv.DictReader(open('" << csv_path << "')))\n"
       "n = [int(r['n']) for r in rows]\n"
       "plt.plot(n, [float(r['computed']) for r in rows], 'o-', ms=3, label='computed (zero sum)')\n"
       "plt.plot(n, [float(r['paper_zeros']) for r in rows], 'x', label='published (zero sum)')\n"
       "plt.plot(n, [float(r['paper_arith']) for r in rows], '+', label='published (prime sum)')\n"
       "plt.xlabel('n')\n"
       "plt.ylabel('lambda_chi(n)')\n"
       "plt.title('Li coefficients, quadratic character mod " << q << "')\n"
       "plt.legend()\n"
       "plt.savefig('" << png_path << "', dpi=150)\n";
  return s.str();
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const data::PaperTable* table = data::paper_table(cfg.q);
  if (!table) throw Error(ErrorCode::ConfigError, "no published table for q=" + std::to_string(cfg.q) + " (have 3, 5, 20, 60)");
  const auto chi = resolve_character(cfg);
  const ZeroList zeros = obtain_zeros(cfg, chi, err);
  if (zeros.size() < 10000) {
    throw Error(ErrorCode::InsufficientZeros, "table reproduction needs >= 10000 zeros, got " + std::to_string(zeros.size()));
  }
  const auto n_hi = table->rows.back().n;
  const auto values = li_zero_sum_range<mp_real>(1, n_hi, zeros, 10000, precision_for(cfg), cfg.k_exp, cfg.threads);
  const std::string prefix = cfg.out_path.empty() ? "lichi_mod" + std::to_string(cfg.q) : cfg.out_path;
  const std::string csv_path = prefix + ".csv";
  std::ofstream csv(csv_path);
  if (!csv) throw Error(ErrorCode::IoError, "cannot open " + csv_path + " for writing");
  csv << "n,paper_arith,paper_zeros,computed,delta\n";
  out << std::left << std::setw(6) << "n" << std::setw(14) << "paper_arith" << std::setw(14) << "paper_zeros" << std::setw(18)
      << "computed" << "delta\n";
  for (const auto& row : table->rows) {
    const double v = to_double(values[row.n - 1].value);
    const double d = std::fabs(v - row.zeros);
    csv << row.n << "," << num(row.arith) << "," << num(row.zeros) << "," << num(v) << "," << num(d) << "\n";
    out << std::left << std::setw(6) << row.n << std::setw(14) << num(row.arith) << std::setw(14) << num(row.zeros)
        << std::setw(18) << num(v) << num(d) << "\n";
  }
  const std::string script_path = prefix + "_plot.py";
  std::ofstream script(script_path);
  if (!script) throw Error(ErrorCode::IoError, "cannot open " + script_path + " for writing");
  script << plot_script(csv_path, prefix + ".png", cfg.q);
  err << "wrote " << csv_path << " and " << script_path << "\n";
  return 0;
}

}  // namespace lichi::cli
