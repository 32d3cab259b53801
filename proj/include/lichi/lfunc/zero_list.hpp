#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lichi/characters.hpp"
#include "lichi/core/error.hpp"

namespace lichi {

enum class Provenance { computed, imported };

inline const char* to_string(Provenance p) { return p == Provenance::computed ? "computed" : "imported"; }

struct ZeroRecord {
  double gamma = 0;
  unsigned alpha = 1;
  double accuracy = 0;  // |gamma_true - gamma| <= accuracy
};

/// Ordinates of critical-line zeros, ascending, complete up to `height`.
class ZeroList {
 public:
  ZeroList() = default;
  ZeroList(CharacterId chi_id, std::vector<ZeroRecord> records, double height, Provenance provenance,
           bool symmetric = true)
      : chi_id_(chi_id), records_(std::move(records)), height_(height), provenance_(provenance), symmetric_(symmetric) {
    for (std::size_t i = 0; i < records_.size(); ++i) {
      const auto& r = records_[i];
      if (!(r.gamma > 0) && symmetric_) throw Error(ErrorCode::DomainError, "zero ordinates must be positive");
      if (r.alpha == 0) throw Error(ErrorCode::DomainError, "zero multiplicity must be positive");
      if (i > 0 && !(records_[i - 1].gamma < r.gamma)) {
        throw Error(ErrorCode::DomainError, "zero ordinates must be strictly increasing");
      }
    }
  }

  const CharacterId& chi_id() const { return chi_id_; }
  const std::vector<ZeroRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const ZeroRecord& operator[](std::size_t i) const { return records_[i]; }
  double height() const { return height_; }
  Provenance provenance() const { return provenance_; }
  bool symmetric() const { return symmetric_; }

  /// Free-form diagnostics attached by the producer (zero finder anomalies etc.).
  const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  /// Number of zeros (with multiplicity) with gamma <= t.
  std::uint64_t count_up_to(double t) const {
    std::uint64_t c = 0;
    for (const auto& r : records_) {
      if (r.gamma > t) break;
      c += r.alpha;
    }
    return c;
  }

  /// The first n records, complete up to min(height, gamma_n).
  ZeroList prefix(std::size_t n) const {
    if (n > records_.size()) throw Error(ErrorCode::NExceedsList, "prefix longer than the zero list");
    std::vector<ZeroRecord> head(records_.begin(), records_.begin() + static_cast<std::ptrdiff_t>(n));
    double h = height_;
    if (n < records_.size()) h = n == 0 ? 0.0 : std::min(height_, records_[n - 1].gamma);
    ZeroList out(chi_id_, std::move(head), h, provenance_, symmetric_);
    out.notes_ = notes_;
    return out;
  }

 private:
  CharacterId chi_id_{};
  std::vector<ZeroRecord> records_;
  double height_ = 0;
  Provenance provenance_ = Provenance::computed;
  bool symmetric_ = true;
  std::vector<std::string> notes_;
};

namespace detail {

inline std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Half a unit in the 12th significant digit of v.
inline double g12_resolution(double v) {
  if (v == 0) return 0;
  const int e = static_cast<int>(std::floor(std::log10(std::fabs(v))));
  return 0.5 * std::pow(10.0, e - 11);
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size() && std::isfinite(out);
  } catch (const std::exception&) {
    return false;
  }
}

inline bool parse_uint(const std::string& s, std::uint64_t& out) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(s);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace detail

/// Writes `# q=.. label=.. height=..`, key=value comment lines, then `gamma [alpha]`
/// records with 12 significant digits.
inline void write_zeros(std::ostream& os, const ZeroList& zeros) {
  os << "# q=" << zeros.chi_id().q << " label=" << zeros.chi_id().label
     << " height=" << detail::format_g12(zeros.height()) << "\n";
  os << "# provenance=" << to_string(zeros.provenance()) << "\n";
  if (!zeros.symmetric()) os << "# symmetric=false\n";
  for (const auto& r : zeros.records()) {
    os << detail::format_g12(r.gamma);
    if (r.alpha != 1) os << " " << r.alpha;
    os << "\n";
  }
}

inline void write_zeros(const std::string& path, const ZeroList& zeros) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  write_zeros(out, zeros);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

/// Parses a zero file. The header modulus must equal expected.q; a label present in
/// both is compared as well. Records read back carry accuracy equal to the printed
/// resolution.
inline ZeroList read_zeros(std::istream& is, const CharacterId& expected) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  CharacterId id = expected;
  double height = -1;
  bool symmetric = true;
  Provenance provenance = Provenance::imported;
  std::vector<ZeroRecord> records;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream fields(line.substr(first + 1));
      std::string kv;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        std::uint64_t u = 0;
        double d = 0;
        if (key == "q") {
          if (!detail::parse_uint(value, u)) detail::parse_fail(lineno, "bad modulus '" + value + "'");
          if (u != expected.q) {
            throw Error(ErrorCode::ModulusMismatch,
                        "zero file modulus " + value + " does not match q=" + std::to_string(expected.q));
          }
          have_header = true;
        } else if (key == "label") {
          if (!detail::parse_uint(value, u)) detail::parse_fail(lineno, "bad label '" + value + "'");
          id.label = u;
        } else if (key == "height") {
          if (!detail::parse_double(value, d) || d < 0) detail::parse_fail(lineno, "bad height '" + value + "'");
          height = d;
        } else if (key == "symmetric") {
          if (value != "true" && value != "false") detail::parse_fail(lineno, "bad symmetric flag '" + value + "'");
          symmetric = value == "true";
        } else if (key == "provenance") {
          provenance = value == "computed" ? Provenance::computed : Provenance::imported;
        }
      }
      continue;
    }
    if (!have_header) detail::parse_fail(lineno, "record before the '# q=...' header");
    std::istringstream fields(line);
    std::string g, a, extra;
    fields >> g;
    fields >> a;
    if (fields >> extra) detail::parse_fail(lineno, "too many fields");
    ZeroRecord r;
    if (!detail::parse_double(g, r.gamma)) detail::parse_fail(lineno, "bad ordinate '" + g + "'");
    if (symmetric && !(r.gamma > 0)) detail::parse_fail(lineno, "ordinate must be positive");
    if (!a.empty()) {
      std::uint64_t u = 0;
      if (!detail::parse_uint(a, u) || u == 0 || u > 1000000) detail::parse_fail(lineno, "bad multiplicity '" + a + "'");
      r.alpha = static_cast<unsigned>(u);
    }
    if (!records.empty() && !(records.back().gamma < r.gamma)) detail::parse_fail(lineno, "ordinates not strictly ascending");
    r.accuracy = detail::g12_resolution(r.gamma);
    records.push_back(r);
  }
  if (!have_header) detail::parse_fail(lineno, "missing '# q=...' header");
  if (expected.label != 0 && id.label != expected.label) {
    throw Error(ErrorCode::ModulusMismatch, "zero file label " + std::to_string(id.label) +
                                                " does not match label " + std::to_string(expected.label));
  }
  if (height < 0) height = records.empty() ? 0 : records.back().gamma;
  return ZeroList(id, std::move(records), height, provenance, symmetric);
}

inline ZeroList read_zeros(const std::string& path, const CharacterId& expected) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open zero file " + path);
  return read_zeros(in, expected);
}

}  // namespace lichi
