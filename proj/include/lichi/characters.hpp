#pragma once

// Dirichlet characters modulo q, stored exactly as exponents of a root of unity.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lichi/core/complex.hpp"
#include "lichi/core/error.hpp"
#include "lichi/core/number_theory.hpp"
#include "lichi/core/precision.hpp"

namespace lichi {

struct CharacterId {
  std::uint64_t q = 0;
  std::uint64_t label = 0;

  friend bool operator==(const CharacterId&, const CharacterId&) = default;
  [[nodiscard]] std::string str() const { return std::to_string(q) + "." + std::to_string(label); }
};

/// chi(k) = exp(2 pi i e_k / order) on units, 0 elsewhere. Immutable.
class DirichletCharacter {
 public:
  static constexpr std::int32_t kZero = -1;

  DirichletCharacter(std::uint64_t modulus, std::uint64_t label, std::uint32_t order,
                     std::vector<std::int32_t> exponents)
      : modulus_(modulus), label_(label), order_(order), exps_(std::move(exponents)) {
    reduce_order();
    compute_conductor();
  }

  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint64_t label() const noexcept { return label_; }
  [[nodiscard]] CharacterId id() const noexcept { return {modulus_, label_}; }
  /// Order of chi as an element of the character group.
  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] std::uint64_t conductor() const noexcept { return conductor_; }
  [[nodiscard]] bool is_primitive() const noexcept { return conductor_ == modulus_; }
  [[nodiscard]] bool is_principal() const noexcept { return order_ == 1; }
  [[nodiscard]] bool is_real() const noexcept { return order_ <= 2; }
  /// 0 for even, 1 for odd characters.
  [[nodiscard]] int parity() const noexcept {
    const auto e = exponent(modulus_ - 1);
    return (e == 0 || e == kZero) ? 0 : 1;
  }

  /// Exponent of chi(k) or kZero when gcd(k, q) > 1.
  [[nodiscard]] std::int32_t exponent(std::uint64_t k) const noexcept { return exps_[k % modulus_]; }
  [[nodiscard]] const std::vector<std::int32_t>& exponents() const noexcept { return exps_; }

  /// Integer value for real characters: -1, 0 or 1.
  [[nodiscard]] int real_value(std::uint64_t k) const {
    const auto e = exponent(k);
    if (e == kZero) return 0;
    return e == 0 ? 1 : -1;
  }

  template <class Real>
  [[nodiscard]] Complex<Real> value(std::uint64_t k) const {
    const auto e = exponent(k);
    if (e == kZero) return Complex<Real>(Real(0), Real(0));
    if (e == 0) return Complex<Real>(Real(1), Real(0));
    if (2 * static_cast<std::uint64_t>(e) == order_) return Complex<Real>(Real(-1), Real(0));
    return polar_unit<Real>(2 * pi<Real>() * Real(e) / Real(order_));
  }

  [[nodiscard]] DirichletCharacter conjugate() const {
    std::vector<std::int32_t> e(exps_);
    for (auto& x : e) {
      if (x != kZero && x != 0) x = static_cast<std::int32_t>(order_) - x;
    }
    return DirichletCharacter(modulus_, label_, order_, std::move(e));
  }

 private:
  void reduce_order() {
    std::uint32_t g = order_;
    for (auto e : exps_) {
      if (e != kZero) g = std::gcd(g, static_cast<std::uint32_t>(e));
    }
    if (g == 0 || g == order_) {
      order_ = 1;
      for (auto& e : exps_) {
        if (e != kZero) e = 0;
      }
      return;
    }
    order_ /= g;
    for (auto& e : exps_) {
      if (e != kZero) e /= static_cast<std::int32_t>(g);
    }
  }

  // Smallest d | q such that chi is trivial on units congruent to 1 mod d.
  void compute_conductor() {
    for (auto d : nt::divisors(modulus_)) {
      bool trivial = true;
      for (std::uint64_t n = 1; n < modulus_ + 1 && trivial; n += d) {
        const auto e = exps_[n % modulus_];
        if (e != kZero && e != 0) trivial = false;
      }
      if (trivial) {
        conductor_ = d;
        return;
      }
    }
    conductor_ = modulus_;
  }

  std::uint64_t modulus_;
  std::uint64_t label_;
  std::uint32_t order_;
  std::vector<std::int32_t> exps_;
  std::uint64_t conductor_ = 1;
};

namespace detail {

struct UnitGroupGenerator {
  std::uint64_t component_modulus;  // p^e
  std::uint64_t lifted;             // generator as a residue mod q
  std::uint32_t order;
};

// Generators of (Z/qZ)^* per prime-power component and discrete logs of every
// residue with respect to them (-1 for non-units).
struct UnitGroup {
  std::uint64_t q;
  std::vector<UnitGroupGenerator> gens;
  std::vector<std::vector<std::int32_t>> logs;  // logs[k][i]
  std::uint32_t exponent = 1;                   // lcm of generator orders
};

inline std::uint64_t crt_lift(std::uint64_t q, std::uint64_t m, std::uint64_t residue) {
  // x = residue mod m, x = 1 mod q/m
  const std::uint64_t other = q / m;
  for (std::uint64_t k = 0; k < m; ++k) {
    const std::uint64_t x = 1 + k * other;
    if (x % m == residue % m) return x % q;
  }
  return residue % q;
}

inline UnitGroup build_unit_group(std::uint64_t q) {
  UnitGroup g{q, {}, {}, 1};
  struct Component {
    std::uint64_t m;
    std::vector<std::uint64_t> gens;  // residues mod m
    std::vector<std::uint32_t> orders;
    std::vector<std::vector<std::int32_t>> logs;  // logs[r][j] for r mod m
  };
  std::vector<Component> comps;
  for (auto [p, e] : nt::factorize(q)) {
    Component c{nt::ipow(p, e), {}, {}, {}};
    c.logs.assign(c.m, {});
    if (p == 2) {
      if (e == 1) {
        c.logs[1] = {};
      } else if (e == 2) {
        c.gens = {3};
        c.orders = {2};
        c.logs[1] = {0};
        c.logs[3] = {1};
      } else {
        const std::uint32_t o5 = static_cast<std::uint32_t>(c.m / 4);
        c.gens = {c.m - 1, 5};
        c.orders = {2, o5};
        std::uint64_t x = 1;
        for (std::uint32_t b = 0; b < o5; ++b) {
          c.logs[x] = {0, static_cast<std::int32_t>(b)};
          c.logs[(c.m - x) % c.m] = {1, static_cast<std::int32_t>(b)};
          x = x * 5 % c.m;
        }
      }
    } else {
      const std::uint64_t root = nt::primitive_root_odd_prime_power(p, e);
      const std::uint32_t ord = static_cast<std::uint32_t>(c.m / p * (p - 1));
      c.gens = {root % c.m};
      c.orders = {ord};
      std::uint64_t x = 1;
      for (std::uint32_t a = 0; a < ord; ++a) {
        c.logs[x] = {static_cast<std::int32_t>(a)};
        x = nt::mul_mod(x, root, c.m);
      }
    }
    comps.push_back(std::move(c));
  }
  for (const auto& c : comps) {
    for (std::size_t j = 0; j < c.gens.size(); ++j) {
      g.gens.push_back({c.m, crt_lift(q, c.m, c.gens[j]), c.orders[j]});
      g.exponent = std::lcm(g.exponent, c.orders[j]);
    }
  }
  g.logs.assign(q, {});
  for (std::uint64_t k = 0; k < q; ++k) {
    if (std::gcd(k, q) != 1) {
      g.logs[k] = {-1};
      continue;
    }
    std::vector<std::int32_t> l;
    for (const auto& c : comps) {
      const auto& cl = c.logs[k % c.m];
      l.insert(l.end(), cl.begin(), cl.end());
    }
    g.logs[k] = std::move(l);
  }
  if (q == 1) g.logs[0] = {};
  return g;
}

inline DirichletCharacter make_character(const UnitGroup& g, std::uint64_t label,
                                         const std::vector<std::uint32_t>& coeffs) {
  std::vector<std::int32_t> exps(g.q, DirichletCharacter::kZero);
  for (std::uint64_t k = 0; k < g.q; ++k) {
    const auto& l = g.logs[k];
    if (!l.empty() && l[0] == -1) continue;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < g.gens.size(); ++i) {
      acc += static_cast<std::uint64_t>(coeffs[i]) * static_cast<std::uint64_t>(l[i]) *
             (g.exponent / g.gens[i].order);
    }
    exps[k] = static_cast<std::int32_t>(acc % g.exponent);
  }
  return DirichletCharacter(g.q, label, g.exponent, std::move(exps));
}

}  // namespace detail

/// All phi(q) characters mod q, labelled by the lexicographic order of their
/// exponent vectors on the generators (primes ascending; -1 before 5 at p = 2).
/// Label 0 is the principal character.
inline std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q) {
  if (q == 0) throw Error(ErrorCode::DomainError, "modulus must be positive");
  const auto g = detail::build_unit_group(q);
  std::vector<DirichletCharacter> out;
  std::vector<std::uint32_t> coeffs(g.gens.size(), 0);
  std::uint64_t label = 0;
  for (;;) {
    out.push_back(detail::make_character(g, label++, coeffs));
    // mixed-radix increment, last generator fastest
    std::size_t i = coeffs.size();
    while (i > 0) {
      --i;
      if (++coeffs[i] < g.gens[i].order) break;
      coeffs[i] = 0;
      if (i == 0) return out;
    }
    if (coeffs.empty()) return out;
  }
}

inline DirichletCharacter character_by_label(std::uint64_t q, std::uint64_t label) {
  auto all = enumerate_characters(q);
  if (label >= all.size()) {
    throw Error(ErrorCode::DomainError,
                "label " + std::to_string(label) + " out of range for modulus " + std::to_string(q));
  }
  return all[label];
}

/// Fundamental discriminant d with |d| = q, preferring d > 0 when both signs qualify.
inline long long fundamental_discriminant_for(std::uint64_t q) {
  const auto sq = static_cast<long long>(q);
  if (nt::is_fundamental_discriminant(sq)) return sq;
  if (nt::is_fundamental_discriminant(-sq)) return -sq;
  throw Error(ErrorCode::NoRealPrimitiveCharacter,
              "no real primitive character of conductor " + std::to_string(q));
}

/// Kronecker character (d/.) of the fundamental discriminant d with |d| = q,
/// returned as the matching member of enumerate_characters(q).
inline DirichletCharacter real_primitive_character(std::uint64_t q) {
  if (q <= 1) throw Error(ErrorCode::NoRealPrimitiveCharacter, "conductor must exceed 1");
  const long long d = fundamental_discriminant_for(q);
  for (auto& chi : enumerate_characters(q)) {
    if (!chi.is_real() || !chi.is_primitive()) continue;
    bool match = true;
    for (std::uint64_t k = 0; k < q && match; ++k) match = chi.real_value(k) == nt::kronecker(d, k);
    if (match) return chi;
  }
  throw Error(ErrorCode::NoRealPrimitiveCharacter,
              "Kronecker character for d=" + std::to_string(d) + " not found");
}

template <class Real>
struct GaussSumValue {
  Complex<Real> tau;
  Complex<Real> root_number_omega;
};

/// tau(chi) = sum_m chi(m) e^{2 pi i m/q}; omega = tau / (sqrt(q) i^a).
template <class Real>
GaussSumValue<Real> gauss_sum(const DirichletCharacter& chi, const PrecisionConfig& prec) {
  if (!chi.is_primitive()) throw Error(ErrorCode::NotPrimitive, "Gauss sum requires a primitive character");
  [[maybe_unused]] ScopedPrecision guard(prec.working_bits);
  using std::sqrt;
  const std::uint64_t q = chi.modulus();
  Complex<Real> tau(Real(0), Real(0));
  for (std::uint64_t m = 1; m <= q; ++m) {
    if (chi.exponent(m) == DirichletCharacter::kZero) continue;
    tau += chi.value<Real>(m) * polar_unit<Real>(2 * pi<Real>() * Real(m) / Real(q));
  }
  Complex<Real> denom(sqrt(Real(q)), Real(0));
  if (chi.parity() == 1) denom = Complex<Real>(Real(0), sqrt(Real(q)));
  return {tau, tau / denom};
}

}  // namespace lichi
