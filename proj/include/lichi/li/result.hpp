#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <variant>

#include "lichi/characters.hpp"
#include "lichi/core/precision.hpp"

namespace lichi {

enum class LiMethod { arith, zero_sum, integral };

inline const char* to_string(LiMethod m) {
  switch (m) {
    case LiMethod::arith: return "arith";
    case LiMethod::zero_sum: return "zero_sum";
    case LiMethod::integral: return "integral";
  }
  return "?";
}

enum class BoundCase { m_plus_one_prime, generic };

/// Prime-power cutoff M for the arithmetic formula and the bound that justified it.
struct TruncationParams {
  std::uint64_t M = 2;
  unsigned nu = 1;
  BoundCase bound_case = BoundCase::generic;
  // W_{-1} candidate for the M+1 prime case; empty when its argument leaves the domain
  std::optional<std::uint64_t> prime_adjacent_candidate;
  bool candidate_domain_error = false;
};

/// Number of zeros N and truncation height T for the zero-sum formula.
struct PartialSumParams {
  std::size_t N = 1;
  double T = 0;
  unsigned k_exp = 3;
};

template <class Real>
struct LiResultT {
  unsigned n = 0;
  Real value{};
  LiMethod method = LiMethod::arith;
  double error_bound = std::numeric_limits<double>::infinity();
  std::variant<TruncationParams, PartialSumParams> params;
  CharacterId chi_id{};
  bool complex_character = false;  // value is Re(lambda) of a complex character
  bool conditional_rh = false;     // zero-based methods assume RH
  // integral method: direct quadrature over [gamma_1, gamma_N] plus the exact tail
  std::optional<double> quadrature_value;
};

using LiResult = LiResultT<mp_real>;

}  // namespace lichi
