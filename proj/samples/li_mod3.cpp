// Li coefficients of the quadratic character mod 3 by both methods.
//
//   li_mod3 [T]    zeros up to height T (default 300)

#include <cstdio>
#include <cstdlib>

#include "lichi/characters.hpp"
#include "lichi/lfunc/zero_finder.hpp"
#include "lichi/li/arith.hpp"
#include "lichi/li/zero_sum.hpp"

int main(int argc, char** argv) {
  using namespace lichi;
  const double T = argc > 1 ? std::atof(argv[1]) : 300.0;
  const auto chi = real_primitive_character(3);

  const ZeroList zeros = find_zeros(chi, T);
  std::printf("%zu zeros up to %.1f, first at %.10f\n", zeros.size(), T, zeros.empty() ? 0.0 : zeros[0].gamma);
  if (zeros.empty()) return 1;

  std::printf("%3s %16s %16s %16s\n", "n", "prime sum", "zero sum", "(n/2)log n + cn");
  for (unsigned n = 1; n <= 10; ++n) {
    const auto a = li_arith(n, chi, choose_M(n, 2));
    const auto z = li_zero_sum(n, zeros);
    std::printf("%3u %16.10f %16.10f %16.10f\n", n, to_double(a.value), to_double(z.value), asymptotic_model(n, 3));
  }
  return 0;
}
