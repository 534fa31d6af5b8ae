#include "circspec/chebyshev.hpp"

namespace circspec::chebyshev {

bool u2s_lower_bound_check(int s, int n, int j, mp::Precision max_precision) {
  if (s < 2) throw DomainError("U_2s bound needs s >= 2, got s = " + std::to_string(s));
  if (n % 2 != 0 || n < 4) throw DomainError("U_2s bound needs even order n = 2k");
  const int k = n / 2;
  if (j < 2 || j > k - 1) {
    throw DomainError("U_2s bound needs 2 <= j <= k-1, got j = " + std::to_string(j) +
                      " with k = " + std::to_string(k));
  }
  for (mp::Precision prec = 64; prec <= max_precision; prec *= 2) {
    // Y_j = cos(j pi / n) = cos(2 pi j / (2n)).
    const auto y = mp::Interval::cos_turn(j, 2L * n, prec);
    const auto value = U(2 * s, y);
    const auto bound = mp::Interval::rational(-(s + 1), 2, prec);
    if (value.lower() >= bound.upper()) return true;
    if (value.certainly_less(bound)) return false;
  }
  throw RefinementExhausted("U_2s bound undecided at s = " + std::to_string(s) +
                            ", n = " + std::to_string(n) + ", j = " + std::to_string(j));
}

}  // namespace circspec::chebyshev
