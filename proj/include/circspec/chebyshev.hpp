#pragma once

// Chebyshev polynomials of the first and second kind evaluated by the
// three-term recurrence. The scalar type may be double, mp::Real or
// mp::Interval; the recurrence runs at the argument's working precision.

#include <string>

#include "circspec/core.hpp"
#include "circspec/mpreal.hpp"

namespace circspec::chebyshev {

enum class Kind { First, Second };

inline double constant_like(double, long value) { return static_cast<double>(value); }
using mp::constant_like;

/// T_n(x): T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
template <typename Scalar>
Scalar T(int n, const Scalar& x) {
  if (n < 0) throw DomainError("Chebyshev T needs degree >= 0, got " + std::to_string(n));
  Scalar prev = constant_like(x, 1);
  if (n == 0) return prev;
  Scalar cur = x;
  const Scalar two_x = 2L * x;
  for (int i = 1; i < n; ++i) {
    Scalar next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// U_n(x): U_{-1} = 0, U_0 = 1, U_{n+1} = 2x U_n - U_{n-1}.
template <typename Scalar>
Scalar U(int n, const Scalar& x) {
  if (n < -1) throw DomainError("Chebyshev U needs degree >= -1, got " + std::to_string(n));
  if (n == -1) return constant_like(x, 0);
  Scalar prev = constant_like(x, 0);
  Scalar cur = constant_like(x, 1);
  const Scalar two_x = 2L * x;
  for (int i = 0; i < n; ++i) {
    Scalar next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <typename Scalar>
Scalar evaluate(Kind kind, int n, const Scalar& x) {
  return kind == Kind::First ? T(n, x) : U(n, x);
}

/// Certified check of U_{2s}(cos(j pi / n)) >= -(s+1)/2 for n = 2k,
/// 2 <= j <= k-1 and s >= 2. Precision doubles from 64 bits up to `max_precision`;
/// throws RefinementExhausted if the comparison stays undecided.
bool u2s_lower_bound_check(int s, int n, int j, mp::Precision max_precision = 4096);

}  // namespace circspec::chebyshev
