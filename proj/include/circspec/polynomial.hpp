#pragma once

// Exact integer polynomials: characteristic polynomials from power sums,
// cyclotomic polynomials and fraction-free gcd.

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace circspec {

/// Integer polynomial with coefficients stored in ascending degree order.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);

  /// x^n - 1.
  static IntPolynomial x_pow_minus_one(int n);
  static IntPolynomial monomial(int degree, mpz_class coeff = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  /// Coefficient of x^i, zero beyond the degree.
  mpz_class coefficient(int i) const;
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  /// Largest m with x^m dividing this polynomial.
  int trailing_zero_count() const;
  /// This polynomial divided by x^m; requires m <= trailing_zero_count().
  IntPolynomial shift_down(int m) const;

  mpz_class evaluate(const mpz_class& x) const;
  /// gcd of the coefficients (non-negative).
  mpz_class content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;

  /// Remainder modulo a monic divisor; exact over Z.
  IntPolynomial mod_monic(const IntPolynomial& divisor) const;
  /// Quotient by a monic divisor that divides exactly; throws otherwise.
  IntPolynomial exact_div_monic(const IntPolynomial& divisor) const;

  /// Human-readable form, e.g. "x^3 - 3x - 2".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Monic degree-n polynomial prod (x - lambda_i) recovered from the power sums
/// p_t = sum lambda_i^t, t = 1..n, by Newton's identities. `power_sums[t-1]`
/// holds p_t. Throws std::logic_error if a non-integral coefficient appears.
IntPolynomial polynomial_from_power_sums(std::span<const mpz_class> power_sums, int degree);

/// The d-th cyclotomic polynomial, d >= 1. Thread-safe memoised.
const IntPolynomial& cyclotomic(int d);

/// Decides exactly whether sum_m weights[m] * omega^(j m) = 0 where
/// omega = exp(2 pi i / n) and n = weights.size().
bool root_of_unity_sum_is_zero(std::span<const long> weights, int j);

/// Primitive gcd over Z by the primitive pseudo-remainder sequence.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

}  // namespace circspec
