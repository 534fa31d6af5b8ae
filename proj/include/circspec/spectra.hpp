#pragma once

// Eigenvalues of circulant graphs by the root-of-unity sum and by Chebyshev
// closed forms, exact power sums and characteristic polynomials, and
// certified inertia.

#include <gmpxx.h>

#include <vector>

#include "circspec/core.hpp"
#include "circspec/mpreal.hpp"
#include "circspec/polynomial.hpp"

namespace circspec::spectra {

/// Eigenvalues lambda_0, ..., lambda_{n-1} in the order lambda_j = sum_{a in S} omega^{ja}.
struct Spectrum {
  int n = 0;
  std::vector<double> values;
  mp::Precision precision = mp::kDefaultPrecision;
};

/// p_t = trace(A^t) = sum_j lambda_j^t for t = 1..max_power.
class PowerSums {
 public:
  PowerSums() = default;
  explicit PowerSums(std::vector<mpz_class> sums) : sums_(std::move(sums)) {}

  int max_power() const { return static_cast<int>(sums_.size()); }
  /// p_t, 1 <= t <= max_power().
  const mpz_class& operator[](int t) const { return sums_.at(static_cast<std::size_t>(t - 1)); }
  const std::vector<mpz_class>& sums() const { return sums_; }

  friend bool operator==(const PowerSums&, const PowerSums&) = default;

 private:
  std::vector<mpz_class> sums_;
};

/// Precision schedule for certified sign decisions: start, doubling to cap.
struct Refinement {
  mp::Precision start = 64;
  mp::Precision cap = 4096;
};

/// Refinement with the cap overridden by the CIRCSPEC_PRECISION_CAP
/// environment variable when it is set to a positive integer.
Refinement default_refinement();

/// sum_{a in S} cos(2 pi j a / n), summed pairwise as 2 cos terms.
mp::Real eigenvalue_fourier(const CirculantGraph& g, int j, mp::Precision prec = mp::kDefaultPrecision);
/// Outward-rounded enclosure of the same sum.
mp::Interval eigenvalue_enclosure(const CirculantGraph& g, int j, mp::Precision prec);

/// 2 sum_h T_{a_h}(X_j), X_j = cos(2 pi j / n). For consecutive generators the
/// U-form U_{2 a_s}(Y_j) - U_{2(a_1 - 1)}(Y_j), Y_j = cos(pi j / n), is evaluated
/// as well and must agree. Rejects sets containing n/2.
mp::Real eigenvalue_chebyshev(const CirculantGraph& g, int j, mp::Precision prec = mp::kDefaultPrecision);

Spectrum spectrum(const CirculantGraph& g, mp::Precision prec = mp::kDefaultPrecision);

/// First row of A^t: entry m counts walks of length t from vertex 0 to m.
std::vector<mpz_class> walk_row(const CirculantGraph& g, int t);

PowerSums power_sums(const CirculantGraph& g, int max_power);

/// det(xI - A) from p_1..p_n via Newton's identities.
IntPolynomial char_poly(const CirculantGraph& g);
IntPolynomial char_poly(const PowerSums& sums, int n);
/// det(xI - A^2) from the even power sums p_2, ..., p_2n.
IntPolynomial char_poly_of_square(const PowerSums& sums, int n);

/// rank(A) = n - deg gcd(sum_{a in S} x^a, x^n - 1), by primitive
/// pseudo-remainder elimination over Z.
int rank(const CirculantGraph& g);
inline int nullity(const CirculantGraph& g) { return g.order() - rank(g); }

/// Exact test lambda_j = 0 by divisibility with the cyclotomic polynomial.
bool eigenvalue_is_zero(const CirculantGraph& g, int j);

/// lambda_k = sum_{a in S} (-1)^a for n = 2k; equals -2(s_o - s_e) without n/2.
long parity_eigenvalue(const CirculantGraph& g);

/// Sign (+1, 0, -1) of every lambda_j. Zeros are identified only by matching the
/// unresolved count against the exact nullity.
std::vector<int> certified_signs(const CirculantGraph& g, Refinement refine = default_refinement());

Inertia inertia(const CirculantGraph& g, Refinement refine = default_refinement());

/// Signs of lambda_{2r-1}, r = 1..k, for n = 2k.
std::vector<int> inertia_odd_index_signs(const CirculantGraph& g,
                                         Refinement refine = default_refinement());

}  // namespace circspec::spectra
