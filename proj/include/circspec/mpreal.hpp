#pragma once

// Thin RAII wrappers over MPFR: a round-to-nearest real and a closed interval
// with outward (directed) rounding for certified sign decisions.

#include <mpfr.h>

#include <optional>
#include <string>

namespace circspec::mp {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision);
  Real(long value, Precision prec);
  Real(double value, Precision prec);
  /// num / den rounded in direction `rnd`.
  static Real rational(long num, long den, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real pi(Precision prec, mpfr_rnd_t rnd = MPFR_RNDN);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  std::string to_string(int digits = 20) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(long lhs, Real rhs);
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real cos(const Real& x);
Real sin(const Real& x);
Real abs(const Real& x);
Real constant_like(const Real& like, long value);

/// Closed interval [lower, upper] whose endpoints are rounded outward, so the
/// exact result of every operation is always enclosed.
class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision);
  Interval(long value, Precision prec);
  Interval(Real lower, Real upper);

  /// Enclosure of num / den.
  static Interval rational(long num, long den, Precision prec);
  /// Enclosure of cos(2 pi m / n) for integers m and n > 0.
  static Interval cos_turn(long m, long n, Precision prec);

  const Real& lower() const { return lo_; }
  const Real& upper() const { return hi_; }
  Precision precision() const { return lo_.precision(); }
  /// upper - lower, rounded up.
  double width() const;
  double midpoint() const;

  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  /// +1 or -1 when the whole interval lies strictly on one side of zero.
  std::optional<int> certain_sign() const;
  bool certainly_less(const Interval& other) const { return hi_ < other.lo_; }
  bool certainly_greater(const Interval& other) const { return lo_ > other.hi_; }
  bool overlaps(const Interval& other) const { return !(hi_ < other.lo_ || lo_ > other.hi_); }

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(long divisor);

  friend Interval operator+(Interval lhs, const Interval& rhs) { return lhs += rhs; }
  friend Interval operator-(Interval lhs, const Interval& rhs) { return lhs -= rhs; }
  friend Interval operator*(Interval lhs, const Interval& rhs) { return lhs *= rhs; }
  friend Interval operator*(long lhs, const Interval& rhs);
  Interval operator-() const;

  std::string to_string(int digits = 20) const;

 private:
  Real lo_;
  Real hi_;
};

Interval constant_like(const Interval& like, long value);

}  // namespace circspec::mp
