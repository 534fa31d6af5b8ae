#include "circspec/mpreal.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace circspec::mp {

Real::Real(Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real Real::rational(long num, long den, Precision prec, mpfr_rnd_t rnd) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Real r(prec);
  // num and den are exact at 64 bits; only the quotient rounds.
  Real n(num, std::max<Precision>(prec, 64));
  mpfr_div_si(r.v_, n.v_, den, rnd);
  return r;
}

Real Real::pi(Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_const_pi(r.v_, rnd);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave `other` as a valid minimal-precision value.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

// Grows `target` to the larger precision before an in-place binary op.
void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) {
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
  }
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  widen(v_, rhs.v_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(v_, rhs.v_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(v_, rhs.v_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(v_, rhs.v_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real operator*(long lhs, Real rhs) {
  mpfr_mul_si(rhs.v_, rhs.v_, lhs, MPFR_RNDN);
  return rhs;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.precision());
  mpfr_sin(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real constant_like(const Real& like, long value) { return Real(value, like.precision()); }

// ---------------------------------------------------------------------------

Interval::Interval(Precision prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long value, Precision prec)
    : lo_(Real::rational(value, 1, prec, MPFR_RNDD)), hi_(Real::rational(value, 1, prec, MPFR_RNDU)) {}

Interval::Interval(Real lower, Real upper) : lo_(std::move(lower)), hi_(std::move(upper)) {
  if (lo_ > hi_) throw std::invalid_argument("interval lower bound exceeds upper bound");
}

Interval Interval::rational(long num, long den, Precision prec) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Interval(Real::rational(num, den, prec, MPFR_RNDD), Real::rational(num, den, prec, MPFR_RNDU));
}

Interval Interval::cos_turn(long m, long n, Precision prec) {
  if (n <= 0) throw std::invalid_argument("cos_turn needs n > 0");
  m %= n;
  if (m < 0) m += n;
  // cos(2 pi m / n) = cos(2 pi (n - m) / n); fold the angle into [0, pi].
  const long r = std::min(m, n - m);
  if (r == 0) return Interval(1, prec);
  if (2 * r == n) return Interval(-1, prec);
  if (4 * r == n) return Interval(0, prec);

  const Real pi_lo = Real::pi(prec, MPFR_RNDD);
  const Real pi_hi = Real::pi(prec, MPFR_RNDU);
  Real theta_lo(prec), theta_hi(prec);
  mpfr_mul_si(theta_lo.get(), pi_lo.get(), 2 * r, MPFR_RNDD);
  mpfr_div_si(theta_lo.get(), theta_lo.get(), n, MPFR_RNDD);
  mpfr_mul_si(theta_hi.get(), pi_hi.get(), 2 * r, MPFR_RNDU);
  mpfr_div_si(theta_hi.get(), theta_hi.get(), n, MPFR_RNDU);

  // cos is decreasing on [0, pi]: the bounds swap.
  Real lo(prec), hi(prec);
  if (theta_hi >= pi_lo) {
    mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  } else {
    mpfr_cos(lo.get(), theta_hi.get(), MPFR_RNDD);
  }
  if (theta_lo.sign() <= 0) {
    mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  } else {
    mpfr_cos(hi.get(), theta_lo.get(), MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

double Interval::width() const {
  Real w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

double Interval::midpoint() const {
  Real m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

std::optional<int> Interval::certain_sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  return std::nullopt;
}

namespace {

Precision joint(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval& Interval::operator+=(const Interval& rhs) {
  const Precision p = joint(*this, rhs);
  Real lo(p), hi(p);
  mpfr_add(lo.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  const Precision p = joint(*this, rhs);
  Real lo(p), hi(p);
  mpfr_sub(lo.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  const Precision p = joint(*this, rhs);
  const mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
  const mpfr_srcptr b[2] = {rhs.lo_.get(), rhs.hi_.get()};
  Real lo(p), hi(p), t(p);
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator/=(long divisor) {
  if (divisor == 0) throw std::domain_error("interval division by zero");
  if (divisor < 0) {
    *this = -*this;
    divisor = -divisor;
  }
  mpfr_div_si(lo_.get(), lo_.get(), divisor, MPFR_RNDD);
  mpfr_div_si(hi_.get(), hi_.get(), divisor, MPFR_RNDU);
  return *this;
}

Interval operator*(long lhs, const Interval& rhs) {
  Real lo(rhs.precision()), hi(rhs.precision());
  if (lhs >= 0) {
    mpfr_mul_si(lo.get(), rhs.lo_.get(), lhs, MPFR_RNDD);
    mpfr_mul_si(hi.get(), rhs.hi_.get(), lhs, MPFR_RNDU);
  } else {
    mpfr_mul_si(lo.get(), rhs.hi_.get(), lhs, MPFR_RNDD);
    mpfr_mul_si(hi.get(), rhs.lo_.get(), lhs, MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator-() const { return Interval(-hi_, -lo_); }

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

Interval constant_like(const Interval& like, long value) { return Interval(value, like.precision()); }

}  // namespace circspec::mp
