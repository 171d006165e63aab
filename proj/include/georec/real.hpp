#pragma once

#include <mpfr.h>

#include <string>

#include "georec/rational.hpp"

namespace georec {

// Fixed-precision real scalar (192-bit mantissa) for the few quantities that
// are genuinely irrational: log_Q n, the leading position terms built from
// it, and residuals measured against them. Everything else stays rational.
class Real {
 public:
  static constexpr mpfr_prec_t kPrecisionBits = 192;

  Real() { mpfr_init2(v_, kPrecisionBits); mpfr_set_ui(v_, 0, MPFR_RNDN); }
  Real(long x) { mpfr_init2(v_, kPrecisionBits); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(double x) { mpfr_init2(v_, kPrecisionBits); mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Real(const Integer& x) {
    mpfr_init2(v_, kPrecisionBits);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  explicit Real(const Rational& x) {
    mpfr_init2(v_, kPrecisionBits);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }

  Real(const Real& other) {
    mpfr_init2(v_, kPrecisionBits);
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, kPrecisionBits);
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  friend Real log(const Real& a) {
    Real r;
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real abs(const Real& a) {
    Real r;
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow_ui(const Real& a, unsigned long e) {
    Real r;
    mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string str(int significant_digits = 17) const;

 private:
  mpfr_t v_;
};

}  // namespace georec
