#pragma once

#include <mpfr.h>

#include <string>

#include "rtm/rational.hpp"

namespace rtm {

/// Fixed-precision binary floating point (MPFR, round-to-nearest).
/// Results of binary operations take the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long v, mpfr_prec_t bits);
  Real(const Rational& q, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  static Real pi(mpfr_prec_t bits);
  static Real log2(mpfr_prec_t bits);
  /// 2^e exactly.
  static Real exp2(long e, mpfr_prec_t bits);

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }

  Real abs() const;
  Real square() const { return *this * *this; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific/decimal rendering with `digits` significant digits.
  std::string to_string(int digits) const;

 private:
  mpfr_t v_;
};

}  // namespace rtm
