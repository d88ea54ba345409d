#pragma once

// Software floating point with per-value precision, backed by MPFR.
//
// Precision is carried by each value rather than by a global default, so
// values built on different threads never interfere. Binary operations round
// to the larger precision of their operands.

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>

#include "betajacobi/rational.hpp"

namespace betajacobi {

// Decimal digits to MPFR mantissa bits, with a few guard bits.
mpfr_prec_t digits_to_bits(int digits);

class Real {
 public:
  Real();  // zero at 53 bits
  Real(double value, mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_digits(const Rational& value, int digits) { return Real(value, digits_to_bits(digits)); }

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& lhs, const Real& rhs) { return mpfr_equal_p(lhs.value_, rhs.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& lhs, const Real& rhs);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Exact: every finite binary float is a rational.
  Rational to_rational() const;
  // Scientific notation with `significant` digits, locale independent.
  std::string to_string(int significant) const;
  // log10 of |value|; -inf for zero.
  double log10_abs() const;

 private:
  explicit Real(mpfr_prec_t bits);
  mpfr_t value_;
};

Real abs(const Real& v);
Real sqrt(const Real& v);
Real max(const Real& a, const Real& b);
// 10^exponent at the given precision.
Real pow10(long exponent, mpfr_prec_t bits);

std::ostream& operator<<(std::ostream& os, const Real& v);

}  // namespace betajacobi
