#pragma once

// Exact rational scalar backed by GMP. Every value is kept in canonical form:
// positive denominator, numerator and denominator coprime.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace betajacobi {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value);
  explicit Rational(mpq_class&& value);

  // Accepts "p" or "p/q" with an optional leading '-' and base-10 digits only.
  // Throws std::invalid_argument on anything else, including q == 0.
  static Rational parse(std::string_view text);

  // Exact value of an IEEE double.
  static Rational from_double(double value);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const { return value_.get_d(); }
  // "p" or "p/q".
  std::string to_string() const;

 private:
  mpq_class value_;
};

Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);
// Generalized binomial coefficient binom(top, k) for rational top.
Rational binomial(const Rational& top, unsigned k);
Rational factorial(unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace betajacobi
