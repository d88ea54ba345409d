#include "betajacobi/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace betajacobi {

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Real::Real() : Real(static_cast<mpfr_prec_t>(53)) { mpfr_set_zero(value_, 1); }

Real::Real(mpfr_prec_t bits) { mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN)); }

Real::Real(double value, mpfr_prec_t bits) : Real(bits) { mpfr_set_d(value_, value, MPFR_RNDN); }

Real::Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const Rational& value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_q(value_, value.get().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) : Real(other.precision()) { mpfr_set(value_, other.value_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(other.precision()) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {

// Widens the target so the result keeps the better of the two precisions.
void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Real: division by zero");
  widen(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real result(*this);
  mpfr_neg(result.value_, result.value_, MPFR_RNDN);
  return result;
}

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_) != 0) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  return c < 0 ? std::partial_ordering::less : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Rational Real::to_rational() const {
  if (mpfr_number_p(value_) == 0) throw std::domain_error("Real: non-finite value has no rational form");
  if (is_zero()) return Rational(0);
  mpz_class mantissa;
  const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  mpq_class q(mantissa);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return Rational(std::move(q));
}

std::string Real::to_string(int significant) const {
  if (significant < 1) significant = 1;
  const std::string format = "%." + std::to_string(significant - 1) + "Re";
  const int size = mpfr_snprintf(nullptr, 0, format.c_str(), value_);
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), format.c_str(), value_);
  return std::string(buffer.data(), static_cast<std::size_t>(size));
}

double Real::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  Real tmp(*this);
  mpfr_abs(tmp.value_, tmp.value_, MPFR_RNDN);
  mpfr_log10(tmp.value_, tmp.value_, MPFR_RNDN);
  return tmp.to_double();
}

Real abs(const Real& v) { return v.sign() < 0 ? -v : v; }

Real sqrt(const Real& v) {
  Real result(v);
  mpfr_sqrt(result.get(), v.get(), MPFR_RNDN);
  return result;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pow10(long exponent, mpfr_prec_t bits) {
  Real result(1L, bits);
  mpfr_ui_pow_ui(result.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(result.get(), 1, result.get(), MPFR_RNDN);
  return result;
}

std::ostream& operator<<(std::ostream& os, const Real& v) { return os << v.to_string(static_cast<int>(os.precision())); }

}  // namespace betajacobi
