#pragma once

// Truncated formal power series in a single small parameter t.
//
// Coefficients are any ring type with value-initialized zero (MultiPoly,
// Rational, Real). exp and log additionally need scaling by a Rational.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betajacobi/rational.hpp"

namespace betajacobi {

enum class SeriesParameter {
  inv_beta,  // t = 1/beta
  inv_b,     // t = 1/b, b = beta + n
  shift,     // zero shift (epsilon or delta)
  xi_s,      // t = xi * s, used for the a_k coefficients
};

const char* series_parameter_name(SeriesParameter p);

template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries(SeriesParameter parameter, int order) : parameter_(parameter), coefficients_(checked(order) + 1) {}

  TruncatedSeries(SeriesParameter parameter, int order, std::vector<C> coefficients)
      : parameter_(parameter), coefficients_(std::move(coefficients)) {
    coefficients_.resize(static_cast<std::size_t>(checked(order)) + 1);
  }

  static TruncatedSeries constant(SeriesParameter parameter, int order, C value) {
    TruncatedSeries result(parameter, order);
    result.coefficients_[0] = std::move(value);
    return result;
  }

  // The parameter t itself (requires order >= 1 to be visible).
  static TruncatedSeries variable(SeriesParameter parameter, int order, C one) {
    TruncatedSeries result(parameter, order);
    if (order >= 1) result.coefficients_[1] = std::move(one);
    return result;
  }

  SeriesParameter parameter() const { return parameter_; }
  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<C>& coefficients() const { return coefficients_; }
  const C& operator[](std::size_t k) const { return coefficients_.at(k); }
  C& operator[](std::size_t k) { return coefficients_.at(k); }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
    combine(rhs);
    for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
    combine(rhs);
    for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] -= rhs.coefficients_[k];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }

  // Cauchy product truncated at min(order lhs, order rhs).
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    lhs.require_same_parameter(rhs);
    const int order = std::min(lhs.order(), rhs.order());
    TruncatedSeries result(lhs.parameter_, order);
    for (int i = 0; i <= order; ++i) {
      if (is_zero_coefficient(lhs.coefficients_[i])) continue;
      for (int j = 0; i + j <= order; ++j) {
        result.coefficients_[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
      }
    }
    return result;
  }

  // Multiplies every coefficient by `factor` (a C or anything C * F accepts).
  template <class F>
  TruncatedSeries scaled(const F& factor) const {
    TruncatedSeries result(*this);
    for (auto& c : result.coefficients_) c = c * factor;
    return result;
  }

  // Multiplies by t^k, dropping what falls past the order.
  TruncatedSeries shifted_up(int k) const {
    TruncatedSeries result(parameter_, order());
    for (int i = 0; i + k <= order(); ++i) result.coefficients_[i + k] = coefficients_[i];
    return result;
  }

  // Divides by t^k; the low k coefficients must vanish. The order drops by k.
  TruncatedSeries shifted_down(int k) const {
    for (int i = 0; i < k && i <= order(); ++i) {
      if (!is_zero_coefficient(coefficients_[i])) {
        throw std::domain_error("TruncatedSeries: shifted_down needs vanishing low coefficients");
      }
    }
    TruncatedSeries result(parameter_, order() - k);
    for (int i = k; i <= order(); ++i) result.coefficients_[i - k] = coefficients_[i];
    return result;
  }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries result(*this);
    result.coefficients_.resize(static_cast<std::size_t>(checked(std::min(order, this->order()))) + 1);
    return result;
  }

  TruncatedSeries pow(unsigned exponent) const {
    TruncatedSeries result = constant(parameter_, order(), unit());
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
  }

  friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return lhs.parameter_ == rhs.parameter_ && lhs.coefficients_ == rhs.coefficients_;
  }

 private:
  static int checked(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    return order;
  }

  template <class T>
  static bool is_zero_coefficient(const T& c) {
    return c.is_zero();
  }

  static C unit() { return C(Rational(1)); }

  void require_same_parameter(const TruncatedSeries& rhs) const {
    if (parameter_ != rhs.parameter_) {
      throw std::logic_error(std::string("TruncatedSeries: parameter mismatch (") + series_parameter_name(parameter_) +
                             " vs " + series_parameter_name(rhs.parameter_) + ")");
    }
  }

  void combine(const TruncatedSeries& rhs) {
    require_same_parameter(rhs);
    if (rhs.order() < order()) coefficients_.resize(rhs.coefficients_.size());
  }

  SeriesParameter parameter_;
  std::vector<C> coefficients_;
};

// exp(f) for f with vanishing constant term, via n g_n = sum_{k=1}^n k f_k g_{n-k}.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& f) {
  if (!f[0].is_zero()) throw std::domain_error("series_exp: constant term must be 0");
  const int order = f.order();
  TruncatedSeries<C> g(f.parameter(), order);
  g[0] = C(Rational(1));
  for (int n = 1; n <= order; ++n) {
    C acc{};
    for (int k = 1; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      acc += f[k] * g[n - k] * Rational(k);
    }
    g[n] = acc * Rational(1, n);
  }
  return g;
}

// log(f) for f with constant term 1, via n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
template <class C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& f) {
  if (!(f[0] == C(Rational(1)))) throw std::domain_error("series_log: constant term must be 1");
  const int order = f.order();
  TruncatedSeries<C> g(f.parameter(), order);
  for (int n = 1; n <= order; ++n) {
    C acc = f[n] * Rational(n);
    for (int k = 1; k < n; ++k) {
      if (g[k].is_zero()) continue;
      acc -= g[k] * f[n - k] * Rational(k);
    }
    g[n] = acc * Rational(1, n);
  }
  return g;
}

// 1/f for f with constant term 1.
template <class C>
TruncatedSeries<C> series_inverse_unit(const TruncatedSeries<C>& f) {
  if (!(f[0] == C(Rational(1)))) throw std::domain_error("series_inverse_unit: constant term must be 1");
  const int order = f.order();
  TruncatedSeries<C> g(f.parameter(), order);
  g[0] = C(Rational(1));
  for (int n = 1; n <= order; ++n) {
    C acc{};
    for (int k = 1; k <= n; ++k) acc -= f[k] * g[n - k];
    g[n] = acc;
  }
  return g;
}

}  // namespace betajacobi
