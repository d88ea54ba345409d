#pragma once

// Dense univariate polynomial over Rational; coefficient i multiplies x^i.
// Used for the per-(n, alpha) coefficient tables u_k, v_k, y_k, z_k.

#include <string>
#include <vector>

#include "betajacobi/multipoly.hpp"
#include "betajacobi/rational.hpp"
#include "betajacobi/scalar.hpp"

namespace betajacobi {

class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coefficients);

  // Throws std::invalid_argument if `p` depends on any symbol besides `var`.
  static DensePoly from_multipoly(const MultiPoly& p, Symbol var);
  MultiPoly to_multipoly(Symbol var) const;

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Rational operator[](std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : Rational(0); }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

  template <class Scalar>
  Scalar evaluate(const Scalar& x) const {
    Scalar acc = lift(0L, x);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = acc * x + lift(*it, x);
    }
    return acc;
  }

  // Coefficients t_m of p(x0 + e) = sum_m t_m e^m, for m = 0..count-1.
  template <class Scalar>
  std::vector<Scalar> taylor_at(const Scalar& x0, std::size_t count) const {
    // Repeated synthetic division by (x - x0).
    std::vector<Scalar> work;
    work.reserve(coefficients_.size());
    for (const auto& c : coefficients_) work.push_back(lift(c, x0));
    std::vector<Scalar> result(count, lift(0L, x0));
    const std::size_t deg = work.size();
    for (std::size_t m = 0; m < count && m < deg; ++m) {
      for (std::size_t i = deg - 1; i > m; --i) work[i - 1] = work[i - 1] + work[i] * x0;
      result[m] = work[m];
    }
    return result;
  }

  std::string to_string() const { return to_multipoly(Symbol::x).to_string(); }

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

}  // namespace betajacobi
