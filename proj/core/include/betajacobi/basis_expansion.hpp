#pragma once

// Machinery shared by both large-parameter expansions: turning tables of
// s-coefficients into the two-term Laguerre representation
//   W(x) = L_n^(alpha)(x) A(x, t) + L_{n-1}^(alpha)(x) B(x, t),
//   A = sum_k a_k(x) t^k,  B = sum_k b_k(x) t^k.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betajacobi/dense_poly.hpp"
#include "betajacobi/laguerre.hpp"
#include "betajacobi/multipoly.hpp"
#include "betajacobi/rational.hpp"
#include "betajacobi/scalar.hpp"

namespace betajacobi {

// Coefficient tables of the two-term representation for numeric (n, alpha).
// first[k] multiplies L_n^(alpha), second[k] multiplies L_{n-1}^(alpha).
struct TwoTermTable {
  int order = 0;
  int n = 0;
  Rational alpha;
  std::vector<DensePoly> first;
  std::vector<DensePoly> second;
};

// s_coefficients[k][j] is the coefficient of s^j in the k-th expansion
// coefficient, a polynomial in {x, n}. Assembles
//   first_k = sum_{j<=min(n,2k)} s_coefficients[k][j] p_j / x^j,
//   second_k = same with q_j,
// over the common denominator x^min(n,2k). Throws std::logic_error if the
// division by the x power leaves a remainder.
TwoTermTable assemble_two_term(const std::vector<std::vector<MultiPoly>>& s_coefficients, int n,
                               const Rational& alpha);

// Generic-n form of the same assembly: sums over all j <= 2k and keeps n and
// alpha (symbol a) symbolic. Entry k is (first_k, second_k) in {x, n, a}.
std::vector<std::pair<MultiPoly, MultiPoly>> assemble_two_term_symbolic(
    const std::vector<std::vector<MultiPoly>>& s_coefficients);

// sum_{j<=min(n,2k)} coefficient_j(n, x) L_{n-j}^(alpha+j)(x).
template <class Scalar>
Scalar laguerre_combination(const std::vector<MultiPoly>& s_coefficients, const LaguerreParams& params,
                            const Scalar& x) {
  Scalar total = lift(0L, x);
  const int top = std::min<int>(params.n, static_cast<int>(s_coefficients.size()) - 1);
  for (int j = 0; j <= top; ++j) {
    const MultiPoly& c = s_coefficients[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    const DensePoly cx = DensePoly::from_multipoly(c.substitute(Symbol::n, Rational(params.n)), Symbol::x);
    total = total + cx.evaluate(x) * laguerre_eval(params.n - j, params.alpha + Rational(j), x);
  }
  return total;
}

// Asymptotic use requires 0 <= x < scale (beta or b); `allow_outside` lifts the check
// for the exact full sum (kmax = n), which is a polynomial identity.
template <class Scalar>
void check_argument_range(const Rational& scale, const Scalar& x, bool allow_outside, const char* what) {
  if (allow_outside) return;
  if (x < lift(0L, x) || !(x < lift(scale, x))) {
    throw std::domain_error(std::string(what) + ": asymptotic use needs 0 <= x < " + scale.to_string());
  }
}

// L_n A + L_{n-1} B truncated at kmax, with t = inverse_parameter; the sums
// over k are done by Horner's rule in t.
template <class Scalar>
Scalar eval_two_term(const TwoTermTable& table, const Scalar& inverse_parameter, const Scalar& x, int kmax) {
  if (kmax < 0 || kmax > table.order) {
    throw std::out_of_range("expansion truncation " + std::to_string(kmax) + " outside prepared 0.." +
                            std::to_string(table.order));
  }
  Scalar first = lift(0L, x);
  Scalar second = lift(0L, x);
  for (int k = kmax; k >= 0; --k) {
    first = first * inverse_parameter + table.first[static_cast<std::size_t>(k)].evaluate(x);
    second = second * inverse_parameter + table.second[static_cast<std::size_t>(k)].evaluate(x);
  }
  const Scalar ln = laguerre_eval(table.n, table.alpha, x);
  const Scalar ln1 = laguerre_eval(table.n - 1, table.alpha, x);
  return ln * first + ln1 * second;
}

}  // namespace betajacobi
