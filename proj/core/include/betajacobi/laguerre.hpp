#pragma once

// Laguerre polynomials L_n^(alpha): evaluation, derivatives through the
// index-shift identity, certified zeros, and the reduction of shifted
// polynomials L_{n-j}^(alpha+j) onto the basis {L_n^(alpha), L_{n-1}^(alpha)}.

#include <utility>
#include <vector>

#include "betajacobi/dense_poly.hpp"
#include "betajacobi/multipoly.hpp"
#include "betajacobi/rational.hpp"
#include "betajacobi/real.hpp"
#include "betajacobi/scalar.hpp"

namespace betajacobi {

struct LaguerreParams {
  int n = 0;
  Rational alpha;

  // Throws std::invalid_argument unless n >= 0 and alpha > -1.
  void validate() const;
};

// L_n^(alpha)(x) by the upward three-term recurrence
//   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
// A negative degree evaluates to zero.
template <class Scalar>
Scalar laguerre_eval(int n, const Rational& alpha, const Scalar& x) {
  if (n < 0) return lift(0L, x);
  const Scalar one = lift(1L, x);
  if (n == 0) return one;
  const Scalar a = lift(alpha, x);
  Scalar prev = one;
  Scalar curr = a + one - x;
  for (int k = 1; k < n; ++k) {
    const Scalar kk = lift(static_cast<long>(k), x);
    Scalar next = ((lift(static_cast<long>(2 * k + 1), x) + a - x) * curr - (kk + a) * prev) /
                  lift(static_cast<long>(k + 1), x);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

template <class Scalar>
Scalar laguerre_eval(const LaguerreParams& params, const Scalar& x) {
  return laguerre_eval(params.n, params.alpha, x);
}

// j-th derivative: d^j/dx^j L_n^(alpha)(x) = (-1)^j L_{n-j}^(alpha+j)(x);
// zero when j > n.
template <class Scalar>
Scalar laguerre_derivative(const LaguerreParams& params, const Scalar& x, int j) {
  if (j > params.n) return lift(0L, x);
  Scalar v = laguerre_eval(params.n - j, params.alpha + Rational(j), x);
  return (j % 2 == 0) ? v : lift(0L, x) - v;
}

// Explicit power-basis coefficients of L_n^(alpha)(x).
DensePoly laguerre_polynomial(const LaguerreParams& params);

// Cleared-denominator basis reduction: with p_j = x^j P_j and q_j = x^j Q_j,
//   x^j L_{n-j}^(alpha+j)(x) = p_j L_n^(alpha)(x) + q_j L_{n-1}^(alpha)(x).
// The pair is symbolic in {x, n, a}.
struct BasisPair {
  MultiPoly p;
  MultiPoly q;
};

// p_j, q_j for j = 0..jmax via p_{j+1} = (a+j-x) p_j + (j-n-1) x p_{j-1}.
std::vector<BasisPair> basis_reduction_table(int jmax);

// Single entry; throws std::out_of_range unless 0 <= j <= params.n.
BasisPair reduce_to_basis(const LaguerreParams& params, int j);

// Table specialized to numeric (n, alpha): polynomials in x only.
struct DenseBasisPair {
  DensePoly p;
  DensePoly q;
};
std::vector<DenseBasisPair> basis_reduction_numeric(const LaguerreParams& params, int jmax);

struct LaguerreZeroSet {
  LaguerreParams params;
  int digits = 32;
  // Increasing: zeros[0] < zeros[1] < ... ; at least `digits` correct digits.
  std::vector<Real> zeros;
  // Rational brackets with an exact sign change of L_n^(alpha).
  std::vector<std::pair<Rational, Rational>> brackets;
};

// All zeros of L_n^(alpha), n >= 1, digits >= 16. Seeds come from the
// eigenvalues of the symmetric tridiagonal Jacobi matrix, are polished by
// Newton iteration in extended precision and then certified.
// Throws std::runtime_error if certification fails.
LaguerreZeroSet laguerre_zeros(const LaguerreParams& params, int digits = 32);

}  // namespace betajacobi
