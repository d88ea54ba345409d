#pragma once

// Ground truth for Jacobi polynomials: exact rational values and certified
// zeros. Every relative error reported by the project is measured against
// these.

#include <utility>
#include <vector>

#include "betajacobi/rational.hpp"
#include "betajacobi/real.hpp"
#include "betajacobi/scalar.hpp"

namespace betajacobi {

struct JacobiParams {
  int n = 0;
  Rational alpha;
  Rational beta;

  // Throws std::invalid_argument unless n >= 0, alpha > -1, beta > -1.
  void validate() const;
  // b = beta + n, the parameter of the alternative expansion.
  Rational b() const { return beta + Rational(n); }
};

// P_n^(alpha,beta)(z) by the standard three-term recurrence
//   2(k+1)(k+c+1)(2k+c) P_{k+1}
//     = (2k+c+1)[(2k+c+2)(2k+c) z + alpha^2 - beta^2] P_k
//       - 2(k+alpha)(k+beta)(2k+c+2) P_{k-1},      c = alpha + beta,
// started from P_0 = 1, P_1 = (alpha+1) + (c+2)(z-1)/2.
template <class Scalar>
Scalar jacobi_eval(int n, const Rational& alpha, const Rational& beta, const Scalar& z) {
  const Scalar one = lift(1L, z);
  if (n < 0) return lift(0L, z);
  if (n == 0) return one;
  const Rational c = alpha + beta;
  Scalar prev = one;
  Scalar curr = lift(alpha + Rational(1), z) + lift((c + Rational(2)) / Rational(2), z) * (z - one);
  for (int k = 1; k < n; ++k) {
    const Rational kk(k);
    const Rational two_k_c = Rational(2) * kk + c;
    const Rational denom = Rational(2) * (kk + Rational(1)) * (kk + c + Rational(1)) * two_k_c;
    const Rational lin = (two_k_c + Rational(1)) * (two_k_c + Rational(2)) * two_k_c / denom;
    const Rational cst = (two_k_c + Rational(1)) * (alpha * alpha - beta * beta) / denom;
    const Rational back = Rational(2) * (kk + alpha) * (kk + beta) * (two_k_c + Rational(2)) / denom;
    Scalar next = (lift(lin, z) * z + lift(cst, z)) * curr - lift(back, z) * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

// Exact P_n^(alpha,beta)(z) for rational z.
Rational oracle_eval(const JacobiParams& params, const Rational& z);

struct CertifiedZero {
  int index = 0;  // 1-based, z_1 < z_2 < ... < z_n
  Rational lo;
  Rational hi;
  Real midpoint;
};

// All n zeros in (-1, 1) with exact sign-change brackets of width at most
// 10^(1-digits). Throws std::runtime_error if certification fails.
std::vector<CertifiedZero> oracle_zeros(const JacobiParams& params, int digits = 16);

struct SymmetryImage {
  JacobiParams params;
  Rational z;
  int sign = 1;
};

// P_n^(alpha,beta)(z) = sign * P_n^(beta,alpha)(-z), sign = (-1)^n.
SymmetryImage symmetry_map(const JacobiParams& params, const Rational& z);

// |approx - exact| / |exact| at the given decimal precision.
// Throws std::domain_error if exact is zero.
Real relative_error(const Real& approx, const Rational& exact, int digits);
Rational relative_error_exact(const Rational& approx, const Rational& exact);

}  // namespace betajacobi
