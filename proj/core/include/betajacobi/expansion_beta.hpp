#pragma once

// Expansion of P_n^(alpha,beta)(1 - 2x/beta) in inverse powers of beta:
//
//   (1 - x/beta)^n (1 - x s/(beta - x))^(n+beta) = e^(-xs) sum_k c_k(n,x;s) / beta^k,
//   P_n^(alpha,beta)(1 - 2x/beta) = sum_k Phi_k(n,alpha,x) / beta^k
//                                  = L_n^(alpha)(x) U + L_{n-1}^(alpha)(x) V,
//
// with U = sum_k u_k / beta^k and V = sum_k v_k / beta^k.

#include <vector>

#include "betajacobi/basis_expansion.hpp"
#include "betajacobi/jacobi_oracle.hpp"
#include "betajacobi/laguerre.hpp"
#include "betajacobi/multipoly.hpp"
#include "betajacobi/rational.hpp"

namespace betajacobi {

struct CKTable {
  int order = 0;
  // c_k(n, x; s), polynomials in {s, x, n}.
  std::vector<MultiPoly> c;
  // by_power[k][j] = c_{jk}, the coefficient of s^j in c_k (in {x, n}).
  std::vector<std::vector<MultiPoly>> by_power;

  const MultiPoly& coefficient(int j, int k) const;
};

// Symbolic c_0..c_order from series log/exp in 1/beta.
// Throws std::out_of_range if order exceeds max_supported_order().
CKTable generate_ck(int order);

// u_k (first) and v_k (second) for numeric (n, alpha); n >= 1.
using UVTable = TwoTermTable;
UVTable compute_uv(const CKTable& ck, int n, const Rational& alpha);

template <class Scalar>
Scalar compute_phi(const CKTable& ck, int k, const LaguerreParams& params, const Scalar& x) {
  return laguerre_combination(ck.by_power.at(static_cast<std::size_t>(k)), params, x);
}

// sum_{k<=kmax} Phi_k / beta^k.
template <class Scalar>
Scalar eval_phi_sum(const CKTable& ck, const JacobiParams& params, const Scalar& x, int kmax) {
  if (kmax < 0 || kmax > ck.order) throw std::out_of_range("eval_phi_sum: kmax outside prepared order");
  const LaguerreParams lp{params.n, params.alpha};
  const Scalar t = lift(Rational(1) / params.beta, x);
  Scalar total = lift(0L, x);
  for (int k = kmax; k >= 0; --k) total = total * t + compute_phi(ck, k, lp, x);
  return total;
}

// L_n U + L_{n-1} V truncated at kmax, approximating P_n^(alpha,beta)(1 - 2x/beta).
template <class Scalar>
Scalar eval_expansion_beta(const UVTable& uv, const Rational& beta, const Scalar& x, int kmax,
                           bool allow_outside = false) {
  if (!(beta > Rational(-1))) throw std::invalid_argument("eval_expansion_beta: beta must exceed -1");
  check_argument_range(beta, x, allow_outside, "eval_expansion_beta");
  return eval_two_term(uv, lift(Rational(1) / beta, x), x, kmax);
}

}  // namespace betajacobi
