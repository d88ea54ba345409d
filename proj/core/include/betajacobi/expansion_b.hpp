#pragma once

// The alternative expansion in b = beta + n.
//
// Exact finite form, with xi = x / (b - x):
//   P_n^(alpha,beta)(1 - 2x/b) = (1 - x/b)^n sum_{k=0}^n xi^k a_k(b,x) L_{n-k}^(alpha+k)(x),
//   (1 - xi s)^b = e^(-xs) sum_k a_k(b,x) (xi s)^k.
//
// Asymptotic form in 1/b:
//   (1 - x s/(b - x))^b = e^(-xs) sum_k d_k(x;s) / b^k,
//   P_n^(alpha,beta)(1 - 2x/b) = (1 - x/b)^n [L_n^(alpha)(x) Y + L_{n-1}^(alpha)(x) Z],
// with Y = sum_k y_k / b^k and Z = sum_k z_k / b^k.

#include <optional>
#include <vector>

#include "betajacobi/basis_expansion.hpp"
#include "betajacobi/jacobi_oracle.hpp"
#include "betajacobi/laguerre.hpp"
#include "betajacobi/multipoly.hpp"
#include "betajacobi/rational.hpp"

namespace betajacobi {

struct AKTable {
  int order = 0;
  // a_k(b, x), polynomials in {b, x}.
  std::vector<MultiPoly> a;
};

// Throws std::out_of_range if order exceeds max_supported_order().
AKTable generate_ak(int order);

// a_0..a_order with no order cap; when `b` is given it is substituted before
// the series work, leaving polynomials in x only.
std::vector<MultiPoly> ak_coefficients(int order, const std::optional<Rational>& b = std::nullopt);

struct DKTable {
  int order = 0;
  // d_k(x; s), polynomials in {s, x}.
  std::vector<MultiPoly> d;
  // by_power[k][j] = d_{jk}.
  std::vector<std::vector<MultiPoly>> by_power;

  const MultiPoly& coefficient(int j, int k) const;
};

DKTable generate_dk(int order);

// sum_k a_k (xi s)^k re-expanded in powers of 1/b up to `order`; must agree
// with d_0..d_order. Uses a_k up to 2*order.
std::vector<MultiPoly> reexpand_ak_in_inverse_b(int order);

// y_k (first) and z_k (second) for numeric (n, alpha); n >= 1.
using YZTable = TwoTermTable;
YZTable compute_yz(const DKTable& dk, int n, const Rational& alpha);

template <class Scalar>
Scalar compute_psi(const DKTable& dk, int k, const LaguerreParams& params, const Scalar& x) {
  return laguerre_combination(dk.by_power.at(static_cast<std::size_t>(k)), params, x);
}

// Exact value of P_n^(alpha,beta)(1 - 2x/b) from the finite a_k form.
// Throws std::domain_error if x == b.
template <class Scalar>
Scalar eval_finite_b(const JacobiParams& params, const Scalar& x) {
  params.validate();
  const Rational b = params.b();
  const Scalar bs = lift(b, x);
  if (x == bs) throw std::domain_error("eval_finite_b: x equals b, xi is undefined");
  const Scalar one = lift(1L, x);
  const Scalar xi = x / (bs - x);
  const auto a = ak_coefficients(params.n, b);
  Scalar total = lift(0L, x);
  Scalar xi_power = one;
  for (int k = 0; k <= params.n; ++k) {
    const DensePoly ak = DensePoly::from_multipoly(a[static_cast<std::size_t>(k)], Symbol::x);
    total = total + xi_power * ak.evaluate(x) * laguerre_eval(params.n - k, params.alpha + Rational(k), x);
    xi_power = xi_power * xi;
  }
  Scalar prefactor = one;
  const Scalar ratio = one - x / bs;
  for (int i = 0; i < params.n; ++i) prefactor = prefactor * ratio;
  return prefactor * total;
}

// (1 - x/b)^n [L_n Y + L_{n-1} Z] truncated at kmax, approximating
// P_n^(alpha,beta)(1 - 2x/b) with b = beta + n.
template <class Scalar>
Scalar eval_expansion_b(const YZTable& yz, const Rational& beta, const Scalar& x, int kmax, bool allow_outside = false) {
  if (!(beta > Rational(-1))) throw std::invalid_argument("eval_expansion_b: beta must exceed -1");
  const Rational b = beta + Rational(yz.n);
  check_argument_range(b, x, allow_outside, "eval_expansion_b");
  const Scalar one = lift(1L, x);
  const Scalar ratio = one - x / lift(b, x);
  Scalar prefactor = one;
  for (int i = 0; i < yz.n; ++i) prefactor = prefactor * ratio;
  return prefactor * eval_two_term(yz, lift(Rational(1) / b, x), x, kmax);
}

}  // namespace betajacobi
