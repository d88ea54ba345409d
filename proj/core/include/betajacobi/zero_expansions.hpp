#pragma once

// Large-beta approximations of the zeros of P_n^(alpha,beta).
//
// Zeros are indexed as z_1 < ... < z_n. In the Laguerre variable the k-th
// zero is x_k = ell_{n-k+1} + shift, where ell_1 < ... < ell_n are the zeros of
// L_n^(alpha) and the shift is a series
//   epsilon = sum_j epsilon_j / beta^j,  z = 1 - 2x/beta   (method epsilon), or
//   delta   = sum_j delta_j / b^j,       z = 1 - 2x/b      (method delta), b = beta + n.
// The shift coefficients solve W(ell + shift) = 0 order by order, where W is
// the two-term Laguerre representation of the matching expansion.

#include <string>
#include <vector>

#include "betajacobi/basis_expansion.hpp"
#include "betajacobi/config.hpp"
#include "betajacobi/jacobi_oracle.hpp"
#include "betajacobi/laguerre.hpp"
#include "betajacobi/multipoly.hpp"
#include "betajacobi/rational.hpp"
#include "betajacobi/real.hpp"
#include "betajacobi/scalar.hpp"

namespace betajacobi {

enum class ZeroMethod { epsilon, delta };

const char* zero_method_name(ZeroMethod method);

// The closed forms of the first three shift coefficients, as polynomials in
// {x, n, a} where x stands for the Laguerre zero.
MultiPoly printed_epsilon_poly(int j);
MultiPoly printed_delta_poly(int j);

// Evaluation of the closed forms; j must be 1, 2 or 3 (std::out_of_range
// otherwise, higher orders come from generate_zero_coeffs).
Rational printed_epsilon(int j, int n, const Rational& alpha, const Rational& x);
Rational printed_delta(int j, int n, const Rational& alpha, const Rational& x);

template <class Scalar>
Scalar evaluate_in_xna(const MultiPoly& p, int n, const Rational& alpha, const Scalar& x) {
  const MultiPoly specialized = p.substitute(Symbol::n, Rational(n)).substitute(Symbol::a, alpha);
  return DensePoly::from_multipoly(specialized, Symbol::x).evaluate(x);
}

// Generic-n shift coefficients 1..order, exact polynomials in {x, n, a}.
// Derived by solving W(x + x*eta) / L_{n-1}(x) = 0 at a zero x of L_n, where
// every Taylor coefficient of L_n and L_{n-1} reduces to a polynomial over x^m.
std::vector<MultiPoly> symbolic_zero_coefficients(ZeroMethod method, int order);

struct ZeroExpansionCoeffs {
  ZeroMethod method = ZeroMethod::delta;
  Real base;                 // ell_{n-k+1}
  std::vector<Real> terms;   // terms[j-1] = epsilon_j or delta_j
  int order() const { return static_cast<int>(terms.size()); }
};

// Per-point numeric solution of the shift equation at a zero `ell` of
// L_n^(alpha), using the two-term table of the matching expansion
// (u/v for epsilon, y/z for delta). Throws std::domain_error
// ("degenerate base point") if the linear pivot L_n'(ell) is negligible.
ZeroExpansionCoeffs generate_zero_coeffs(ZeroMethod method, const TwoTermTable& table, const Real& ell, int order,
                                         int digits = kDefaultWorkingDigits);

struct ZeroApprox {
  int index = 0;  // k, with z_1 < ... < z_n
  ZeroMethod method = ZeroMethod::delta;
  int terms = 0;
  Real base;  // ell_{n-k+1}
  Real x;     // x_k
  Real z;     // mapped Jacobi zero
};

// Precomputed state for one (n, alpha, method): coefficient table, Laguerre
// zeros, and the shift coefficients at every base point. Immutable after
// construction; `approximate` is const and may be called concurrently.
class ZeroExpansion {
 public:
  ZeroExpansion(int n, const Rational& alpha, ZeroMethod method, int order, int digits = kDefaultWorkingDigits);

  int n() const { return n_; }
  const Rational& alpha() const { return alpha_; }
  ZeroMethod method() const { return method_; }
  int order() const { return order_; }
  int digits() const { return digits_; }
  const LaguerreZeroSet& laguerre() const { return laguerre_; }
  const TwoTermTable& table() const { return table_; }
  // Coefficients for the zero z_k (1-based).
  const ZeroExpansionCoeffs& coefficients(int k) const;

  // x_k and z_k using `terms` shift coefficients (0 <= terms <= order).
  ZeroApprox approximate(const Rational& beta, int k, int terms) const;
  // All n approximations ordered by z ascending.
  std::vector<ZeroApprox> all(const Rational& beta, int terms) const;

 private:
  int n_;
  Rational alpha_;
  ZeroMethod method_;
  int order_;
  int digits_;
  LaguerreZeroSet laguerre_;
  TwoTermTable table_;
  std::vector<ZeroExpansionCoeffs> coefficients_;  // indexed by k - 1
};

ZeroApprox jacobi_zero_approx(const JacobiParams& params, int k, ZeroMethod method, int terms,
                              int digits = kDefaultWorkingDigits);
std::vector<ZeroApprox> all_zeros(const JacobiParams& params, ZeroMethod method, int terms,
                                  int digits = kDefaultWorkingDigits);

}  // namespace betajacobi
