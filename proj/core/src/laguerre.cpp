#include "betajacobi/laguerre.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

#include "root_polish.hpp"

namespace betajacobi {

void LaguerreParams::validate() const {
  if (n < 0) throw std::invalid_argument("Laguerre degree must be nonnegative, got " + std::to_string(n));
  if (!(alpha > Rational(-1))) throw std::invalid_argument("Laguerre alpha must exceed -1, got " + alpha.to_string());
}

DensePoly laguerre_polynomial(const LaguerreParams& params) {
  // L_n^(alpha)(x) = sum_i (-1)^i binom(n+alpha, n-i) x^i / i!
  std::vector<Rational> c;
  const Rational top = Rational(params.n) + params.alpha;
  for (int i = 0; i <= params.n; ++i) {
    Rational term = binomial(top, static_cast<unsigned>(params.n - i)) / factorial(static_cast<unsigned>(i));
    c.push_back(i % 2 == 0 ? term : -term);
  }
  return DensePoly(std::move(c));
}

std::vector<BasisPair> basis_reduction_table(int jmax) {
  if (jmax < 0) throw std::out_of_range("basis_reduction_table: negative jmax");
  const MultiPoly& x = sym_x();
  const MultiPoly& n = sym_n();
  const MultiPoly& a = sym_a();
  std::vector<BasisPair> table;
  table.push_back({MultiPoly(1), MultiPoly()});
  if (jmax >= 1) table.push_back({-n, n + a});
  for (int j = 1; j < jmax; ++j) {
    const MultiPoly lead = a + MultiPoly(j) - x;
    const MultiPoly back = (MultiPoly(j - 1) - n) * x;
    const BasisPair& cur = table[static_cast<std::size_t>(j)];
    const BasisPair& prev = table[static_cast<std::size_t>(j - 1)];
    table.push_back({lead * cur.p + back * prev.p, lead * cur.q + back * prev.q});
  }
  return table;
}

BasisPair reduce_to_basis(const LaguerreParams& params, int j) {
  params.validate();
  if (j < 0 || j > params.n) {
    throw std::out_of_range("reduce_to_basis: j=" + std::to_string(j) + " outside 0.." + std::to_string(params.n));
  }
  return basis_reduction_table(j).back();
}

std::vector<DenseBasisPair> basis_reduction_numeric(const LaguerreParams& params, int jmax) {
  params.validate();
  std::vector<DenseBasisPair> out;
  for (const auto& [p, q] : basis_reduction_table(jmax)) {
    const auto specialize = [&](const MultiPoly& poly) {
      return DensePoly::from_multipoly(poly.substitute(Symbol::n, Rational(params.n)).substitute(Symbol::a, params.alpha),
                                       Symbol::x);
    };
    out.push_back({specialize(p), specialize(q)});
  }
  return out;
}

LaguerreZeroSet laguerre_zeros(const LaguerreParams& params, int digits) {
  params.validate();
  if (params.n < 1) throw std::invalid_argument("laguerre_zeros: degree must be at least 1");
  if (digits < 16) throw std::invalid_argument("laguerre_zeros: at least 16 digits required");

  const int n = params.n;
  const double alpha = params.alpha.to_double();
  Eigen::VectorXd diagonal(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diagonal(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(i * (i + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("laguerre_zeros: tridiagonal eigensolver failed");
  std::vector<double> seeds(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  const LaguerreParams shifted{params.n - 1, params.alpha + Rational(1)};
  auto value_and_slope = [&](const Real& x) {
    return std::pair<Real, Real>(laguerre_eval(params, x), -laguerre_eval(shifted, x));
  };
  auto exact_sign = [&](const Rational& x) { return laguerre_eval(params, x).sign(); };
  auto polished = detail::polish_and_certify(seeds, value_and_slope, exact_sign, digits);

  LaguerreZeroSet out;
  out.params = params;
  out.digits = digits;
  out.zeros = std::move(polished.roots);
  out.brackets = std::move(polished.brackets);
  return out;
}

}  // namespace betajacobi
