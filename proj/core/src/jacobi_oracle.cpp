#include "betajacobi/jacobi_oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

#include "root_polish.hpp"

namespace betajacobi {

void JacobiParams::validate() const {
  if (n < 0) throw std::invalid_argument("Jacobi degree must be nonnegative, got " + std::to_string(n));
  if (!(alpha > Rational(-1))) throw std::invalid_argument("Jacobi alpha must exceed -1, got " + alpha.to_string());
  if (!(beta > Rational(-1))) throw std::invalid_argument("Jacobi beta must exceed -1, got " + beta.to_string());
}

Rational oracle_eval(const JacobiParams& params, const Rational& z) {
  params.validate();
  return jacobi_eval(params.n, params.alpha, params.beta, z);
}

namespace {

// Eigenvalues of the symmetric Jacobi matrix of the monic recurrence.
std::vector<double> golub_welsch_seeds(const JacobiParams& params) {
  const int n = params.n;
  const double a = params.alpha.to_double();
  const double b = params.beta.to_double();
  const double c = a + b;
  Eigen::VectorXd diagonal(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * k + c;
    diagonal(k) = (k == 0) ? (b - a) / (c + 2.0) : (b * b - a * a) / (t * (t + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + c;
    const double sq = (k == 1) ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + c) * (2.0 + c) * (3.0 + c))
                               : 4.0 * k * (k + a) * (k + b) * (k + c) / (t * t * (t + 1.0) * (t - 1.0));
    off(k - 1) = std::sqrt(sq);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return {};
  return {solver.eigenvalues().data(), solver.eigenvalues().data() + n};
}

// Sign-change scan of (-1, 1) on a uniform rational grid, refined by
// bisection in double; used when the eigenvalue seeds do not certify.
std::vector<double> grid_scan_seeds(const JacobiParams& params) {
  const long points = 400L * params.n + 2;
  std::vector<double> seeds;
  Rational prev_z(-1);
  int prev_sign = oracle_eval(params, prev_z).sign();
  for (long i = 1; i <= points; ++i) {
    const Rational z = Rational(-1) + Rational(2 * i, points);
    const int sign = oracle_eval(params, z).sign();
    if (sign == 0) {
      seeds.push_back(z.to_double());
    } else if (prev_sign != 0 && sign != prev_sign) {
      seeds.push_back(((prev_z + z) / Rational(2)).to_double());
    }
    prev_z = z;
    prev_sign = sign;
  }
  return seeds;
}

}  // namespace

std::vector<CertifiedZero> oracle_zeros(const JacobiParams& params, int digits) {
  params.validate();
  if (params.n < 1) throw std::invalid_argument("oracle_zeros: degree must be at least 1");
  if (digits < 16) throw std::invalid_argument("oracle_zeros: at least 16 digits required");

  const Rational slope_factor = (Rational(params.n) + params.alpha + params.beta + Rational(1)) / Rational(2);
  const Rational alpha1 = params.alpha + Rational(1);
  const Rational beta1 = params.beta + Rational(1);
  auto value_and_slope = [&](const Real& z) {
    return std::pair<Real, Real>(jacobi_eval(params.n, params.alpha, params.beta, z),
                                 lift(slope_factor, z) * jacobi_eval(params.n - 1, alpha1, beta1, z));
  };
  auto exact_sign = [&](const Rational& z) { return oracle_eval(params, z).sign(); };

  detail::PolishedRoots polished;
  try {
    const auto seeds = golub_welsch_seeds(params);
    if (static_cast<int>(seeds.size()) != params.n) throw std::runtime_error("eigenvalue seeds unavailable");
    polished = detail::polish_and_certify(seeds, value_and_slope, exact_sign, digits);
  } catch (const std::runtime_error&) {
    const auto seeds = grid_scan_seeds(params);
    if (static_cast<int>(seeds.size()) != params.n) {
      throw std::runtime_error("oracle_zeros: found " + std::to_string(seeds.size()) + " sign changes, expected " +
                               std::to_string(params.n));
    }
    polished = detail::polish_and_certify(seeds, value_and_slope, exact_sign, digits);
  }

  std::vector<CertifiedZero> out;
  for (std::size_t i = 0; i < polished.roots.size(); ++i) {
    const auto& [lo, hi] = polished.brackets[i];
    if (!(lo > Rational(-1)) || !(hi < Rational(1))) {
      throw std::runtime_error("oracle_zeros: bracket leaves (-1, 1)");
    }
    out.push_back({static_cast<int>(i) + 1, lo, hi, polished.roots[i]});
  }
  return out;
}

SymmetryImage symmetry_map(const JacobiParams& params, const Rational& z) {
  return {{params.n, params.beta, params.alpha}, -z, params.n % 2 == 0 ? 1 : -1};
}

Real relative_error(const Real& approx, const Rational& exact, int digits) {
  if (exact.is_zero()) throw std::domain_error("relative_error: exact value is zero; use an absolute error");
  const Real reference(exact, digits_to_bits(digits));
  return abs(approx - reference) / abs(reference);
}

Rational relative_error_exact(const Rational& approx, const Rational& exact) {
  if (exact.is_zero()) throw std::domain_error("relative_error: exact value is zero; use an absolute error");
  return abs(approx - exact) / abs(exact);
}

}  // namespace betajacobi
