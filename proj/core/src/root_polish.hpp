#pragma once

// Shared Newton polishing and exact sign-change certification for the real,
// simple zeros of orthogonal polynomials.

#include <functional>
#include <utility>
#include <vector>

#include "betajacobi/rational.hpp"
#include "betajacobi/real.hpp"

namespace betajacobi::detail {

struct PolishedRoots {
  std::vector<Real> roots;
  std::vector<std::pair<Rational, Rational>> brackets;
};

// `value_and_slope` returns (f(x), f'(x)) in extended precision;
// `exact_sign` is the sign of f at a rational point.
// Each bracket is [m - h, m + h] with h = 10^-digits * max(1, |m|) / 2, so
// its width is at most 10^-digits * max(1, |m|). Throws std::runtime_error if
// any root fails to certify or two brackets overlap.
PolishedRoots polish_and_certify(const std::vector<double>& seeds,
                                 const std::function<std::pair<Real, Real>(const Real&)>& value_and_slope,
                                 const std::function<int(const Rational&)>& exact_sign, int digits);

}  // namespace betajacobi::detail
