#include "root_polish.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace betajacobi::detail {

namespace {

constexpr int kGuardDigits = 12;
constexpr int kMaxNewtonSteps = 200;
constexpr int kWidenings = 4;

Rational pow10_rational(int exponent) {
  const Rational ten(10);
  return exponent >= 0 ? pow(ten, static_cast<unsigned>(exponent))
                       : Rational(1) / pow(ten, static_cast<unsigned>(-exponent));
}

}  // namespace

PolishedRoots polish_and_certify(const std::vector<double>& seeds,
                                 const std::function<std::pair<Real, Real>(const Real&)>& value_and_slope,
                                 const std::function<int(const Rational&)>& exact_sign, int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits + kGuardDigits);
  const Real tolerance = pow10(-(digits + kGuardDigits / 2), bits);
  const Real one(1L, bits);

  PolishedRoots out;
  for (const double seed : seeds) {
    Real x(seed, bits);
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
      auto [f, df] = value_and_slope(x);
      if (f.is_zero()) break;
      if (df.is_zero()) throw std::runtime_error("root polishing: vanishing derivative");
      const Real dx = f / df;
      x -= dx;
      if (abs(dx) <= tolerance * max(one, abs(x))) break;
    }
    out.roots.push_back(x);
  }
  std::sort(out.roots.begin(), out.roots.end());

  for (const Real& root : out.roots) {
    const Rational mid = root.to_rational();
    const Rational scale = std::max(Rational(1), abs(mid));
    const Rational target = pow10_rational(-digits) * scale;
    Rational half = target / Rational(2);
    bool certified = false;
    for (int attempt = 0; attempt <= kWidenings && !certified; ++attempt) {
      Rational lo = mid - half;
      Rational hi = mid + half;
      int sign_lo = exact_sign(lo);
      if (sign_lo * exact_sign(hi) < 0) {
        // A widened bracket is bisected back down to the promised width.
        while (hi - lo > target) {
          const Rational m = (lo + hi) / Rational(2);
          const int sign_m = exact_sign(m);
          if (sign_m == 0) {
            lo = m - target / Rational(4);
            hi = m + target / Rational(4);
            break;
          }
          if (sign_m == sign_lo) {
            lo = m;
          } else {
            hi = m;
          }
        }
        out.brackets.emplace_back(lo, hi);
        certified = true;
      } else {
        half *= Rational(10);
      }
    }
    if (!certified) {
      throw std::runtime_error("root certification failed near " + root.to_string(digits));
    }
  }
  for (std::size_t i = 1; i < out.brackets.size(); ++i) {
    if (!(out.brackets[i - 1].second < out.brackets[i].first)) {
      throw std::runtime_error("root certification: brackets " + std::to_string(i - 1) + " and " +
                               std::to_string(i) + " overlap");
    }
  }
  return out;
}

}  // namespace betajacobi::detail
