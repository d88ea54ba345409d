#include "betajacobi/zero_expansions.hpp"

#include <stdexcept>
#include <string>

#include "betajacobi/expansion_b.hpp"
#include "betajacobi/expansion_beta.hpp"

namespace betajacobi {

namespace {

constexpr int kGuardDigits = 8;

MultiPoly poly_const(long p, long q = 1) { return MultiPoly(Rational(p, q)); }

void require_printed_index(int j) {
  if (j < 1 || j > 3) throw std::out_of_range("printed shift coefficients exist for j = 1..3 only, got " + std::to_string(j));
}

// Coefficients t_j of the Cauchy-product power E^m, for a shift series E
// whose low coefficients are given; generic over MultiPoly and Real.
template <class C>
std::vector<std::vector<C>> shift_powers(const std::vector<C>& shift, int order, const C& zero, const C& one) {
  std::vector<std::vector<C>> powers(static_cast<std::size_t>(order) + 1,
                                     std::vector<C>(static_cast<std::size_t>(order) + 1, zero));
  powers[0][0] = one;
  for (int m = 1; m <= order; ++m) {
    for (int i = 0; i <= order; ++i) {
      if (powers[m - 1][i].is_zero()) continue;
      for (int j = 1; i + j <= order; ++j) {
        if (shift[j].is_zero()) continue;
        powers[m][i + j] = powers[m][i + j] + powers[m - 1][i] * shift[j];
      }
    }
  }
  return powers;
}

// Order-j coefficient of sum_{m,k} w[m][k] E^m t^k.
template <class C>
C order_residual(const std::vector<std::vector<C>>& w, const std::vector<std::vector<C>>& powers, int j, const C& zero) {
  C total = zero;
  for (int k = 0; k <= j; ++k) {
    for (int m = 0; m <= j; ++m) {
      const C& p = powers[m][j - k];
      if (p.is_zero() || w[m][k].is_zero()) continue;
      total = total + w[m][k] * p;
    }
  }
  return total;
}

}  // namespace

const char* zero_method_name(ZeroMethod method) { return method == ZeroMethod::epsilon ? "epsilon" : "delta"; }

MultiPoly printed_epsilon_poly(int j) {
  require_printed_index(j);
  const MultiPoly& x = sym_x();
  const MultiPoly& n = sym_n();
  const MultiPoly& a = sym_a();
  switch (j) {
    case 1:
      return poly_const(-1, 2) * x * (a + poly_const(2) * n + x + poly_const(1));
    case 2:
      return poly_const(1, 24) * x *
             (poly_const(5) + poly_const(7) * a * a + poly_const(12) * a +
              poly_const(24) * n * (poly_const(1) + a + n) + poly_const(13) * (poly_const(1) + a + poly_const(2) * n) * x +
              poly_const(4) * x * x);
    default:
      return poly_const(-1, 48) * x *
             (poly_const(9) * a.pow(3) + poly_const(42) * n * a * a + poly_const(23) * x * a * a + poly_const(21) * a * a +
              poly_const(42) * x * a + poly_const(72) * n * n * a + poly_const(84) * x * n * a + poly_const(15) * a +
              poly_const(14) * x * x * a + poly_const(72) * n * a + poly_const(19) * x + poly_const(72) * n * n +
              poly_const(30) * n + poly_const(48) * n.pow(3) + poly_const(84) * n * n * x + poly_const(3) +
              poly_const(84) * n * x + poly_const(14) * x * x + poly_const(28) * n * x * x + poly_const(2) * x.pow(3));
  }
}

MultiPoly printed_delta_poly(int j) {
  require_printed_index(j);
  const MultiPoly& x = sym_x();
  const MultiPoly& n = sym_n();
  const MultiPoly& a = sym_a();
  switch (j) {
    case 1:
      return poly_const(-1, 2) * x * (a + x + poly_const(1));
    case 2:
      return poly_const(1, 24) * x *
             (poly_const(5) + poly_const(7) * a * a + poly_const(12) * a +
              (poly_const(13) + poly_const(13) * a + poly_const(2) * n) * x + poly_const(4) * x * x);
    default:
      return poly_const(-1, 48) * x *
             (poly_const(9) * a.pow(3) + poly_const(23) * x * a * a + poly_const(21) * a * a + poly_const(42) * x * a +
              poly_const(15) * a + poly_const(6) * x * n * a + poly_const(14) * x * x * a + poly_const(2) * x.pow(3) +
              poly_const(6) * n * x + poly_const(19) * x + poly_const(4) * n * x * x + poly_const(14) * x * x +
              poly_const(3));
  }
}

Rational printed_epsilon(int j, int n, const Rational& alpha, const Rational& x) {
  return evaluate_in_xna(printed_epsilon_poly(j), n, alpha, x);
}

Rational printed_delta(int j, int n, const Rational& alpha, const Rational& x) {
  return evaluate_in_xna(printed_delta_poly(j), n, alpha, x);
}

std::vector<MultiPoly> symbolic_zero_coefficients(ZeroMethod method, int order) {
  require_supported_order(order, "symbolic_zero_coefficients");
  const auto two_term = assemble_two_term_symbolic(method == ZeroMethod::epsilon ? generate_ck(order).by_power
                                                                                  : generate_dk(order).by_power);
  const MultiPoly& x = sym_x();
  const MultiPoly& n = sym_n();
  const MultiPoly& a = sym_a();

  // D_m = x^m y^(m)(x) / L_{n-1}(x) at a zero x of L_n, from the Laguerre
  // equation differentiated m-1 times:
  //   D_{m+1} = (x - a - m) D_m + (m - 1 - N) x D_{m-1}.
  // Stored divided by m!, i.e. as scaled Taylor coefficients.
  const auto scaled_taylor = [&](MultiPoly d0, MultiPoly d1, const MultiPoly& degree) {
    std::vector<MultiPoly> d{std::move(d0), std::move(d1)};
    for (int m = 1; m < order; ++m) {
      d.push_back((x - a - poly_const(m)) * d[m] + (poly_const(m - 1) - degree) * x * d[m - 1]);
    }
    for (int m = 0; m <= order; ++m) d[m] *= Rational(1) / factorial(static_cast<unsigned>(m));
    return d;
  };
  const auto lag_n = scaled_taylor(MultiPoly(), -(n + a), n);
  const auto lag_n1 = scaled_taylor(MultiPoly(1), x - n - a, n - poly_const(1));

  // x^j p^(j)(x) / j!
  const auto poly_taylor = [&](const MultiPoly& p) {
    std::vector<MultiPoly> out;
    MultiPoly deriv = p;
    for (int j = 0; j <= order; ++j) {
      out.push_back(x.pow(static_cast<unsigned>(j)) * deriv * (Rational(1) / factorial(static_cast<unsigned>(j))));
      deriv = deriv.derivative(Symbol::x);
    }
    return out;
  };

  std::vector<std::vector<MultiPoly>> w(static_cast<std::size_t>(order) + 1,
                                        std::vector<MultiPoly>(static_cast<std::size_t>(order) + 1));
  for (int k = 0; k <= order; ++k) {
    const auto ta = poly_taylor(two_term[k].first);
    const auto tb = poly_taylor(two_term[k].second);
    for (int m = 0; m <= order; ++m) {
      for (int i = 0; i <= m; ++i) w[m][k] += lag_n[i] * ta[m - i] + lag_n1[i] * tb[m - i];
    }
  }
  if (!(w[1][0] == -(n + a))) throw std::logic_error("symbolic_zero_coefficients: unexpected pivot");

  // Shift = x * eta; the order-j equation reads -(n+a) eta_j + R_j = 0.
  std::vector<MultiPoly> eta(static_cast<std::size_t>(order) + 1);
  for (int j = 1; j <= order; ++j) {
    const auto powers = shift_powers(eta, j, MultiPoly(), MultiPoly(1));
    const MultiPoly residual = order_residual(w, powers, j, MultiPoly());
    eta[j] = residual.divide_by_linear(Symbol::n, a);
  }
  std::vector<MultiPoly> out;
  for (int j = 1; j <= order; ++j) out.push_back(x * eta[j]);
  return out;
}

ZeroExpansionCoeffs generate_zero_coeffs(ZeroMethod method, const TwoTermTable& table, const Real& ell, int order,
                                         int digits) {
  if (order < 1 || order > table.order) {
    throw std::out_of_range("generate_zero_coeffs: order " + std::to_string(order) + " outside prepared 1.." +
                            std::to_string(table.order));
  }
  const mpfr_prec_t bits = digits_to_bits(digits + kGuardDigits);
  const Real base(ell);
  const Real zero(0L, bits);
  const Real one(1L, bits);
  const LaguerreParams pn{table.n, table.alpha};
  const LaguerreParams pn1{table.n - 1, table.alpha};

  std::vector<Real> tn;
  std::vector<Real> tn1;
  for (int m = 0; m <= order; ++m) {
    const Real fact(factorial(static_cast<unsigned>(m)), bits);
    tn.push_back(laguerre_derivative(pn, base, m) / fact);
    tn1.push_back(laguerre_derivative(pn1, base, m) / fact);
  }
  // ell is a zero of L_n by definition; drop the rounding residue.
  tn[0] = zero;

  std::vector<std::vector<Real>> w(static_cast<std::size_t>(order) + 1, std::vector<Real>(static_cast<std::size_t>(order) + 1, zero));
  for (int k = 0; k <= order; ++k) {
    const auto ta = table.first[static_cast<std::size_t>(k)].taylor_at(base, static_cast<std::size_t>(order) + 1);
    const auto tb = table.second[static_cast<std::size_t>(k)].taylor_at(base, static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
      for (int i = 0; i <= m; ++i) w[m][k] += tn[i] * ta[m - i] + tn1[i] * tb[m - i];
    }
  }

  const Real& pivot = w[1][0];
  Real scale = zero;
  for (int m = 1; m <= order; ++m) scale = max(scale, abs(tn[m]));
  if (abs(pivot) <= pow10(8 - digits, bits) * scale) {
    throw std::domain_error("degenerate base point: L_n' is negligible at " + base.to_string(20));
  }

  std::vector<Real> shift(static_cast<std::size_t>(order) + 1, zero);
  for (int j = 1; j <= order; ++j) {
    const auto powers = shift_powers(shift, j, zero, one);
    shift[j] = -order_residual(w, powers, j, zero) / pivot;
  }

  ZeroExpansionCoeffs out;
  out.method = method;
  out.base = base;
  out.terms.assign(shift.begin() + 1, shift.end());
  return out;
}

ZeroExpansion::ZeroExpansion(int n, const Rational& alpha, ZeroMethod method, int order, int digits)
    : n_(n), alpha_(alpha), method_(method), order_(order), digits_(digits) {
  require_supported_order(order, "ZeroExpansion");
  const LaguerreParams params{n, alpha};
  params.validate();
  if (n < 1) throw std::invalid_argument("ZeroExpansion: degree must be at least 1");
  laguerre_ = laguerre_zeros(params, digits + kGuardDigits);
  table_ = method == ZeroMethod::epsilon ? compute_uv(generate_ck(order), n, alpha) : compute_yz(generate_dk(order), n, alpha);
  for (int k = 1; k <= n; ++k) {
    const Real& ell = laguerre_.zeros[static_cast<std::size_t>(n - k)];
    coefficients_.push_back(generate_zero_coeffs(method, table_, ell, order, digits));
  }
}

const ZeroExpansionCoeffs& ZeroExpansion::coefficients(int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("zero index " + std::to_string(k) + " outside 1.." + std::to_string(n_));
  return coefficients_[static_cast<std::size_t>(k - 1)];
}

ZeroApprox ZeroExpansion::approximate(const Rational& beta, int k, int terms) const {
  if (terms < 0 || terms > order_) {
    throw std::out_of_range("terms " + std::to_string(terms) + " outside prepared 0.." + std::to_string(order_));
  }
  if (!(beta > Rational(0))) throw std::invalid_argument("zero approximation needs beta > 0");
  const ZeroExpansionCoeffs& c = coefficients(k);
  const Rational scale = method_ == ZeroMethod::epsilon ? beta : beta + Rational(n_);
  const mpfr_prec_t bits = c.base.precision();
  const Real t(Rational(1) / scale, bits);
  Real shift(0L, bits);
  for (int j = terms; j >= 1; --j) shift = (shift + c.terms[static_cast<std::size_t>(j - 1)]) * t;

  ZeroApprox out;
  out.index = k;
  out.method = method_;
  out.terms = terms;
  out.base = c.base;
  out.x = c.base + shift;
  out.z = Real(1L, bits) - Real(2L, bits) * out.x * t;
  return out;
}

std::vector<ZeroApprox> ZeroExpansion::all(const Rational& beta, int terms) const {
  std::vector<ZeroApprox> out;
  for (int k = 1; k <= n_; ++k) out.push_back(approximate(beta, k, terms));
  return out;
}

ZeroApprox jacobi_zero_approx(const JacobiParams& params, int k, ZeroMethod method, int terms, int digits) {
  params.validate();
  const ZeroExpansion expansion(params.n, params.alpha, method, std::max(terms, 1), digits);
  return expansion.approximate(params.beta, k, terms);
}

std::vector<ZeroApprox> all_zeros(const JacobiParams& params, ZeroMethod method, int terms, int digits) {
  params.validate();
  const ZeroExpansion expansion(params.n, params.alpha, method, std::max(terms, 1), digits);
  return expansion.all(params.beta, terms);
}

}  // namespace betajacobi
