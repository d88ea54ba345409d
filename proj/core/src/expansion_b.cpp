#include "betajacobi/expansion_b.hpp"

#include <stdexcept>

#include "betajacobi/config.hpp"
#include "betajacobi/series.hpp"

namespace betajacobi {

namespace {

using Series = TruncatedSeries<MultiPoly>;

}  // namespace

std::vector<MultiPoly> ak_coefficients(int order, const std::optional<Rational>& b) {
  if (order < 0) throw std::out_of_range("ak_coefficients: negative order");
  constexpr auto kParam = SeriesParameter::xi_s;
  const MultiPoly bb = b ? MultiPoly(*b) : sym_b();
  // With u = xi s we have x s = (b - x) u, so
  //   log[e^(xs) (1 - u)^b] = (b - x) u + b log(1 - u).
  const Series one_minus_u = Series::constant(kParam, order, MultiPoly(1)) - Series::variable(kParam, order, MultiPoly(1));
  Series log_rhs = series_log(one_minus_u).scaled(bb);
  log_rhs += Series::variable(kParam, order, bb - sym_x());
  const Series a = series_exp(log_rhs);
  return a.coefficients();
}

AKTable generate_ak(int order) {
  require_supported_order(order, "generate_ak");
  return {order, ak_coefficients(order)};
}

const MultiPoly& DKTable::coefficient(int j, int k) const {
  static const MultiPoly zero;
  const auto& row = by_power.at(static_cast<std::size_t>(k));
  if (j < 0 || j >= static_cast<int>(row.size())) return zero;
  return row[static_cast<std::size_t>(j)];
}

DKTable generate_dk(int order) {
  require_supported_order(order, "generate_dk");
  constexpr auto kParam = SeriesParameter::inv_b;
  const MultiPoly& s = sym_s();
  const MultiPoly& x = sym_x();

  // With t = 1/b: log[e^(xs) (1 - w)^b] = log(1 - w)/t + x s, w = x s t/(1 - x t).
  const int wide = order + 1;
  const Series one_minus_xt = Series::constant(kParam, wide, MultiPoly(1)) - Series::variable(kParam, wide, x);
  const Series w = series_inverse_unit(one_minus_xt).shifted_up(1).scaled(x * s);
  Series log_rhs = series_log(Series::constant(kParam, wide, MultiPoly(1)) - w).shifted_down(1);
  log_rhs += Series::constant(kParam, order, x * s);
  if (!log_rhs[0].is_zero()) throw std::logic_error("generate_dk: constant term of the logarithm does not cancel");

  const Series d = series_exp(log_rhs);
  DKTable table;
  table.order = order;
  for (int k = 0; k <= order; ++k) {
    table.d.push_back(d[static_cast<std::size_t>(k)]);
    table.by_power.push_back(d[static_cast<std::size_t>(k)].coefficients_in(Symbol::s));
  }
  return table;
}

std::vector<MultiPoly> reexpand_ak_in_inverse_b(int order) {
  if (order < 0) throw std::out_of_range("reexpand_ak_in_inverse_b: negative order");
  constexpr auto kParam = SeriesParameter::inv_b;
  const MultiPoly& s = sym_s();
  const MultiPoly& x = sym_x();
  const auto a = ak_coefficients(2 * order);

  // xi = x t / (1 - x t) with t = 1/b; a_k carries b-powers at most k/2.
  const Series one_minus_xt = Series::constant(kParam, order, MultiPoly(1)) - Series::variable(kParam, order, x);
  const Series geometric = series_inverse_unit(one_minus_xt);
  Series total(kParam, order);
  Series geometric_power = Series::constant(kParam, order, MultiPoly(1));
  for (int k = 0; k <= 2 * order; ++k) {
    const auto by_b = a[static_cast<std::size_t>(k)].coefficients_in(Symbol::b);
    const MultiPoly xs_power = (x * s).pow(static_cast<unsigned>(k));
    for (int m = 0; m < static_cast<int>(by_b.size()); ++m) {
      if (by_b[static_cast<std::size_t>(m)].is_zero()) continue;
      const int shift = k - m;
      if (shift < 0) throw std::logic_error("reexpand_ak_in_inverse_b: a_k has b-degree above k");
      if (shift > order) continue;
      total += geometric_power.shifted_up(shift).scaled(by_b[static_cast<std::size_t>(m)] * xs_power);
    }
    geometric_power = geometric_power * geometric;
  }
  return total.coefficients();
}

YZTable compute_yz(const DKTable& dk, int n, const Rational& alpha) { return assemble_two_term(dk.by_power, n, alpha); }

}  // namespace betajacobi
