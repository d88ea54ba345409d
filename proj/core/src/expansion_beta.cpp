#include "betajacobi/expansion_beta.hpp"

#include <stdexcept>

#include "betajacobi/config.hpp"
#include "betajacobi/series.hpp"

namespace betajacobi {

const MultiPoly& CKTable::coefficient(int j, int k) const {
  static const MultiPoly zero;
  const auto& row = by_power.at(static_cast<std::size_t>(k));
  if (j < 0 || j >= static_cast<int>(row.size())) return zero;
  return row[static_cast<std::size_t>(j)];
}

CKTable generate_ck(int order) {
  require_supported_order(order, "generate_ck");
  using Series = TruncatedSeries<MultiPoly>;
  constexpr auto kParam = SeriesParameter::inv_beta;
  const MultiPoly& s = sym_s();
  const MultiPoly& x = sym_x();
  const MultiPoly& n = sym_n();

  // With t = 1/beta the left-hand side times e^(xs) has logarithm
  //   n log(1 - x t) + (n + 1/t) log(1 - w) + x s,   w = x s t / (1 - x t).
  // The 1/t piece needs log(1 - w) one order further.
  const int wide = order + 1;
  const Series one_minus_xt = Series::constant(kParam, wide, MultiPoly(1)) - Series::variable(kParam, wide, x);
  const Series geometric = series_inverse_unit(one_minus_xt);
  const Series w = geometric.shifted_up(1).scaled(x * s);
  const Series log_one_minus_w = series_log(Series::constant(kParam, wide, MultiPoly(1)) - w);

  Series log_lhs = series_log(one_minus_xt.truncated(order)).scaled(n);
  log_lhs += log_one_minus_w.truncated(order).scaled(n);
  log_lhs += log_one_minus_w.shifted_down(1);
  log_lhs += Series::constant(kParam, order, x * s);
  if (!log_lhs[0].is_zero()) throw std::logic_error("generate_ck: constant term of the logarithm does not cancel");

  const Series c = series_exp(log_lhs);
  CKTable table;
  table.order = order;
  for (int k = 0; k <= order; ++k) {
    table.c.push_back(c[static_cast<std::size_t>(k)]);
    table.by_power.push_back(c[static_cast<std::size_t>(k)].coefficients_in(Symbol::s));
  }
  return table;
}

UVTable compute_uv(const CKTable& ck, int n, const Rational& alpha) { return assemble_two_term(ck.by_power, n, alpha); }

}  // namespace betajacobi
