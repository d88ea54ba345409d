#include "betajacobi/basis_expansion.hpp"

#include <algorithm>

namespace betajacobi {

TwoTermTable assemble_two_term(const std::vector<std::vector<MultiPoly>>& s_coefficients, int n,
                               const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("two-term representation needs n >= 1");
  const LaguerreParams params{n, alpha};
  params.validate();

  int widest = 0;
  for (const auto& row : s_coefficients) widest = std::max(widest, static_cast<int>(row.size()) - 1);
  const auto basis = basis_reduction_numeric(params, std::min(n, widest));

  TwoTermTable table;
  table.order = static_cast<int>(s_coefficients.size()) - 1;
  table.n = n;
  table.alpha = alpha;
  const MultiPoly& x = sym_x();
  for (std::size_t k = 0; k < s_coefficients.size(); ++k) {
    const auto& row = s_coefficients[k];
    const int top = std::min<int>(n, static_cast<int>(row.size()) - 1);
    MultiPoly first;
    MultiPoly second;
    for (int j = 0; j <= top; ++j) {
      const MultiPoly c = row[static_cast<std::size_t>(j)].substitute(Symbol::n, Rational(n));
      if (c.is_zero()) continue;
      const MultiPoly lifted = c * x.pow(static_cast<unsigned>(top - j));
      first += lifted * basis[static_cast<std::size_t>(j)].p.to_multipoly(Symbol::x);
      second += lifted * basis[static_cast<std::size_t>(j)].q.to_multipoly(Symbol::x);
    }
    try {
      table.first.push_back(DensePoly::from_multipoly(first.divide_by_power(Symbol::x, static_cast<unsigned>(top)), Symbol::x));
      table.second.push_back(
          DensePoly::from_multipoly(second.divide_by_power(Symbol::x, static_cast<unsigned>(top)), Symbol::x));
    } catch (const std::domain_error& e) {
      throw std::logic_error("x-power cancellation failed at order " + std::to_string(k) + ": " + e.what());
    }
  }
  return table;
}

std::vector<std::pair<MultiPoly, MultiPoly>> assemble_two_term_symbolic(
    const std::vector<std::vector<MultiPoly>>& s_coefficients) {
  int widest = 0;
  for (const auto& row : s_coefficients) widest = std::max(widest, static_cast<int>(row.size()) - 1);
  const auto basis = basis_reduction_table(widest);
  const MultiPoly& x = sym_x();
  std::vector<std::pair<MultiPoly, MultiPoly>> out;
  for (std::size_t k = 0; k < s_coefficients.size(); ++k) {
    const auto& row = s_coefficients[k];
    const int top = static_cast<int>(row.size()) - 1;
    MultiPoly first;
    MultiPoly second;
    for (int j = 0; j <= top; ++j) {
      const MultiPoly& c = row[static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      const MultiPoly lifted = c * x.pow(static_cast<unsigned>(top - j));
      first += lifted * basis[static_cast<std::size_t>(j)].p;
      second += lifted * basis[static_cast<std::size_t>(j)].q;
    }
    try {
      out.emplace_back(first.divide_by_power(Symbol::x, static_cast<unsigned>(top)),
                       second.divide_by_power(Symbol::x, static_cast<unsigned>(top)));
    } catch (const std::domain_error& e) {
      throw std::logic_error("x-power cancellation failed at order " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace betajacobi
