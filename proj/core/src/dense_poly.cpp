#include "betajacobi/dense_poly.hpp"

#include <stdexcept>
#include <utility>

namespace betajacobi {

DensePoly::DensePoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void DensePoly::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

DensePoly DensePoly::from_multipoly(const MultiPoly& p, Symbol var) {
  for (const Symbol other : kAllSymbols) {
    if (other != var && p.depends_on(other)) {
      throw std::invalid_argument(std::string("DensePoly: polynomial still depends on ") + symbol_name(other));
    }
  }
  std::vector<Rational> c;
  for (const auto& piece : p.coefficients_in(var)) c.push_back(piece.constant_term());
  return DensePoly(std::move(c));
}

MultiPoly DensePoly::to_multipoly(Symbol var) const {
  MultiPoly result;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    MultiPoly::Exponents e{};
    e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(i);
    result += MultiPoly::monomial(coefficients_[i], e);
  }
  return result;
}

}  // namespace betajacobi
