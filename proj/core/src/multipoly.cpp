#include "betajacobi/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace betajacobi {

namespace {

constexpr std::size_t index_of(Symbol symbol) { return static_cast<std::size_t>(symbol); }

}  // namespace

const char* symbol_name(Symbol symbol) {
  switch (symbol) {
    case Symbol::s:
      return "s";
    case Symbol::x:
      return "x";
    case Symbol::n:
      return "n";
    case Symbol::a:
      return "a";
    case Symbol::b:
      return "b";
  }
  return "?";
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(Symbol symbol) {
  Exponents e{};
  e[index_of(symbol)] = 1;
  return monomial(Rational(1), e);
}

MultiPoly MultiPoly::monomial(const Rational& coefficient, const Exponents& exponents) {
  MultiPoly p;
  p.add_term(exponents, coefficient);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents{}); }

Rational MultiPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(Symbol symbol) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[index_of(symbol)]));
  return d;
}

int MultiPoly::min_degree(Symbol symbol) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[index_of(symbol)];
  for (const auto& [e, c] : terms_) d = std::min(d, static_cast<int>(e[index_of(symbol)]));
  return d;
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly result;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      MultiPoly::Exponents e;
      for (std::size_t i = 0; i < kSymbolCount; ++i) e[i] = static_cast<std::uint16_t>(el[i] + er[i]);
      result.add_term(e, cl * cr);
    }
  }
  return result;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly result(*this);
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base(*this);
  while (exponent > 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Symbol symbol, const MultiPoly& replacement) const {
  const std::size_t k = index_of(symbol);
  // Group terms by the power of the replaced symbol, then evaluate with a
  // cached power table.
  std::map<unsigned, MultiPoly> groups;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[k] = 0;
    groups[e[k]].add_term(rest, c);
  }
  MultiPoly result;
  MultiPoly power(1);
  unsigned current = 0;
  for (const auto& [p, group] : groups) {
    while (current < p) {
      power *= replacement;
      ++current;
    }
    result += group * power;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Symbol symbol, const Rational& value) const {
  const std::size_t k = index_of(symbol);
  MultiPoly result;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[k] = 0;
    result.add_term(rest, c * betajacobi::pow(value, e[k]));
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Symbol symbol) const {
  const std::size_t k = index_of(symbol);
  std::vector<MultiPoly> result(static_cast<std::size_t>(std::max(degree(symbol), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[k] = 0;
    result[e[k]].add_term(rest, c);
  }
  return result;
}

MultiPoly MultiPoly::divide_by_power(Symbol symbol, unsigned power) const {
  const std::size_t k = index_of(symbol);
  MultiPoly result;
  for (const auto& [e, c] : terms_) {
    if (e[k] < power) {
      throw std::domain_error(std::string("MultiPoly: not divisible by ") + symbol_name(symbol) + "^" +
                              std::to_string(power));
    }
    Exponents q = e;
    q[k] = static_cast<std::uint16_t>(q[k] - power);
    result.terms_.emplace(q, c);
  }
  return result;
}

MultiPoly MultiPoly::divide_by_linear(Symbol symbol, const MultiPoly& shift) const {
  if (shift.depends_on(symbol)) throw std::invalid_argument("divide_by_linear: shift involves the main symbol");
  if (is_zero()) return {};
  // Synthetic division in `symbol`, highest power first.
  const auto c = coefficients_in(symbol);
  const MultiPoly var = variable(symbol);
  MultiPoly quotient;
  MultiPoly carry;
  for (std::size_t i = c.size(); i-- > 1;) {
    const MultiPoly q = c[i] - shift * carry;
    quotient += q * var.pow(static_cast<unsigned>(i - 1));
    carry = q;
  }
  if (!(c[0] - shift * carry).is_zero()) {
    throw std::domain_error(std::string("divide_by_linear: not divisible by ") + symbol_name(symbol) + " + (" +
                            shift.to_string() + ")");
  }
  return quotient;
}

MultiPoly MultiPoly::derivative(Symbol symbol) const {
  const std::size_t k = index_of(symbol);
  MultiPoly result;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] = static_cast<std::uint16_t>(d[k] - 1);
    result.add_term(d, c * Rational(static_cast<long>(e[k])));
  }
  return result;
}

Rational MultiPoly::evaluate(const Assignment& values) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (e[i] == 0) continue;
      if (!values[i]) {
        throw std::invalid_argument(std::string("MultiPoly::evaluate: no value for symbol ") +
                                    symbol_name(static_cast<Symbol>(i)));
      }
      term *= betajacobi::pow(*values[i], e[i]);
    }
    total += term;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    bool has_symbol = false;
    for (std::size_t i = 0; i < kSymbolCount; ++i) has_symbol = has_symbol || e[i] > 0;
    bool need_star = false;
    if (!has_symbol || mag != Rational(1)) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << symbol_name(static_cast<Symbol>(i));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace betajacobi
