#pragma once

// Sparse multivariate polynomials over Rational in the closed symbol set
// {s, x, n, a, b}.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "betajacobi/rational.hpp"

namespace betajacobi {

enum class Symbol : std::uint8_t { s = 0, x = 1, n = 2, a = 3, b = 4 };

inline constexpr std::size_t kSymbolCount = 5;
inline constexpr std::array<Symbol, kSymbolCount> kAllSymbols = {Symbol::s, Symbol::x, Symbol::n, Symbol::a,
                                                                 Symbol::b};

const char* symbol_name(Symbol symbol);

// Values assigned to symbols for evaluation; unassigned symbols are an error
// when they occur in the polynomial.
using Assignment = std::array<std::optional<Rational>, kSymbolCount>;

class MultiPoly {
 public:
  using Exponents = std::array<std::uint16_t, kSymbolCount>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(long constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}   // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Symbol symbol);
  static MultiPoly monomial(const Rational& coefficient, const Exponents& exponents);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Rational constant_term() const;
  Rational coefficient(const Exponents& exponents) const;
  std::size_t size() const { return terms_.size(); }

  // Highest power of `symbol` present; -1 for the zero polynomial.
  int degree(Symbol symbol) const;
  // Lowest power of `symbol` present; -1 for the zero polynomial.
  int min_degree(Symbol symbol) const;
  bool depends_on(Symbol symbol) const { return degree(symbol) > 0; }

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& factor);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  MultiPoly pow(unsigned exponent) const;

  // Replaces every occurrence of `symbol` by `replacement`.
  MultiPoly substitute(Symbol symbol, const MultiPoly& replacement) const;
  MultiPoly substitute(Symbol symbol, const Rational& value) const;

  // Coefficients with respect to `symbol`: result[j] multiplies symbol^j.
  std::vector<MultiPoly> coefficients_in(Symbol symbol) const;

  // Exact division by symbol^power; throws std::domain_error if some term
  // has a lower power of `symbol`.
  MultiPoly divide_by_power(Symbol symbol, unsigned power) const;

  // Exact quotient by (symbol + shift), where `shift` does not involve
  // `symbol`. Throws std::domain_error if the remainder is nonzero.
  MultiPoly divide_by_linear(Symbol symbol, const MultiPoly& shift) const;

  MultiPoly derivative(Symbol symbol) const;

  // Throws std::invalid_argument if a symbol in use has no value.
  Rational evaluate(const Assignment& values) const;

  // Human readable, deterministic (graded by term map order).
  std::string to_string() const;

 private:
  void add_term(const Exponents& exponents, const Rational& coefficient);
  TermMap terms_;
};

// Convenience for building polynomials in tests and tables.
inline const MultiPoly& sym_s() {
  static const MultiPoly p = MultiPoly::variable(Symbol::s);
  return p;
}
inline const MultiPoly& sym_x() {
  static const MultiPoly p = MultiPoly::variable(Symbol::x);
  return p;
}
inline const MultiPoly& sym_n() {
  static const MultiPoly p = MultiPoly::variable(Symbol::n);
  return p;
}
inline const MultiPoly& sym_a() {
  static const MultiPoly p = MultiPoly::variable(Symbol::a);
  return p;
}
inline const MultiPoly& sym_b() {
  static const MultiPoly p = MultiPoly::variable(Symbol::b);
  return p;
}

}  // namespace betajacobi
