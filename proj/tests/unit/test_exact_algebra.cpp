#include <doctest.h>

#include "betajacobi/dense_poly.hpp"
#include "betajacobi/multipoly.hpp"
#include "betajacobi/rational.hpp"
#include "betajacobi/real.hpp"
#include "betajacobi/series.hpp"
#include "support/properties.hpp"

using namespace betajacobi;

TEST_SUITE("exact_algebra") {
  TEST_CASE("rational parsing and formatting") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  }

  TEST_CASE("rational arithmetic") {
    const Rational a(2, 3), b(-5, 7);
    CHECK(a + b == Rational(-1, 21));
    CHECK(a * b == Rational(-10, 21));
    CHECK(a / b == Rational(-14, 15));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(factorial(10) == Rational(3628800));
    // binomial(n + alpha, n) for n=10, alpha=1/3: prod (alpha+i)/i.
    CHECK(binomial(Rational(31, 3), 10) == Rational(11791780, 4782969));
    CHECK(abs(b) == Rational(5, 7));
    CHECK(b < a);
  }

  TEST_CASE("real precision and conversion") {
    const Real third(Rational(1, 3), digits_to_bits(40));
    CHECK(third.to_string(5) == "3.3333e-01");
    CHECK(third.precision() >= 133);
    const Real sum = third + Real(Rational(2, 3), 64);
    CHECK(sum.precision() == third.precision());
    CHECK(Real(Rational(5, 8), 64).to_rational() == Rational(5, 8));
    CHECK_THROWS_AS(third / Real(0L, 64), std::domain_error);
    CHECK(pow10(-3, 64).to_string(3) == "1.00e-03");
  }

  TEST_CASE("multipoly ring axioms") {
    testing::RationalSampler rs(3);
    const auto random_poly = [&] {
      MultiPoly p;
      for (int t = 0; t < 6; ++t) {
        MultiPoly::Exponents e{};
        for (auto& d : e) d = static_cast<std::uint16_t>(rs.integer(0, 2));
        p += MultiPoly::monomial(rs.open_interval(-4, 4), e);
      }
      return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
      const MultiPoly p = random_poly(), q = random_poly(), r = random_poly();
      CHECK((p + q) + r == p + (q + r));
      CHECK(p * q == q * p);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK((p - p).is_zero());
      CHECK(p * MultiPoly(1) == p);
    }
  }

  TEST_CASE("multipoly normalization survives a long operation chain") {
    const MultiPoly& x = sym_x();
    const MultiPoly& n = sym_n();
    MultiPoly p = x * n + MultiPoly(Rational(1, 3));
    const MultiPoly start = p;
    const MultiPoly factor = x + MultiPoly(Rational(2));
    for (int i = 0; i < 250; ++i) {
      p = p * factor;
      p = p.divide_by_linear(Symbol::x, MultiPoly(Rational(2)));
      p += n.pow(2);
      p -= n * n;
    }
    CHECK(p == start);
    CHECK(p.size() == 2);
  }

  TEST_CASE("substitution, evaluation and division") {
    const MultiPoly& x = sym_x();
    const MultiPoly& s = sym_s();
    const MultiPoly p = x.pow(3) * s + MultiPoly(Rational(2)) * x.pow(2);
    CHECK(p.divide_by_power(Symbol::x, 2) == x * s + MultiPoly(Rational(2)));
    CHECK_THROWS_AS(p.divide_by_power(Symbol::x, 3), std::domain_error);
    CHECK_THROWS_AS((x + MultiPoly(1)).divide_by_linear(Symbol::x, MultiPoly(2)), std::domain_error);
    CHECK(p.substitute(Symbol::s, Rational(1, 2)) == MultiPoly(Rational(1, 2)) * x.pow(3) + MultiPoly(2) * x.pow(2));
    Assignment at;
    at[static_cast<std::size_t>(Symbol::x)] = Rational(3);
    at[static_cast<std::size_t>(Symbol::s)] = Rational(-1, 3);
    CHECK(p.evaluate(at) == Rational(9));
    CHECK(p.derivative(Symbol::x) == MultiPoly(3) * x.pow(2) * s + MultiPoly(4) * x);
    CHECK(p.degree(Symbol::x) == 3);
    CHECK(p.min_degree(Symbol::x) == 2);
    CHECK(p.coefficients_in(Symbol::s).size() == 2);
  }

  TEST_CASE("dense polynomial evaluation and Taylor data") {
    const DensePoly p({Rational(1), Rational(-3), Rational(0), Rational(2)});  // 2x^3 - 3x + 1
    CHECK(p.evaluate(Rational(2)) == Rational(11));
    const auto t = p.taylor_at(Rational(1), 4);
    // p(1)=0, p'(1)=3, p''(1)/2=6, p'''/6=2
    CHECK(t[0] == Rational(0));
    CHECK(t[1] == Rational(3));
    CHECK(t[2] == Rational(6));
    CHECK(t[3] == Rational(2));
    CHECK(DensePoly::from_multipoly(p.to_multipoly(Symbol::x), Symbol::x) == p);
    CHECK_THROWS(DensePoly::from_multipoly(sym_x() * sym_n(), Symbol::x));
  }

  TEST_CASE("truncated series") {
    using S = TruncatedSeries<Rational>;
    const S t = S::variable(SeriesParameter::inv_beta, 6, Rational(1));
    // exp(t) coefficients 1/k!
    const S e = series_exp(t);
    for (int k = 0; k <= 6; ++k) CHECK(e[k] == Rational(1) / factorial(static_cast<unsigned>(k)));
    // log(1 - t) = -sum t^k / k
    const S l = series_log(S::constant(SeriesParameter::inv_beta, 6, 1) - t);
    for (int k = 1; k <= 6; ++k) CHECK(l[k] == Rational(-1, k));
    CHECK_THROWS_AS(series_exp(S::constant(SeriesParameter::inv_beta, 3, 1)), std::domain_error);
    CHECK_THROWS_AS(series_log(t), std::domain_error);
    const S other = S::variable(SeriesParameter::inv_b, 6, Rational(1));
    CHECK_THROWS_AS(t * other, std::logic_error);
    CHECK((t * t).shifted_down(2)[0] == Rational(1));
    CHECK(t.pow(3)[3] == Rational(1));
    CHECK_THROWS_AS(S(SeriesParameter::shift, -1), std::invalid_argument);
  }

  TEST_CASE("exp/log round trips") {
    const auto check = testing::exp_log_roundtrip_suite(11);
    INFO(check.detail);
    CHECK(check.ok);
  }
}
