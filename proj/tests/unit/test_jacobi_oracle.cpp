#include <doctest.h>

#include "betajacobi/jacobi_oracle.hpp"
#include "support/properties.hpp"

using namespace betajacobi;

TEST_SUITE("jacobi_oracle") {
  TEST_CASE("frozen values") {
    // Independent computer-algebra evaluation.
    CHECK(oracle_eval(JacobiParams{3, Rational(1, 2), Rational(3)}, Rational(1, 5)) == Rational(181, 400));
    CHECK(oracle_eval(JacobiParams{5, Rational(1, 3), Rational(100)}, Rational(9, 10)) ==
          Rational(-791993657, 233280000));
    CHECK(oracle_eval(JacobiParams{10, Rational(1, 3), Rational(50)}, Rational(24, 25)) ==
          Rational(mpq_class("4794784633633681775341/7298231506347656250000")));
    CHECK(oracle_eval(JacobiParams{0, Rational(4), Rational(9)}, Rational(-1, 2)) == Rational(1));
  }

  TEST_CASE("value at one is a binomial") {
    for (int n = 0; n <= 10; ++n) {
      const JacobiParams p{n, Rational(1, 3), Rational(77, 2)};
      CHECK(oracle_eval(p, Rational(1)) == binomial(p.alpha + Rational(n), static_cast<unsigned>(n)));
    }
  }

  TEST_CASE("derivative through the index shift") {
    // d/dz P_4^(1/2,2)(z) at z=1/3 is -215/72; equals (n+alpha+beta+1)/2 P_3^(3/2,3).
    const JacobiParams shifted{3, Rational(3, 2), Rational(3)};
    CHECK(Rational(15, 4) * oracle_eval(shifted, Rational(1, 3)) == Rational(-215, 72));
  }

  TEST_CASE("degree one zero") {
    const JacobiParams p{1, Rational(1, 3), Rational(100)};
    const auto zeros = oracle_zeros(p, 32);
    REQUIRE(zeros.size() == 1);
    const Rational expected = (p.beta - p.alpha) / (p.alpha + p.beta + Rational(2));
    CHECK(zeros[0].lo <= expected);
    CHECK(expected <= zeros[0].hi);
  }

  TEST_CASE("certified zeros: frozen n=5, alpha=1/3, beta=100") {
    const JacobiParams p{5, Rational(1, 3), Rational(100)};
    const auto zeros = oracle_zeros(p, 32);
    REQUIRE(zeros.size() == 5);
    const char* expected[] = {"0.76522635336509861034707476619762109", "0.86243963207185024441696302445933761",
                              "0.92687242971591365673687306700565127", "0.96913127601820288351792611685847864",
                              "0.99294662302833037537391227019190233"};
    const Real tolerance = pow10(-30, digits_to_bits(40));
    const Rational width = Rational(1) / pow(Rational(10), 31);
    for (int i = 0; i < 5; ++i) {
      CHECK(zeros[i].index == i + 1);
      CHECK(relative_error(zeros[i].midpoint, testing::decimal_literal(expected[i]), 40) < tolerance);
      CHECK(zeros[i].hi - zeros[i].lo <= width);
      CHECK(oracle_eval(p, zeros[i].lo).sign() * oracle_eval(p, zeros[i].hi).sign() < 0);
    }
  }

  TEST_CASE("zeros for larger degree stay ordered and certified") {
    const JacobiParams p{50, Rational(1, 3), Rational(100)};
    const auto zeros = oracle_zeros(p, 32);
    REQUIRE(zeros.size() == 50);
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) CHECK(zeros[i].hi < zeros[i + 1].lo);
    CHECK(zeros.front().lo > Rational(-1));
    CHECK(zeros.back().hi < Rational(1));
  }

  TEST_CASE("symmetry relation is exact") {
    const auto check = testing::symmetry_suite(13);
    INFO(check.detail);
    CHECK(check.ok);
  }

  TEST_CASE("relative error") {
    CHECK(relative_error_exact(Rational(101, 100), Rational(1)) == Rational(1, 100));
    CHECK_THROWS_AS(relative_error_exact(Rational(1), Rational(0)), std::domain_error);
    const Real approx(Rational(3, 4), 128);
    CHECK(relative_error(approx, Rational(1), 32).to_string(3) == "2.50e-01");
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(oracle_eval(JacobiParams{-1, Rational(0), Rational(0)}, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(oracle_eval(JacobiParams{2, Rational(-1), Rational(0)}, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(oracle_zeros(JacobiParams{2, Rational(0), Rational(-3, 2)}, 32), std::invalid_argument);
  }
}
