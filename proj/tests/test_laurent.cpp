#include "doctest.h"

#include "cpq/laurent.hpp"
#include "cpq/qcomb.hpp"
#include "cpq/rng.hpp"

using namespace cpq;

namespace {

LaurentPoly random_poly(Rng& rng) {
  LaurentPoly p;
  long n_terms = 1 + static_cast<long>(rng.below(4));
  for (long t = 0; t < n_terms; ++t) {
    long e = static_cast<long>(rng.below(9)) - 4;
    long num = static_cast<long>(rng.below(7)) - 3;
    p += LaurentPoly::term(Rational(num), e);
  }
  return p;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == LaurentPoly::one());
  // [3] = q^2 + 1 + q^-2, frozen from dividing (q^3 - q^-3) by (q - q^-1)
  LaurentPoly expect = LaurentPoly::q_power(2) + LaurentPoly::one() + LaurentPoly::q_power(-2);
  CHECK(qint(3) == expect);
  // [2] = q + q^-1
  CHECK(qint(2) == LaurentPoly::q_power(1) + LaurentPoly::q_power(-1));

  SUBCASE("antisymmetry [-x] = -[x]") {
    for (long x = -12; x <= 12; ++x) CHECK(qint(-x) == -qint(x));
  }
  SUBCASE("classical limit at q=1") {
    for (long x = 0; x <= 12; ++x) CHECK(qint(x).eval(Rational(1)) == Rational(x));
  }
}

TEST_CASE("q-binomials") {
  CHECK(qbinomial(1, 1) == LaurentPoly::one());  // alpha_{1,0}: single ratio factor
  CHECK(qbinomial(5, 0) == LaurentPoly::one());  // empty product convention
  CHECK(qbinomial(2, 1) == LaurentPoly::one() + LaurentPoly::q_power(2));

  SUBCASE("q=1 gives classical binomials") {
    long pascal[11][11] = {};
    for (long n = 0; n <= 10; ++n) {
      pascal[n][0] = 1;
      for (long k = 1; k <= n; ++k)
        pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
    }
    for (long n = 0; n <= 10; ++n)
      for (long k = 0; k <= n; ++k)
        CHECK(qbinomial(n, k).eval(Rational(1)) == Rational(pascal[n][k]));
  }

  SUBCASE("all frame weights to n = 8 are exact Laurent polynomials") {
    for (long n = 0; n <= 8; ++n) {
      for (long mu = 0; mu <= n; ++mu) {
        CHECK_NOTHROW(frame_alpha(n, mu));
        CHECK_NOTHROW(frame_beta(n, mu));
      }
    }
    CHECK(frame_alpha(1, 0) == LaurentPoly::one());
    CHECK(frame_alpha(1, 1) == LaurentPoly::one());  // empty product
    CHECK(frame_beta(1, 0) == LaurentPoly::one());
    CHECK(frame_beta(1, 1) == LaurentPoly::q_power(2));
  }
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("exact division") {
  LaurentPoly num = LaurentPoly::q_power(3) - LaurentPoly::q_power(-3);
  LaurentPoly den = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
  CHECK(num.divide_exact(den) == qint(3));
  CHECK_THROWS_AS((LaurentPoly::one() + LaurentPoly::q_power(1)).divide_exact(den),
                  ExactDivisionFailure);
}

TEST_CASE("rational evaluation") {
  Rational half(1, 2);
  CHECK(LaurentRational(qint(2)).eval(half) == Rational(5, 2));
  LaurentRational f(LaurentPoly::one(), LaurentPoly::one() - LaurentPoly::q_power(2));
  CHECK(f.eval(half) == Rational(4, 3));
  CHECK_THROWS_AS(f.eval(Rational(1)), PoleAtSample);
  CHECK_THROWS_AS(LaurentRational(qint(2)).eval(Rational(0)), PoleAtSample);
  CHECK_THROWS_AS(LaurentRational::q_half_power(1).eval(half), HalfPowerEval);
  // [n] at q=1 equals n when evaluated directly (no pole: [n] is polynomial)
  CHECK(LaurentRational(qint(7)).eval(Rational(1)) == Rational(7));
}

TEST_CASE("laurent rational canonical form and equality") {
  // (q^2 - q^4) / (1 - q^2) reduces to q^2
  LaurentRational r(LaurentPoly::q_power(2) - LaurentPoly::q_power(4),
                    LaurentPoly::one() - LaurentPoly::q_power(2));
  CHECK(r == LaurentRational::q_power(2));
  CHECK(r.is_polynomial());

  // equality across distinct representatives via arithmetic
  LaurentRational x(LaurentPoly::one(), LaurentPoly::one() - LaurentPoly::q_power(2));
  LaurentRational y(LaurentPoly::one() + LaurentPoly::q_power(1),
                    (LaurentPoly::one() - LaurentPoly::q_power(2)) *
                        (LaurentPoly::one() + LaurentPoly::q_power(1)));
  CHECK(x == y);
  CHECK(x - y == LaurentRational::zero());

  // denominator sign convention: trailing coefficient positive
  LaurentRational z(LaurentPoly::one(), LaurentPoly::q_power(2) - LaurentPoly::one());
  CHECK(z.den().terms().front().second > 0);
  CHECK(z.to_string() == "(-1)/(1 - q^2)");

  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    LaurentPoly d1 = random_poly(rng), d2 = random_poly(rng);
    if (d1.is_zero() || d2.is_zero()) continue;
    LaurentRational u(a, d1), v(b, d2);
    CHECK(u * v == v * u);
    CHECK(u + v == v + u);
    CHECK((u + v) - v == u);
    if (!v.is_zero()) CHECK((u / v) * v == u);
  }
}

TEST_CASE("coefficient grammar round-trips") {
  CHECK(LaurentPoly::parse("q^-2") == LaurentPoly::q_power(-2));
  CHECK(LaurentPoly::parse("3/2*q^0 + q^2") ==
        LaurentPoly::term(Rational(3, 2), 0) + LaurentPoly::q_power(2));
  CHECK(LaurentPoly::parse("-1/2*q^1") == LaurentPoly::term(Rational(-1, 2), 1));
  CHECK(LaurentPoly::parse("5/3") == LaurentPoly::constant(Rational(5, 3)));
  CHECK(LaurentPoly::parse("q") == LaurentPoly::q_power(1));
  CHECK(LaurentPoly::parse("q^1/2") == LaurentPoly::q_half_power(1));
  CHECK(LaurentRational::parse("(1 - q^2)/(1 - q^4)") ==
        LaurentRational(LaurentPoly::one() - LaurentPoly::q_power(2),
                        LaurentPoly::one() - LaurentPoly::q_power(4)));

  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), d = random_poly(rng);
    if (d.is_zero()) continue;
    LaurentRational r(a, d);
    CHECK(LaurentRational::parse(r.to_string()) == r);
  }
  CHECK(LaurentRational(qint(3)).to_string() == "q^-2 + 1 + q^2");
  CHECK_THROWS_AS(LaurentPoly::parse("q^^2"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse(""), ParseError);
}
