#include <doctest.h>

#include "fzzt/exact/poly.hpp"
#include "fzzt/exact/rational.hpp"
#include "fzzt/exact/serialize.hpp"
#include "fzzt/exact/series.hpp"

#include <random>

using fzzt::RatPoly;
using fzzt::Rational;

TEST_CASE("rational parse and print round trip") {
    CHECK(Rational::parse("8085/4096").str() == "8085/4096");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("+7").str() == "7");
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("3/-4"));
}

TEST_CASE("rational from double is exact") {
    CHECK(Rational::from_double(0.1).str() == "3602879701896397/36028797018963968");
    CHECK(Rational::from_double(-2.5) == Rational(-5, 2));
    CHECK_THROWS(Rational::from_double(1.0 / 0.0));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        long den1 = d(rng), den2 = d(rng);
        if (den1 == 0) den1 = 1;
        if (den2 == 0) den2 = 3;
        const Rational a(d(rng), den1), b(d(rng), den2), c(d(rng), 7);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("poly arithmetic and evaluation") {
    const RatPoly p{Rational(1), Rational(2), Rational(3)};  // 1 + 2z + 3z^2
    const RatPoly q{Rational(-1), Rational(1)};              // z - 1
    const RatPoly pq = p * q;
    CHECK(pq.degree() == 3);
    for (long k = -3; k <= 3; ++k) {
        const Rational z(k, 2);
        CHECK(pq.eval(z) == p.eval(z) * q.eval(z));
        CHECK((p + q).eval(z) == p.eval(z) + q.eval(z));
    }
    CHECK((p - p).is_zero());
    CHECK((p * Rational(0)).is_zero());
    CHECK(p.scale_argument(Rational(2)).eval(Rational(1)) == p.eval(Rational(2)));
}

TEST_CASE("series_exp of x gives 1/k!") {
    fzzt::TruncSeries<Rational> s(6);
    s[1] = RatPoly::constant(Rational(1));
    const auto e = fzzt::series_exp(s);
    for (unsigned k = 0; k <= 6; ++k) CHECK(e[k] == RatPoly::constant(Rational(1) / fzzt::factorial(k)));
}

TEST_CASE("series_exp rejects a constant term") {
    fzzt::TruncSeries<Rational> s(3);
    s[0] = RatPoly::constant(Rational(1));
    CHECK_THROWS_AS(fzzt::series_exp(s), std::invalid_argument);
}

TEST_CASE("series_exp satisfies exp(a) exp(b) = exp(a + b)") {
    fzzt::TruncSeries<Rational> a(8), b(8);
    a[1] = RatPoly{Rational(0), Rational(1)};  // x z
    a[2] = RatPoly::constant(Rational(-3, 2));
    b[3] = RatPoly::constant(Rational(-1, 3));
    CHECK(fzzt::series_exp(a) * fzzt::series_exp(b) == fzzt::series_exp(a + b));
}

TEST_CASE("rational polynomials serialize as p/q strings") {
    const RatPoly p{Rational(8085, 4096), Rational(0), Rational(1)};
    const auto j = fzzt::to_json(p);
    CHECK(j.dump() == R"(["8085/4096","0","1"])");
    CHECK(fzzt::ratpoly_from_json(j) == p);
}
