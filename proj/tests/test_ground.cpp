#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dselim/ground.hpp"

using namespace dselim;

TEST_CASE("Rational canonical arithmetic") {
    Rational a(3, 6);
    CHECK(a == Rational(1, 2));
    CHECK(a.str() == "1/2");
    CHECK((a + a).is_one());
    CHECK((a - a).is_zero());
    CHECK((a * Rational(4)) == Rational(2));
    CHECK((Rational(7) / Rational(2)).str() == "7/2");
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK(Rational(-2, 4).str() == "-1/2");
}

TEST_CASE("Rational sigma and delta") {
    Rational c(5);
    CHECK(c.sigma() == c);
    CHECK(c.delta().is_zero());
}

TEST_CASE("ZPoly basics") {
    ZPoly t = ZPoly::t();
    ZPoly p = t * t + ZPoly(3) * t - ZPoly(1);
    CHECK(p.str() == "t^2 + 3*t - 1");
    CHECK(p.degree() == 2);
    CHECK(p.derivative().str() == "2*t + 3");
    CHECK(p.shifted(1).str() == "t^2 + 5*t + 3");
    CHECK(p.shifted(1).shifted(-1) == p);
    CHECK((p - p).is_zero());
}

TEST_CASE("ZPoly gcd and exact division") {
    ZPoly t = ZPoly::t();
    ZPoly a = (t + ZPoly(1)) * (t - ZPoly(2)) * ZPoly(6);
    ZPoly b = (t + ZPoly(1)) * (t + ZPoly(3)) * ZPoly(4);
    ZPoly g = ZPoly::gcd(a, b);
    CHECK(g.str() == "2*t + 2");
    CHECK(ZPoly::divexact(a, g) * g == a);
    CHECK(ZPoly::divexact(b, g) * g == b);
    CHECK(ZPoly::gcd(ZPoly(), b) == (t + ZPoly(1)) * (t + ZPoly(3)) * ZPoly(4));
}

TEST_CASE("RationalFunction canonical form") {
    ZPoly t = ZPoly::t();
    RationalFunction f(t * t - ZPoly(1), t + ZPoly(1));
    CHECK(f == RationalFunction(t - ZPoly(1)));
    // sign of denominator is normalized
    RationalFunction g(ZPoly(1), -t);
    CHECK(g.den().leading() > 0);
    CHECK(g.str() == "(-1)/(t)");
    CHECK_THROWS_AS(RationalFunction(ZPoly(1), ZPoly()), std::invalid_argument);
}

TEST_CASE("RationalFunction field ops") {
    RationalFunction t = RationalFunction::t();
    RationalFunction f = t * t;  // t^2
    CHECK(f.delta() == RationalFunction(2) * t);
    CHECK(f.sigma() == (t + RationalFunction(1)) * (t + RationalFunction(1)));
    CHECK(f.sigma().sigma_inv() == f);
    RationalFunction inv = RationalFunction(1) / (t + RationalFunction(1));
    CHECK((inv * (t + RationalFunction(1))).is_one());
}

TEST_CASE("RationalFunction sigma commutes with delta") {
    // sigma(delta(f)) == delta(sigma(f)) on random elements
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> small(-5, 5);
    ZPoly t = ZPoly::t();
    for (int iter = 0; iter < 100; ++iter) {
        ZPoly num, den;
        for (int d = 0; d < 3; ++d) {
            num = num * t + ZPoly(small(rng));
            den = den * t + ZPoly(small(rng));
        }
        if (den.is_zero()) den = ZPoly(1);
        RationalFunction f(num, den);
        CHECK(f.delta().sigma() == f.sigma().delta());
    }
}
