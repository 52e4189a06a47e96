#include "doctest.h"

#include <random>

#include "thompsonf/dyadic.hpp"

using namespace tf;

TEST_CASE("dyadic arithmetic is exact")
{
    CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));   // 1/2 + 1/4 = 3/4
    CHECK(Dyadic(1, 1) - Dyadic(1, 1) == Dyadic(0));
    CHECK(Dyadic(3, 3) * Dyadic(2) == Dyadic(3, 2));      // 3/8 * 2 = 3/4
}

TEST_CASE("halve and double")
{
    CHECK(Dyadic(1, 1).mul_pow2(-1) == Dyadic(1, 2));
    CHECK(Dyadic(3, 3).mul_pow2(1) == Dyadic(3, 2));
    CHECK(Dyadic(0).mul_pow2(-5) == Dyadic(0));
}

TEST_CASE("comparisons are exact cross-multiplication")
{
    CHECK(Dyadic(1, 1) < Dyadic(9, 4));                   // 1/2 < 9/16
    CHECK(Dyadic(3, 2) == Dyadic(3, 2));
    CHECK(Rational(1, 4) < Rational(1, 3));
}

TEST_CASE("canonical form is unique")
{
    CHECK(Dyadic(2, 2) == Dyadic(1, 1));
    CHECK(Dyadic(4, 2) == Dyadic(1, 0));
    CHECK(Dyadic(4, 2).exponent() == 0);
    CHECK(Dyadic(0, 7).exponent() == 0);
}

TEST_CASE("text forms round-trip bit-exactly")
{
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        unsigned e = rng() % 40;
        long num = static_cast<long>(rng() % 100000) - 50000;
        Dyadic d(num, e);
        CHECK(Dyadic::parse(d.str()) == d);
    }
    CHECK(Dyadic::parse("3/4") == Dyadic(3, 2));
    CHECK(Dyadic::parse("5/2^4") == Dyadic(5, 4));
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse(Rational(-7, 12).str()) == Rational(-7, 12));
    CHECK_THROWS_AS(Dyadic::parse("1/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("0.5"), ParseError);
}

TEST_CASE("arithmetic round-trip property (a+b)-b == a")
{
    std::mt19937 rng(99);
    for (int i = 0; i < 500; ++i) {
        Dyadic a(static_cast<long>(rng() % 2000) - 1000, rng() % 30);
        Dyadic b(static_cast<long>(rng() % 2000) - 1000, rng() % 30);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("dyadic embeds in rational losslessly and order-compatibly")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Dyadic a(static_cast<long>(rng() % 2000) - 1000, rng() % 20);
        Dyadic b(static_cast<long>(rng() % 2000) - 1000, rng() % 20);
        Rational ra(a), rb(b);
        CHECK(ra.is_dyadic());
        CHECK(ra.to_dyadic() == a);
        CHECK((a < b) == (ra < rb));
        CHECK((a == b) == (ra == rb));
    }
}

TEST_CASE("dyadic_between returns a strict intermediate dyadic")
{
    auto d = dyadic_between(Rational(1, 3), Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(d));
    CHECK(Rational(d) < Rational(1, 2));
    auto e = dyadic_between(Rational(7, 12), Rational(8, 12));
    CHECK(Rational(7, 12) < Rational(e));
    CHECK(Rational(e) < Rational(2, 3));
}
