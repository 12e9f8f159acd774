#include <doctest.h>

#include "chainsched/rational.hpp"

using chainsched::Rational;
using chainsched::ceil_div;

TEST_SUITE("rational") {

TEST_CASE("arithmetic is exact") {
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(14, 3) - Rational(2) == Rational(8, 3));
    CHECK(Rational(3, 4) * Rational(8, 9) == Rational(2, 3));
    CHECK(Rational(5, 2) / Rational(5) == Rational(1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
}

TEST_CASE("comparisons cross-multiply exactly") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(1, 3) > Rational(33, 100));
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(7, 2) <= Rational(7, 2));
    // would misorder under double rounding
    Rational a(1000000000000000001LL, 3);
    Rational b(1000000000000000002LL, 3);
    CHECK(a < b);
}

TEST_CASE("infinity compares above everything") {
    Rational inf = Rational::infinity();
    CHECK(inf.is_infinite());
    CHECK(Rational(1'000'000) < inf);
    CHECK(inf == Rational::infinity());
    CHECK_FALSE(inf < inf);
    CHECK(inf + Rational(3) == inf);
}

TEST_CASE("from_decimal parses exact tenths") {
    CHECK(Rational::from_decimal("6342.1") == Rational(63421, 10));
    CHECK(Rational::from_decimal("7027.0") == Rational(7027));
    CHECK(Rational::from_decimal("-0.5") == Rational(-1, 2));
    CHECK(Rational::from_decimal("1.5e-3") == Rational(3, 2000));
    CHECK(Rational::from_decimal("2e2") == Rational(200));
    CHECK_THROWS(Rational::from_decimal("abc"));
    CHECK_THROWS(Rational::from_decimal(""));
}

TEST_CASE("ceil_div boundaries") {
    CHECK(ceil_div(Rational(16), Rational(9)) == 2);
    CHECK(ceil_div(Rational(6), Rational(7)) == 1);
    CHECK(ceil_div(Rational(18), Rational(9)) == 2); // exact multiple stays k
    CHECK(ceil_div(Rational(0), Rational(9)) == 0);
    CHECK(ceil_div(Rational(181, 10), Rational(9)) == 3);
}

TEST_CASE("binary-search-style midpoints stay exact") {
    // mimic ~40 halvings of the scheduling search interval
    Rational lo(465269, 40); // a weight-sum / core-count bound
    Rational hi = lo + Rational(127798, 10);
    for (int i = 0; i < 40; ++i) {
        Rational mid = (lo + hi) / Rational(2);
        CHECK(lo <= mid);
        CHECK(mid <= hi);
        if (i % 2 == 0)
            lo = mid;
        else
            hi = mid;
    }
    CHECK(hi - lo > Rational(0));
}

} // TEST_SUITE
