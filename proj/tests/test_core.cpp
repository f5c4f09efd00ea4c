#include "doctest.h"

#include "gln/affine.hpp"
#include "gln/errors.hpp"
#include "gln/rational.hpp"
#include "gln/rng.hpp"

using namespace gln;

TEST_SUITE_BEGIN("core");

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2)).is_integer());
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).sign() == -1);
}

TEST_CASE("affine forms are exact linear combinations") {
    AffineForm s = AffineForm::parameter("s");
    AffineForm t = AffineForm::parameter("t");
    AffineForm f = AffineForm(Rational(1, 2)) + s * Rational(2) - t;
    CHECK(f.constant() == Rational(1, 2));
    CHECK(f.coeff("s") == Rational(2));
    CHECK(f.coeff("t") == Rational(-1));
    CHECK(f.coeff("u").is_zero());
    CHECK((s - s).is_zero());
    CHECK(f - f == AffineForm{});
    CHECK(f.str() == "1/2+2s-t");
    CHECK((s * Rational(0)).is_zero());
    CHECK(AffineForm(Rational(3)).is_generically_integer());
    CHECK_FALSE((AffineForm(Rational(3)) + s).is_generically_integer());
    CHECK_FALSE(AffineForm(Rational(1, 2)).is_generically_integer());
}

TEST_CASE("interval comparison of affine forms") {
    ParamRanges ranges{{"s", Interval::open(Rational(0), Rational(1, 2))}};
    AffineForm s = AffineForm::parameter("s");

    CHECK(compare(s * Rational(2), AffineForm(Rational(1)), ranges) == Order::Less);
    CHECK(compare(s * Rational(4), AffineForm(Rational(2)), ranges) == Order::Less);
    CHECK(compare(AffineForm(Rational(1)) + s * Rational(2), AffineForm(Rational(1)), ranges) ==
          Order::Greater);
    CHECK(compare(s, s, ranges) == Order::Equal);
    // 1 - 2s and 2s straddle at s = 1/4.
    CHECK(compare(AffineForm(Rational(1)) - s * Rational(2), s * Rational(2), ranges) ==
          Order::Unknown);
    // Unbounded parameters cannot be ordered against constants.
    CHECK(compare(AffineForm::parameter("t"), AffineForm(Rational(0)), ranges) == Order::Unknown);

    Interval r = range_of(AffineForm(Rational(1)) - s * Rational(2), ranges);
    CHECK_FALSE(r.lo_unbounded);
    CHECK(r.lo == Rational(0));
    CHECK(r.lo_open);
    CHECK(r.hi == Rational(1));
}

TEST_CASE("rng is deterministic and keeps rationals small") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(99);
    for (int i = 0; i < 200; ++i) {
        long long v = r.uniform(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
        CHECK_FALSE(r.nonzero_small_rational().is_zero());
    }
}

TEST_SUITE_END();
