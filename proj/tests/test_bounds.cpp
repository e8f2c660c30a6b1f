#include <doctest.h>

#include "pal/bounds.hpp"
#include "pal/errors.hpp"

using namespace pal;

TEST_CASE("spot ratios at eps one quarter") {
    const Rational eps(1, 4);
    // independent set, gadget pair 3/2 + 3/2
    CHECK(corollary_bound(3, eps, Sense::Maximize) == Rational(12, 11));
    CHECK(max_ratio_bound(3, 3, 2, 2, eps) == Rational(12, 11));
    // cut maximization, 15/14 + 15/14
    CHECK(corollary_bound(15, eps, Sense::Maximize) == Rational(60, 59));
    CHECK(max_ratio_bound(15, 15, 14, 14, eps) == Rational(60, 59));
    // clause satisfaction, 8/7 + 8/7
    CHECK(corollary_bound(8, eps, Sense::Maximize) == Rational(32, 31));
    CHECK(max_ratio_bound(8, 8, 7, 7, eps) == Rational(32, 31));
    // job scheduling, 6/5 + 6/5
    CHECK(corollary_bound(6, eps, Sense::Maximize) == Rational(24, 23));
    CHECK(max_ratio_bound(6, 6, 5, 5, eps) == Rational(24, 23));
    // vertex cover on the mixed gadget, 3/4 + 3/4
    CHECK(corollary_bound(3, eps, Sense::Minimize) == Rational(13, 12));
    CHECK(min_ratio_bound(3, 3, 4, 4, eps) == Rational(13, 12));
    // vertex cover on the regular gadget, 5/6 + 5/6
    CHECK(corollary_bound(5, eps, Sense::Minimize) == Rational(21, 20));
    CHECK(min_ratio_bound(5, 5, 6, 6, eps) == Rational(21, 20));
    // unequal optima: 3/2 paired with 4/3
    CHECK(max_ratio_bound(3, 4, 2, 3, eps) == Rational(20, 19));
}

TEST_CASE("equal-optima bounds match the general expression everywhere") {
    for (long opt = 1; opt <= 20; ++opt) {
        for (long k = 1; k <= 49; ++k) {
            Rational eps(k, 100);
            CHECK(corollary_bound(opt, eps, Sense::Minimize) ==
                  min_ratio_bound(opt, opt, opt + 1, opt + 1, eps));
            CHECK(corollary_bound(opt, eps, Sense::Maximize) ==
                  max_ratio_bound(opt, opt, opt - 1, opt - 1, eps));
        }
    }
}

TEST_CASE("ratio bounds grow with the tolerated fraction") {
    struct Tuple {
        long o1, o2, b1, b2;
        bool min;
    };
    const Tuple tuples[] = {
        {3, 3, 4, 4, true}, {5, 5, 6, 6, true}, {3, 3, 2, 2, false},
        {15, 15, 14, 14, false}, {3, 4, 2, 3, false}, {2, 5, 7, 11, true},
    };
    for (const auto& t : tuples) {
        Rational prev(1);
        for (long k = 1; k <= 49; ++k) {
            Rational eps(k, 100);
            Rational bound = t.min ? min_ratio_bound(t.o1, t.o2, t.b1, t.b2, eps)
                                   : max_ratio_bound(t.o1, t.o2, t.b1, t.b2, eps);
            CHECK(bound > prev);
            prev = bound;
        }
    }
}

TEST_CASE("zero bad value takes the divergent limit") {
    CHECK(max_ratio_bound(3, 3, 0, 0, Rational(1, 4)) == Rational(4, 3));
    // finite ratios stay below the limit
    for (long bad = 1; bad <= 3; ++bad) {
        CHECK(max_ratio_bound(3, 3, bad, bad, Rational(1, 4)) < Rational(4, 3));
    }
}

TEST_CASE("advice threshold values") {
    CHECK(advice_threshold(160, 8, Rational(1, 4)) ==
          doctest::Approx(1.8872187554086717).epsilon(1e-12));
    CHECK(advice_threshold(100, 1, Rational(1, 4)) ==
          doctest::Approx(9.436093777043359).epsilon(1e-12));
    CHECK(advice_threshold(0, 8, Rational(1, 4)) == 0.0);
    CHECK(advice_threshold(160, 8, Rational(1, 2)) == 0.0);
    // halving the gadget size doubles the threshold
    CHECK(advice_threshold(160, 4, Rational(1, 3)) ==
          doctest::Approx(2 * advice_threshold(160, 8, Rational(1, 3))).epsilon(1e-12));
}

TEST_CASE("bound domain errors") {
    const Rational eps(1, 4);
    CHECK_THROWS_AS(min_ratio_bound(3, 3, 4, 4, Rational(0)), DomainError);
    CHECK_THROWS_AS(min_ratio_bound(3, 3, 4, 4, Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(max_ratio_bound(3, 3, 2, 2, Rational(3, 5)), DomainError);
    CHECK_THROWS_AS(min_ratio_bound(0, 3, 4, 4, eps), DomainError);
    CHECK_THROWS_AS(min_ratio_bound(4, 3, 5, 5, eps), DomainError);   // opt2 < opt1
    CHECK_THROWS_AS(min_ratio_bound(3, 3, 2, 4, eps), DomainError);   // bad below opt
    CHECK_THROWS_AS(max_ratio_bound(3, 3, 4, 2, eps), DomainError);   // bad above opt
    CHECK_THROWS_AS(max_ratio_bound(3, 3, -1, 2, eps), DomainError);
    CHECK_THROWS_AS(corollary_bound(0, eps, Sense::Minimize), DomainError);
    CHECK_THROWS_AS(advice_threshold(160, 8, Rational(0)), DomainError);
    CHECK_THROWS_AS(advice_threshold(160, 8, Rational(2, 3)), DomainError);
    CHECK_THROWS_AS(advice_threshold(-1, 8, Rational(1, 4)), DomainError);
    CHECK_THROWS_AS(advice_threshold(160, 0, Rational(1, 4)), DomainError);
}
