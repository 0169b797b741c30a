#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covercount/closed_form_hurwitz.hpp"
#include "covercount/errors.hpp"
#include "covercount/verify.hpp"

using namespace covercount;

TEST_CASE("twos_complete") {
    CHECK(twos_complete(1) == Rational(1, 2));
    CHECK(twos_complete(2) == Rational(1));
    CHECK(twos_complete(3) == Rational(3, 2));
    CHECK(twos_complete(7) == Rational(7, 2));
    CHECK_THROWS_AS(twos_complete(0), NonPositive);
    CHECK_THROWS_AS(twos_complete(-2), NonPositive);
}

TEST_CASE("twos_cycles") {
    CHECK(twos_cycles(3, 3, 3) == Rational(1, 6));
    CHECK(twos_cycles(2, 2, 2) == Rational(1, 4));
    CHECK(twos_cycles(3, 2, 4) == Rational(0));
    CHECK(twos_cycles(3, 4, 2) == Rational(0));
    CHECK(twos_cycles(3, 1, 5) == Rational(0));
    CHECK_THROWS_AS(twos_cycles(3, 3, 4), BadArguments);
    CHECK_THROWS_AS(twos_cycles(3, 0, 6), BadArguments);
    CHECK_THROWS_AS(twos_cycles(0, 0, 0), NonPositive);

    // Symmetric in the two cycle lengths by construction.
    for (int k = 1; k <= 6; ++k)
        for (int a = 1; a < 2 * k; ++a)
            CHECK(twos_cycles(k, a, 2 * k - a) ==
                  twos_cycles(k, 2 * k - a, a));
}

TEST_CASE("twos_even and twos_odd") {
    for (int k = 1; k <= 6; ++k) {
        CHECK(twos_even(k) == Rational(1, 2));
        CHECK(twos_odd(k) == Rational(1));
    }
    CHECK_THROWS_AS(twos_even(0), NonPositive);
    CHECK_THROWS_AS(twos_odd(0), NonPositive);
}

TEST_CASE("near_cycle_pair") {
    CHECK(near_cycle_pair(4, 1, 2) == Rational(1));
    CHECK(near_cycle_pair(4, 2, 2) == Rational(1, 2));
    CHECK(near_cycle_pair(4, 2, 3) == Rational(1));
    CHECK(near_cycle_pair(4, 1, 3) == Rational(1));
    CHECK(near_cycle_pair(6, 3, 4) == Rational(3, 2));
    CHECK(near_cycle_pair(6, 2, 4) == Rational(2));
    CHECK_THROWS_AS(near_cycle_pair(1, 1, 2), BadArguments);
    CHECK_THROWS_AS(near_cycle_pair(4, 0, 2), BadArguments);
    CHECK_THROWS_AS(near_cycle_pair(4, 3, 2), BadArguments);
    CHECK_THROWS_AS(near_cycle_pair(4, 1, 1), BadArguments);
    CHECK_THROWS_AS(near_cycle_pair(4, 1, 4), BadArguments);
}

TEST_CASE("every family matches the enumerator") {
    WorkBudget budget;
    const VerifyReport report = verify_closed_forms(5, budget);
    for (const auto& check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.pass);
    }
    CHECK(report.failures() == 0);
    CHECK(report.checks.size() >= 20);
}
