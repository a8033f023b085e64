// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <doctest.h>

#include <numeric>

#include "gdc/errors.hpp"
#include "gdc/signal.hpp"

using namespace gdc;

TEST_SUITE_BEGIN("signal");

TEST_CASE("plan resolution splits the word budget")
{
    SUBCASE("reference dimming 0.5 with five active cells")
    {
        const dimming_plan plan = resolve_plan(4, 2, 8, 0.5, 5);
        CHECK(plan.p1 == 5); // floor(log2 C(8,5) = 56)
        CHECK(plan.p2 == 3);
        CHECK(plan.m == 8);
        CHECK(plan.eta_e == doctest::Approx(0.8).epsilon(1e-12));
    }
    SUBCASE("reference dimming 0.35 with four active cells")
    {
        const dimming_plan plan = resolve_plan(4, 2, 8, 0.35, 4);
        CHECK(plan.p1 == 6); // floor(log2 C(8,4) = 70)
        CHECK(plan.m == 4);
        CHECK(plan.eta_e == doctest::Approx(0.7).epsilon(1e-12));
    }
    SUBCASE("pattern bits never exceed the word length")
    {
        const dimming_plan plan = resolve_plan(4, 3, 3, 0.25, 3);
        CHECK(plan.p1 == 3); // C(12,3) = 220 could index 7 bits, P caps it
        CHECK(plan.m == 1);
    }
    SUBCASE("single-pattern corner")
    {
        const dimming_plan plan = resolve_plan(4, 2, 8, 1.0, 8);
        CHECK(plan.p1 == 0); // C(8,8) = 1
        CHECK(plan.m == 256);
        CHECK(plan.eta_e == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("plan rejects unreachable dimming")
{
    CHECK_THROWS_AS((void)resolve_plan(4, 2, 8, 0.5, 2), infeasible_error); // eta_e = 2
    CHECK_THROWS_AS((void)resolve_plan(4, 2, 8, 1.2, 8), config_error);
    CHECK_THROWS_AS((void)resolve_plan(4, 2, 8, 0.0, 4), config_error);
    CHECK_THROWS_AS((void)resolve_plan(4, 2, 8, 0.5, 0), config_error);
    CHECK_THROWS_AS((void)resolve_plan(4, 2, 8, 0.5, 9), config_error);
}

TEST_CASE("eligible range endpoints")
{
    SUBCASE("fractional target rounds up")
    {
        const ns_range r = eligible_ns_range(4, 2, 0.35); // 0.35*8 = 2.8
        CHECK(r.lo == 3);
        CHECK(r.hi == 8);
    }
    SUBCASE("integral product keeps its own count")
    {
        const ns_range r = eligible_ns_range(4, 2, 0.25); // exactly 2
        CHECK(r.lo == 2);
        // A value that is integral only up to roundoff must not bump up.
        const ns_range r2 = eligible_ns_range(4, 2, 0.1 + 0.1 + 0.05); // 0.25 with noise
        CHECK(r2.lo == 2);
    }
    SUBCASE("full brightness needs every cell")
    {
        const ns_range r = eligible_ns_range(4, 2, 1.0);
        CHECK(r.lo == 8);
        CHECK(r.hi == 8);
    }
}

TEST_CASE("constellation matches the closed form")
{
    SUBCASE("upper range edge binds")
    {
        // mean = 0.1 + 0.7*1.9 = 1.43, nearer to i_high.
        const constellation c = optimal_constellation(0.7, 4, 0.1, 2.0);
        CHECK(c.mean == doctest::Approx(1.43).epsilon(1e-12));
        CHECK(c.spacing == doctest::Approx(0.38).epsilon(1e-12));
        REQUIRE(c.levels.size() == 4);
        CHECK(c.levels[0] == doctest::Approx(0.86).epsilon(1e-12));
        CHECK(c.levels[1] == doctest::Approx(1.24).epsilon(1e-12));
        CHECK(c.levels[2] == doctest::Approx(1.62).epsilon(1e-12));
        CHECK(c.levels[3] == doctest::Approx(2.00).epsilon(1e-12));
    }
    SUBCASE("lower range edge binds")
    {
        // mean = 0.1 + 0.2*1.9 = 0.48, nearer to i_low.
        const constellation c = optimal_constellation(0.2, 4, 0.1, 2.0);
        CHECK(c.spacing == doctest::Approx(2.0 * 0.38 / 3.0).epsilon(1e-12));
        CHECK(c.levels.front() == doctest::Approx(0.1).epsilon(1e-9));
    }
    SUBCASE("single level is the mean")
    {
        const constellation c = optimal_constellation(0.8, 1, 0.1, 2.0);
        CHECK(c.spacing == 0.0);
        REQUIRE(c.levels.size() == 1);
        CHECK(c.levels[0] == doctest::Approx(0.1 + 0.8 * 1.9).epsilon(1e-12));
    }
    SUBCASE("full drive collapses the spacing")
    {
        const constellation c = optimal_constellation(1.0, 8, 0.1, 2.0);
        CHECK(c.spacing == 0.0);
        for (double lv : c.levels)
            CHECK(lv == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("constellation invariants hold across the parameter space")
{
    for (unsigned m : {2u, 4u, 8u, 16u})
        for (double eta_e : {0.05, 0.2, 0.43, 0.5, 0.77, 0.98})
        {
            const constellation c = optimal_constellation(eta_e, m, 0.1, 2.0);
            REQUIRE(c.levels.size() == m);
            const double mean =
                std::accumulate(c.levels.begin(), c.levels.end(), 0.0) / m;
            CAPTURE(m);
            CAPTURE(eta_e);
            // Mean pinned to the dimming target, levels inside the drive
            // range, uniform ascending spacing.
            CHECK(mean == doctest::Approx(c.mean).epsilon(1e-12));
            CHECK(c.levels.front() >= 0.1 - 1e-9);
            CHECK(c.levels.back() <= 2.0 + 1e-9);
            for (std::size_t i = 1; i < c.levels.size(); ++i)
                CHECK(c.levels[i] - c.levels[i - 1] ==
                      doctest::Approx(c.spacing).epsilon(1e-9));
            // One range edge is always attained, else spacing could grow.
            const bool low_tight = std::abs(c.levels.front() - 0.1) < 1e-9;
            const bool high_tight = std::abs(c.levels.back() - 2.0) < 1e-9;
            CHECK((low_tight || high_tight));
        }
}

TEST_CASE("constellation domain errors")
{
    CHECK_THROWS_AS((void)optimal_constellation(0.5, 3, 0.1, 2.0), config_error);
    CHECK_THROWS_AS((void)optimal_constellation(0.5, 0, 0.1, 2.0), config_error);
    CHECK_THROWS_AS((void)optimal_constellation(0.0, 4, 0.1, 2.0), config_error);
    CHECK_THROWS_AS((void)optimal_constellation(1.1, 4, 0.1, 2.0), config_error);
    CHECK_THROWS_AS((void)optimal_constellation(0.5, 4, 2.0, 0.1), config_error);
}

TEST_SUITE_END();
