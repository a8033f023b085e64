// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <doctest.h>

#include <numeric>

#include "gdc/codebook.hpp"
#include "gdc/errors.hpp"

using namespace gdc;

namespace
{

std::vector<std::uint64_t> totals_of(const codebook &cb)
{
    return cb.led_totals;
}

std::vector<std::uint64_t> selected_ranks(const codebook &cb)
{
    std::vector<std::uint64_t> z;
    for (const auto &p : cb.patterns)
        z.push_back(p.z);
    return z;
}

} // namespace

TEST_SUITE_BEGIN("codebook");

TEST_CASE("pattern enumeration is rank ordered and complete")
{
    const auto all = enumerate_patterns(4, 2, 3);
    REQUIRE(all.size() == binomial(8, 3));
    for (std::size_t i = 0; i < all.size(); ++i)
    {
        CHECK(all[i].z == i);
        CHECK(all[i].cells.size() == 3);
        unsigned count_sum = std::accumulate(all[i].led_counts.begin(),
                                             all[i].led_counts.end(), 0u);
        CHECK(count_sum == 3);
    }
}

TEST_CASE("pattern matrix places cells row-major")
{
    // Cells {5, 2, 0} of a 4x2 matrix: cell 5 = LED 2 slot 1, cell 2 =
    // LED 1 slot 0, cell 0 = LED 0 slot 0.
    activation_pattern p;
    p.z = combinadic_encode({5, 2, 0});
    p.cells = {5, 2, 0};
    p.led_counts = {1, 1, 1, 0};
    const Eigen::MatrixXd k = pattern_matrix(p, 4, 2);
    CHECK(k(0, 0) == 1.0);
    CHECK(k(1, 0) == 1.0);
    CHECK(k(2, 1) == 1.0);
    CHECK(k.sum() == 3.0);
}

TEST_CASE("sequential selection takes the lowest ranks")
{
    const codebook cb = select_sequential(4, 2, 4, 6);
    REQUIRE(cb.size() == 64);
    for (std::size_t i = 0; i < cb.size(); ++i)
        CHECK(cb.patterns[i].z == i);
}

TEST_CASE("incremental selection balances the reference instance exactly")
{
    const codebook cb = select_incremental(4, 2, 4, 6);
    REQUIRE(cb.size() == 64);
    CHECK(totals_of(cb) == std::vector<std::uint64_t>{64, 64, 64, 64});

    const auto z = selected_ranks(cb);
    CHECK(std::vector<std::uint64_t>(z.begin(), z.begin() + 5) ==
          std::vector<std::uint64_t>{3, 4, 5, 6, 7});
    CHECK(std::vector<std::uint64_t>(z.end() - 3, z.end()) ==
          std::vector<std::uint64_t>{64, 65, 66});
}

TEST_CASE("incremental totals across the reference family")
{
    struct instance
    {
        unsigned n_s, p1;
        std::vector<std::uint64_t> totals;
    };
    // Frozen from an independent reimplementation of the selector.
    const instance table[] = {
        {1, 3, {2, 2, 2, 2}},     {2, 4, {8, 7, 9, 8}},     {3, 5, {24, 25, 25, 22}},
        {4, 6, {64, 64, 64, 64}}, {5, 5, {42, 42, 39, 37}}, {6, 4, {26, 25, 23, 22}},
        {7, 3, {14, 14, 14, 14}},
    };
    for (const auto &inst : table)
    {
        const codebook cb = select_incremental(4, 2, inst.n_s, inst.p1);
        CAPTURE(inst.n_s);
        CHECK(totals_of(cb) == inst.totals);
    }

    CHECK(totals_of(select_incremental(4, 3, 3, 7)) ==
          std::vector<std::uint64_t>{96, 96, 96, 96});
    CHECK(totals_of(select_incremental(4, 3, 2, 6)) ==
          std::vector<std::uint64_t>{31, 33, 33, 31});
}

TEST_CASE("incremental ranks stay ascending and unique")
{
    const codebook cb = select_incremental(4, 2, 5, 5);
    const auto z = selected_ranks(cb);
    for (std::size_t i = 1; i < z.size(); ++i)
        CHECK(z[i - 1] < z[i]);
}

TEST_CASE("incremental never balances worse than sequential")
{
    for (unsigned n_t = 2; n_t <= 4; ++n_t)
        for (unsigned t = 1; t <= 3; ++t)
            for (unsigned n_s = 1; n_s <= n_t * t; ++n_s)
            {
                const std::uint64_t z_count = binomial(n_t * t, n_s);
                for (unsigned p1 = 0; p1 <= 8; ++p1)
                {
                    if ((std::uint64_t{1} << p1) > z_count)
                        break;
                    const double vi = led_total_variance(select_incremental(n_t, t, n_s, p1));
                    const double vs = led_total_variance(select_sequential(n_t, t, n_s, p1));
                    CAPTURE(n_t);
                    CAPTURE(t);
                    CAPTURE(n_s);
                    CAPTURE(p1);
                    CHECK(vi <= vs + 1e-12);
                }
            }
}

TEST_CASE("exhaustive search is optimal on a toy instance")
{
    const codebook ex = select_exhaustive(2, 2, 2, 2);
    const codebook inc = select_incremental(2, 2, 2, 2);
    CHECK(led_total_variance(ex) <= led_total_variance(inc) + 1e-12);
    CHECK(ex.size() == 4);
}

TEST_CASE("exhaustive search respects its subset cap")
{
    // C(C(8,4), 16) is astronomically large.
    CHECK_THROWS_AS((void)select_exhaustive(4, 2, 4, 4), resource_error);
}

TEST_CASE("activation probabilities are consistent with totals")
{
    const codebook cb = select_incremental(4, 2, 4, 6);
    const auto probs = activation_probability(cb);
    REQUIRE(probs.size() == 4);
    double sum = 0.0;
    for (double p : probs)
    {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        sum += p;
    }
    // Summed over LEDs, each pattern contributes N_S of N_t*T cells.
    CHECK(sum == doctest::Approx(4.0 / 2.0).epsilon(1e-12));
    // Perfectly balanced instance: all probabilities equal N_S/(N_t*T).
    for (double p : probs)
        CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("dimension validation")
{
    CHECK_THROWS_AS((void)select_sequential(4, 2, 0, 1), config_error);
    CHECK_THROWS_AS((void)select_sequential(4, 2, 9, 1), config_error);
    CHECK_THROWS_AS((void)select_sequential(4, 2, 4, 7), config_error); // 2^7 > C(8,4)
    CHECK_THROWS_AS((void)select_incremental(0, 2, 1, 0), config_error);
}

TEST_CASE("method names round-trip")
{
    for (auto m : {selection_method::sequential, selection_method::incremental,
                   selection_method::exhaustive})
        CHECK(selection_method_from_name(selection_method_name(m)) == m);
    CHECK_THROWS_AS((void)selection_method_from_name("greedy"), config_error);
}

TEST_SUITE_END();
