// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cmath>

#include "gdc/config.hpp"
#include "gdc/errors.hpp"
#include "gdc/illumination.hpp"

using namespace gdc;

namespace
{

const std::vector<led> &reference_leds()
{
    static const std::vector<led> leds = parse_config("").room.leds;
    return leds;
}

// Direct per-point reimplementation of the radiant kernel, kept separate
// from the library loop so the map test exercises two code paths.
double direct_illuminance(const std::vector<led> &leds, const std::vector<double> &probs,
                          double eta_e, double x, double y, double z)
{
    double sum = 0.0;
    for (std::size_t n = 0; n < leds.size(); ++n)
    {
        const double dx = x - leds[n].position[0];
        const double dy = y - leds[n].position[1];
        const double dz = z - leds[n].position[2];
        const double d2 = dx * dx + dy * dy + dz * dz;
        const double d = std::sqrt(d2);
        const double cos = (leds[n].position[2] - z) / d;
        if (cos <= 0.0)
            continue;
        const double l = lambert_order(leds[n].half_angle_deg);
        sum += probs[n] * eta_e * std::pow(cos, l + 1.0) / d2;
    }
    return sum;
}

} // namespace

TEST_SUITE_BEGIN("illumination");

TEST_CASE("uniformity ratio is minimum over mean")
{
    illumination_grid g;
    g.nx = 2;
    g.ny = 1;
    g.x_min = 0.0;
    g.x_max = 1.0;
    g.values = {1.0, 3.0};
    CHECK(uniformity_ratio(g) == doctest::Approx(0.5).epsilon(1e-15));

    g.values = {2.0, 2.0};
    CHECK(uniformity_ratio(g) == doctest::Approx(1.0).epsilon(1e-15));

    g.values.clear();
    CHECK_THROWS_AS((void)uniformity_ratio(g), config_error);
    g.values = {0.0, 0.0};
    CHECK_THROWS_AS((void)uniformity_ratio(g), numeric_error);
}

TEST_CASE("grid axes include both endpoints")
{
    const illumination_grid g =
        illuminance_map(reference_leds(), {0.5, 0.5, 0.5, 0.5}, 1.0, 5, 3, 0.0, 4.0, 1.0, 3.0,
                        0.75);
    CHECK(g.x_at(0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g.x_at(4) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(g.x_at(2) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g.y_at(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.y_at(2) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(g.values.size() == 15);
}

TEST_CASE("map values match a direct per-point summation")
{
    const std::vector<double> probs{0.7, 0.1, 0.15, 0.05};
    const illumination_grid g =
        illuminance_map(reference_leds(), probs, 0.3, 7, 9, 0.5, 3.5, 0.25, 3.75, 0.85);
    for (unsigned iy = 0; iy < g.ny; ++iy)
        for (unsigned ix = 0; ix < g.nx; ++ix)
        {
            const double want =
                direct_illuminance(reference_leds(), probs, 0.3, g.x_at(ix), g.y_at(iy), 0.85);
            CHECK(g.values[iy * g.nx + ix] == doctest::Approx(want).epsilon(1e-12));
        }
    // Two cells frozen from an independent evaluation.
    CHECK(g.values[0] == doctest::Approx(0.0479846165922428).epsilon(1e-12));
    CHECK(g.values[40] == doctest::Approx(0.01881402992749282).epsilon(1e-12));
    CHECK(uniformity_ratio(g) == doctest::Approx(0.2256595083717301).epsilon(1e-12));
}

TEST_CASE("reference room flatness under equal drive probabilities")
{
    const illumination_grid g = illuminance_map(reference_leds(), {0.5, 0.5, 0.5, 0.5}, 1.0, 50,
                                                50, 0.0, 4.0, 0.0, 4.0, 0.75);
    CHECK(uniformity_ratio(g) == doctest::Approx(0.41931315880966524).epsilon(1e-12));
    CHECK(g.values[0] == doctest::Approx(0.08114694296822403).epsilon(1e-12));
    CHECK(g.values[25 * 50 + 25] == doctest::Approx(0.23904619077882205).epsilon(1e-12));

    // Equal probabilities over a symmetric layout leave the field symmetric.
    for (unsigned iy = 0; iy < 50; ++iy)
        for (unsigned ix = 0; ix < 50; ++ix)
        {
            const double v = g.values[iy * 50 + ix];
            CHECK(v == doctest::Approx(g.values[iy * 50 + (49 - ix)]).epsilon(1e-12));
            CHECK(v == doctest::Approx(g.values[(49 - iy) * 50 + ix]).epsilon(1e-12));
        }
}

TEST_CASE("uniformity is invariant to the electrical scale")
{
    const std::vector<double> probs{0.9, 0.3, 0.6, 0.2};
    const illumination_grid a =
        illuminance_map(reference_leds(), probs, 0.2, 21, 21, 0.0, 4.0, 0.0, 4.0, 0.75);
    const illumination_grid b =
        illuminance_map(reference_leds(), probs, 0.9, 21, 21, 0.0, 4.0, 0.0, 4.0, 0.75);
    CHECK(uniformity_ratio(a) == doctest::Approx(uniformity_ratio(b)).epsilon(1e-12));
    // The fields themselves scale linearly.
    CHECK(b.values[55] / a.values[55] == doctest::Approx(0.9 / 0.2).epsilon(1e-12));
}

TEST_CASE("normalised uniformity against the equal-probability reference")
{
    SUBCASE("equal probabilities score exactly one")
    {
        const double nuir = normalized_uniformity(reference_leds(), {0.25, 0.25, 0.25, 0.25},
                                                  0.8, 50, 50, 0.0, 4.0, 0.0, 4.0, 0.75);
        CHECK(nuir == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("lopsided probabilities pay a uniformity cost")
    {
        const double nuir = normalized_uniformity(reference_leds(), {0.5, 0.5, 0.25, 0.25}, 1.0,
                                                  50, 50, 0.0, 4.0, 0.0, 4.0, 0.75);
        CHECK(nuir == doctest::Approx(0.7687514296364945).epsilon(1e-12));
        CHECK(nuir < 1.0);
    }
    SUBCASE("never beats the balanced reference on this layout")
    {
        const std::vector<std::vector<double>> trials{
            {1.0, 0.0, 0.0, 0.0}, {0.8, 0.6, 0.4, 0.2}, {0.1, 0.9, 0.9, 0.1}};
        for (const auto &probs : trials)
        {
            const double nuir = normalized_uniformity(reference_leds(), probs, 0.5, 25, 25,
                                                      0.0, 4.0, 0.0, 4.0, 0.75);
            CHECK(nuir <= 1.0 + 1e-12);
        }
    }
}

TEST_SUITE_END();
