// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace gdc
{

using vec3 = std::array<double, 3>;

// Downward-facing LED luminaire with a generalized Lambertian beam.
struct led
{
    vec3 position{};         // metres
    double half_angle_deg{}; // semi-angle at half luminous intensity
};

// Upward-facing photodiode with an idealised non-imaging concentrator.
struct photodiode
{
    vec3 position{};          // metres
    double fov_deg{};         // field-of-view semi-angle, gain is zero beyond it
    double area_m2{};         // physical detector area
    double refractive_index{};// concentrator lens index
};

// Lambertian mode number from the half-intensity semi-angle.
inline double lambert_order(double half_angle_deg)
{
    const double c = std::cos(half_angle_deg * std::numbers::pi / 180.0);
    return -std::numbers::ln2 / std::log(c);
}

// Optical concentrator gain inside the field of view; zero outside.
// The boundary angle itself is treated as inside.
inline double concentrator_gain(double incidence_deg, double fov_deg, double refractive_index)
{
    if (incidence_deg > fov_deg)
        return 0.0;
    const double s = std::sin(fov_deg * std::numbers::pi / 180.0);
    return refractive_index * refractive_index / (s * s);
}

// DC gain of the line-of-sight path between one LED and one photodiode.
// Both devices face the vertical axis (LED down, PD up), which matches a
// ceiling-mounted luminaire over a desk-height receiver plane and makes the
// emission and incidence angles share the same cosine.
double los_gain(const led &tx, const photodiode &rx);

} // namespace gdc
