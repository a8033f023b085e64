// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "gdc/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gdc/errors.hpp"

namespace gdc
{

double los_gain(const led &tx, const photodiode &rx)
{
    const double dx = rx.position[0] - tx.position[0];
    const double dy = rx.position[1] - tx.position[1];
    const double dz = rx.position[2] - tx.position[2];
    const double d2 = dx * dx + dy * dy + dz * dz;
    if (d2 <= 0.0)
        throw numeric_error("los_gain: coincident LED and photodiode");

    const double d = std::sqrt(d2);
    // LED looks straight down, PD straight up: emission and incidence
    // angles are both measured against the vertical, so they coincide.
    const double cos_angle = -dz / d; // positive when the PD is below the LED
    if (cos_angle <= 0.0)
        return 0.0;

    const double angle_deg = std::acos(std::min(cos_angle, 1.0)) * 180.0 / std::numbers::pi;
    const double gain = concentrator_gain(angle_deg, rx.fov_deg, rx.refractive_index);
    if (gain == 0.0)
        return 0.0;

    const double l = lambert_order(tx.half_angle_deg);
    return (l + 1.0) * rx.area_m2 / (2.0 * std::numbers::pi * d2) * gain *
           std::pow(cos_angle, l) * cos_angle;
}

Eigen::MatrixXd build_channel_matrix(const room_geometry &room)
{
    const auto n_r = static_cast<Eigen::Index>(room.pds.size());
    const auto n_t = static_cast<Eigen::Index>(room.leds.size());
    if (n_r == 0 || n_t == 0)
        throw config_error("build_channel_matrix: empty LED or photodiode list");

    Eigen::MatrixXd h(n_r, n_t);
    for (Eigen::Index r = 0; r < n_r; ++r)
        for (Eigen::Index c = 0; c < n_t; ++c)
            h(r, c) = los_gain(room.leds[static_cast<std::size_t>(c)],
                               room.pds[static_cast<std::size_t>(r)]);
    return h;
}

} // namespace gdc
