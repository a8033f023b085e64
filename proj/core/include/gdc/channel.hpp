// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gdc/geometry.hpp"

namespace gdc
{

// Room-scale transmitter/receiver layout. The channel is deterministic:
// line-of-sight gains only, no reflections, no temporal dispersion.
struct room_geometry
{
    std::vector<led> leds;
    std::vector<photodiode> pds;
};

// N_R x N_t matrix of LOS gains, one row per photodiode.
Eigen::MatrixXd build_channel_matrix(const room_geometry &room);

} // namespace gdc
