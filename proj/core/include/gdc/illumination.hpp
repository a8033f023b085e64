// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include "gdc/codebook.hpp"
#include "gdc/geometry.hpp"

namespace gdc
{

struct illumination_grid
{
    unsigned nx = 0;
    unsigned ny = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;
    double z = 0.0;
    std::vector<double> values; // row-major, values[iy * nx + ix]

    double x_at(unsigned ix) const;
    double y_at(unsigned iy) const;
};

// Long-run average illuminance on a horizontal observation plane.
// Each LED contributes its Lambertian radiant profile weighted by its
// activation probability and the effective intensity swing; receiver-side
// optics play no role here since the metric describes perceived light,
// not the photodetector.
illumination_grid illuminance_map(const std::vector<led> &leds,
                                  const std::vector<double> &activation_probs, double eta_e,
                                  unsigned nx, unsigned ny, double x_min, double x_max,
                                  double y_min, double y_max, double z);

// Uniformity of an illuminance field: minimum over mean. 1 is perfectly
// flat, small values mean dark spots.
double uniformity_ratio(const illumination_grid &grid);

// Uniformity of the codebook-driven field normalised by the field of a
// hypothetical scheme that activates every LED with equal probability.
// Values near 1 mean the pattern selection costs almost no uniformity.
double normalized_uniformity(const std::vector<led> &leds,
                             const std::vector<double> &activation_probs, double eta_e,
                             unsigned nx, unsigned ny, double x_min, double x_max, double y_min,
                             double y_max, double z);

} // namespace gdc
